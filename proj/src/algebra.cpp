#include "beal/algebra.hpp"

#include <algorithm>
#include <unordered_map>

#include "beal/error.hpp"

namespace beal {

namespace {

// Normalized permutation: position 0 holds the original index of "1",
// the remaining labels keep their declared order.
std::vector<std::size_t> unit_first_order(const std::vector<std::string>& names) {
  const auto it = std::find(names.begin(), names.end(), "1");
  if (it == names.end()) throw InputError("no element labelled \"1\"");
  const auto unit_pos = static_cast<std::size_t>(it - names.begin());
  std::vector<std::size_t> order{unit_pos};
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != unit_pos) order.push_back(i);
  }
  return order;
}

struct Normalized {
  std::vector<std::string> names;
  std::vector<Element> table;
};

Normalized normalize(const std::vector<std::string>& names,
                     const std::vector<std::vector<std::string>>& table) {
  const std::size_t n = names.size();
  if (n == 0) throw InputError("algebra has no elements");
  if (n > 64) throw InputError("algebra too large (more than 64 elements)");

  std::unordered_map<std::string, std::size_t> original;
  for (std::size_t i = 0; i < n; ++i) {
    if (!original.emplace(names[i], i).second) throw InputError("duplicate element label '" + names[i] + "'");
  }
  const auto order = unit_first_order(names);
  std::vector<Element> new_index(n);
  for (std::size_t i = 0; i < n; ++i) new_index[order[i]] = static_cast<Element>(i);

  if (table.size() != n) {
    throw InputError("table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
  }
  Normalized out;
  out.table.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw InputError("table row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto hit = original.find(table[i][j]);
      if (hit == original.end()) throw InputError("unknown element label '" + table[i][j] + "' in table");
      out.table[new_index[i] * n + new_index[j]] = new_index[hit->second];
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.names.push_back(names[order[i]]);
  return out;
}

AxiomReport check_axioms(std::size_t n, std::span<const Element> t, const std::vector<std::string>& names) {
  AxiomReport r;
  auto at = [&](Element x, Element y) { return t[x * n + y]; };
  auto fail = [&](int axiom, std::initializer_list<Element> w) {
    r.passed[axiom] = false;
    for (Element e : w) r.witness[axiom].push_back(names[e]);
  };
  for (Element x = 0; x < n && r.passed[0]; ++x) {
    if (at(x, x) != 0) fail(0, {x});
  }
  for (Element x = 0; x < n && r.passed[1]; ++x) {
    if (at(x, 0) != 0) fail(1, {x});
  }
  for (Element y = 0; y < n && r.passed[2]; ++y) {
    if (at(0, y) != y) fail(2, {y});
  }
  for (Element x = 0; x < n && r.passed[3]; ++x) {
    for (Element y = 0; y < n && r.passed[3]; ++y) {
      for (Element z = 0; z < n && r.passed[3]; ++z) {
        if (at(x, at(y, z)) != at(y, at(x, z))) fail(3, {x, y, z});
      }
    }
  }
  return r;
}

std::string describe(const AxiomReport& r) {
  std::string s = "not a BE-algebra:";
  for (std::size_t i = 0; i < 4; ++i) {
    if (r.passed[i]) continue;
    s += std::string(" ") + AxiomReport::kNames[i] + " fails at (";
    for (std::size_t j = 0; j < r.witness[i].size(); ++j) s += (j ? "," : "") + r.witness[i][j];
    s += ")";
  }
  return s;
}

}  // namespace

AxiomError::AxiomError(AxiomReport report) : std::runtime_error(describe(report)), report_(std::move(report)) {}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i) {
    names.push_back(i <= 26 ? std::string(1, static_cast<char>('a' + i - 1)) : "e" + std::to_string(i));
  }
  return names;
}

AxiomReport validate_be_algebra(const std::vector<std::string>& names,
                                const std::vector<std::vector<std::string>>& table) {
  const auto norm = normalize(names, table);
  return check_axioms(names.size(), norm.table, norm.names);
}

AxiomReport validate_table(std::size_t n, std::span<const Element> table) {
  if (table.size() != n * n) throw InputError("table size does not match n*n");
  for (Element e : table) {
    if (e >= n) throw InputError("table entry out of range");
  }
  return check_axioms(n, table, default_names(n));
}

BEAlgebra BEAlgebra::from_labels(const std::vector<std::string>& names,
                                 const std::vector<std::vector<std::string>>& table) {
  auto norm = normalize(names, table);
  auto report = check_axioms(names.size(), norm.table, norm.names);
  if (!report.all_pass()) throw AxiomError(std::move(report));
  return BEAlgebra(names.size(), std::move(norm.table), std::move(norm.names));
}

BEAlgebra BEAlgebra::from_table(std::size_t n, std::vector<Element> table, std::vector<std::string> names) {
  if (n == 0) throw InputError("algebra has no elements");
  if (names.empty()) names = default_names(n);
  if (names.size() != n) throw InputError("label count does not match algebra size");
  if (names[0] != "1") throw InputError("index 0 must be labelled \"1\"");
  auto report = validate_table(n, table);
  if (!report.all_pass()) {
    // Re-label witnesses with the caller's names.
    const auto defaults = default_names(n);
    for (auto& w : report.witness) {
      for (auto& label : w) {
        label = names[std::find(defaults.begin(), defaults.end(), label) - defaults.begin()];
      }
    }
    throw AxiomError(std::move(report));
  }
  return BEAlgebra(n, std::move(table), std::move(names));
}

std::optional<Element> BEAlgebra::index_of(std::string_view label) const {
  const auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Verdict is_self_distributive(const BEAlgebra& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (a.mul(x, a.mul(y, z)) != a.mul(a.mul(x, y), a.mul(x, z))) {
          return Verdict::fail("self-distributivity", {x, y, z});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_transitive(const BEAlgebra& a) {
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (!a.leq(a.mul(y, z), a.mul(a.mul(x, y), a.mul(x, z)))) {
          return Verdict::fail("transitivity", {x, y, z});
        }
      }
    }
  }
  return Verdict::pass();
}

}  // namespace beal
