#include "beal/ideals.hpp"

#include <algorithm>
#include <sstream>

#include "beal/error.hpp"

namespace beal {

Subset::Subset(std::size_t universe, std::initializer_list<Element> members) : universe_(universe) {
  for (Element x : members) {
    if (x >= universe) throw InputError("subset member out of range");
    insert(x);
  }
}

Subset Subset::of(const BEAlgebra& a, std::initializer_list<Element> members) {
  return Subset(a.size(), members);
}

std::vector<Element> Subset::members() const {
  std::vector<Element> out;
  for (Element x = 0; x < universe_; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string format_subset(const BEAlgebra& a, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s.members()) {
    if (!first) out += ',';
    out += a.name(x);
    first = false;
  }
  return out + "}";
}

Subset parse_subset(const BEAlgebra& a, const std::string& csv) {
  Subset s(a.size());
  std::stringstream in(csv);
  std::string label;
  while (std::getline(in, label, ',')) {
    const auto b = label.find_first_not_of(" \t");
    const auto e = label.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    label = label.substr(b, e - b + 1);
    const auto idx = a.index_of(label);
    if (!idx) throw InputError("unknown element label '" + label + "' in subset");
    s.insert(*idx);
  }
  return s;
}

namespace {

void check_candidate(const BEAlgebra& a, const Subset& ideal) {
  if (ideal.universe() != a.size()) throw InputError("subset belongs to an algebra of a different size");
  if (ideal.empty()) throw InputError("ideal candidate must be non-empty");
}

}  // namespace

Verdict is_ideal_def(const BEAlgebra& a, const Subset& ideal) {
  check_candidate(a, ideal);
  const auto n = static_cast<Element>(a.size());
  const auto members = ideal.members();
  for (Element x = 0; x < n; ++x) {
    for (Element s : members) {
      if (!ideal.contains(a.mul(x, s))) return Verdict::fail("ideal(1)", {x, s});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element s : members) {
      for (Element q : members) {
        if (!ideal.contains(a.mul(a.mul(s, a.mul(q, x)), x))) return Verdict::fail("ideal(2)", {x, s, q});
      }
    }
  }
  return Verdict::pass();
}

Verdict is_ideal_lemma(const BEAlgebra& a, const Subset& ideal) {
  check_candidate(a, ideal);
  if (!ideal.contains(BEAlgebra::unit())) return Verdict::fail("lemma(1)", {});
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!ideal.contains(y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (ideal.contains(a.mul(x, a.mul(y, z))) && !ideal.contains(a.mul(x, z))) {
          return Verdict::fail("lemma(2)", {x, y, z});
        }
      }
    }
  }
  return Verdict::pass();
}

IdealFamily enumerate_ideals(const BEAlgebra& a, std::size_t size_cap) {
  const std::size_t n = a.size();
  if (n > size_cap || n >= 64) {
    throw InputError("algebra of size " + std::to_string(n) + " exceeds the ideal enumeration cap of " +
                     std::to_string(size_cap));
  }
  IdealFamily family;
  // Every ideal contains s*s = 1, so only masks with bit 0 set are candidates.
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; mask += 2) {
    Subset s(n, mask);
    if (is_ideal_def(a, s)) family.push_back(s);
  }
  std::sort(family.begin(), family.end(), [](const Subset& l, const Subset& r) { return canonical_less(l, r); });
  return family;
}

}  // namespace beal
