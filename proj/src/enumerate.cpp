#include "beal/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "beal/error.hpp"

namespace beal {

namespace {

constexpr Element kUnset = ~Element{0};

class TableSearch {
 public:
  explicit TableSearch(std::size_t n) : n_(static_cast<Element>(n)), t_(n * n, kUnset) {
    for (Element y = 0; y < n_; ++y) t_[y] = y;         // 1*y = y
    for (Element x = 0; x < n_; ++x) {
      t_[x * n_] = 0;                                    // x*1 = 1
      t_[x * n_ + x] = 0;                                // x*x = 1
    }
    for (Element x = 1; x < n_; ++x) {
      for (Element y = 1; y < n_; ++y) {
        if (x != y) free_.push_back(x * n_ + y);
      }
    }
  }

  std::size_t free_cells() const { return free_.size(); }
  Element order() const { return n_; }

  // Runs the DFS with the first free cell fixed to `first` (ignored when
  // there are no free cells), calling visit(table) for every solution.
  template <typename Visit>
  void run(Element first, Visit&& visit) {
    if (free_.empty()) {
      visit(t_);
      return;
    }
    if (assign(0, first)) descend(1, visit);
    clear(0);
  }

 private:
  Element at(Element x, Element y) const { return t_[x * n_ + y]; }

  // V4 instance x*(y*z) = y*(x*z); false only when fully determined and violated.
  bool instance_ok(Element x, Element y, Element z) const {
    const Element yz = at(y, z), xz = at(x, z);
    if (yz == kUnset || xz == kUnset) return true;
    const Element l = at(x, yz), r = at(y, xz);
    return l == kUnset || r == kUnset || l == r;
  }

  // Instances reading cell (a,b): as an inner product (t,a,b) / (a,t,b),
  // or as an outer product a*(u*v) with u*v = b.
  bool consistent_after(Element a, Element b) const {
    for (Element t = 0; t < n_; ++t) {
      if (!instance_ok(t, a, b)) return false;
    }
    for (Element u = 0; u < n_; ++u) {
      for (Element v = 0; v < n_; ++v) {
        if (at(u, v) == b && !instance_ok(a, u, v)) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t idx, Element value) {
    const auto cell = free_[idx];
    t_[cell] = value;
    return consistent_after(cell / n_, cell % n_);
  }
  void clear(std::size_t idx) { t_[free_[idx]] = kUnset; }

  template <typename Visit>
  void descend(std::size_t idx, Visit& visit) {
    if (idx == free_.size()) {
      visit(t_);
      return;
    }
    for (Element v = 0; v < n_; ++v) {
      if (assign(idx, v)) descend(idx + 1, visit);
    }
    clear(idx);
  }

  Element n_;
  Table t_;
  std::vector<std::size_t> free_;
};

void require_size(const EnumerationConfig& c) {
  if (c.size == 0 || c.size > c.size_cap) {
    throw InputError("enumeration size " + std::to_string(c.size) + " outside [1, " + std::to_string(c.size_cap) +
                     "]");
  }
}

// Filters on raw tables; avoids building a BEAlgebra per candidate.
bool keep(std::size_t n, const Table& t, AlgebraFilter filter) {
  if (filter == AlgebraFilter::kNone) return true;
  auto at = [&](std::size_t x, std::size_t y) -> std::size_t { return t[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const bool ok = filter == AlgebraFilter::kTransitive ? at(at(y, z), at(at(x, y), at(x, z))) == 0
                                                             : at(x, at(y, z)) == at(at(x, y), at(x, z));
        if (!ok) return false;
      }
    }
  }
  return true;
}

Table relabel(std::size_t n, const Table& t, const std::vector<Element>& perm) {
  Table out(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out[perm[x] * n + perm[y]] = perm[t[x * n + y]];
  }
  return out;
}

// Runs one DFS per value of the first free cell on up to `workers` threads.
template <typename PerBucket>
void for_each_bucket(std::size_t n, unsigned workers, PerBucket&& per_bucket) {
  if (n == 0) throw InputError("enumeration size must be positive");
  if (TableSearch(n).free_cells() == 0) {
    TableSearch search(n);
    per_bucket(search, Element{0});
    return;
  }
  std::atomic<Element> next{0};
  auto work = [&] {
    TableSearch search(n);
    for (Element v = next++; v < n; v = next++) per_bucket(search, v);
  };
  const unsigned threads = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<Table> enumerate_tables(std::size_t n, unsigned workers) {
  std::vector<std::vector<Table>> buckets(n);
  for_each_bucket(n, workers, [&](TableSearch& search, Element v) {
    search.run(v, [&](const Table& t) { buckets[v].push_back(t); });
  });
  std::vector<Table> out;
  for (auto& b : buckets) std::move(b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void visit_tables(std::size_t n, const std::function<void(const Table&)>& visit) {
  if (n == 0) throw InputError("enumeration size must be positive");
  TableSearch search(n);
  if (search.free_cells() == 0) {
    search.run(0, visit);
    return;
  }
  for (Element v = 0; v < n; ++v) search.run(v, visit);
}

Table canonical_form(std::size_t n, const Table& t) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Table best = t;
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    auto cand = relabel(n, t, perm);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

Table canonical_form(const BEAlgebra& a) {
  return canonical_form(a.size(), Table(a.table().begin(), a.table().end()));
}

std::size_t orbit_size(std::size_t n, const Table& t) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Table> seen{t};
  while (std::next_permutation(perm.begin() + 1, perm.end())) seen.insert(relabel(n, t, perm));
  return seen.size();
}

namespace {

std::set<Table> canonical_classes(const EnumerationConfig& c) {
  std::vector<std::set<Table>> buckets(c.size);
  for_each_bucket(c.size, c.workers, [&](TableSearch& search, Element v) {
    search.run(v, [&](const Table& t) {
      if (keep(c.size, t, c.filter)) buckets[v].insert(canonical_form(c.size, t));
    });
  });
  std::set<Table> all;
  for (auto& b : buckets) all.merge(b);
  return all;
}

}  // namespace

std::vector<BEAlgebra> enumerate_algebras(const EnumerationConfig& config) {
  require_size(config);
  const auto n = config.size;
  std::vector<BEAlgebra> out;
  if (config.up_to_iso) {
    for (const auto& t : canonical_classes(config)) out.push_back(BEAlgebra::from_table(n, t));
    return out;
  }
  for (auto& t : enumerate_tables(n, config.workers)) {
    if (keep(n, t, config.filter)) out.push_back(BEAlgebra::from_table(n, std::move(t)));
  }
  return out;
}

std::size_t count_algebras(const EnumerationConfig& config) {
  require_size(config);
  if (config.up_to_iso) return canonical_classes(config).size();
  std::vector<std::size_t> counts(config.size, 0);
  for_each_bucket(config.size, config.workers, [&](TableSearch& search, Element v) {
    search.run(v, [&](const Table& t) { counts[v] += keep(config.size, t, config.filter); });
  });
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

void visit_algebras(const EnumerationConfig& config, const std::function<void(const BEAlgebra&)>& visit) {
  require_size(config);
  if (config.up_to_iso) {
    for (const auto& t : canonical_classes(config)) visit(BEAlgebra::from_table(config.size, t));
    return;
  }
  visit_tables(config.size, [&](const Table& t) {
    if (keep(config.size, t, config.filter)) visit(BEAlgebra::from_table(config.size, t));
  });
}

unsigned step_denominator(const Rational& step) {
  const auto& q = step.raw();
  if (q.get_num() != 1 || q.get_den() > 1'000'000) {
    throw InputError("grid step must be 1/m for a positive integer m, got " + step.str());
  }
  return static_cast<unsigned>(q.get_den().get_ui());
}

namespace {

std::vector<Rational> grid_values(unsigned m) {
  std::vector<Rational> v;
  for (unsigned i = 0; i <= m; ++i) v.emplace_back(-static_cast<std::int64_t>(i), m);
  return v;
}

}  // namespace

std::vector<NFunction> enumerate_n_functions(std::size_t n, const Rational& step) {
  const unsigned m = step_denominator(step);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= m + 1;
    if (total > kMaxExhaustiveFunctions) {
      throw InputError("too many N-functions for exhaustive enumeration; use sampling");
    }
  }
  const auto values = grid_values(m);
  std::vector<NFunction> out;
  out.reserve(total);
  std::vector<unsigned> digits(n, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::vector<Rational> f;
    f.reserve(n);
    for (unsigned d : digits) f.push_back(values[d]);
    out.emplace_back(std::move(f));
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] <= m) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::vector<NFunction> sample_n_functions(std::size_t n, const Rational& step, std::size_t count,
                                          std::uint64_t seed) {
  const unsigned m = step_denominator(step);
  const auto values = grid_values(m);
  std::mt19937_64 rng(seed);
  std::vector<NFunction> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Rational> f;
    f.reserve(n);
    for (std::size_t i = 0; i < n; ++i) f.push_back(values[rng() % (m + 1)]);
    out.emplace_back(std::move(f));
  }
  return out;
}

}  // namespace beal
