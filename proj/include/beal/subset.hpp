#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "beal/verdict.hpp"

namespace beal {

class BEAlgebra;

/// A set of element indices of one algebra, as a membership bitmask.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe, std::uint64_t mask = 0) : universe_(universe), mask_(mask) {}
  Subset(std::size_t universe, std::initializer_list<Element> members);

  static Subset full(std::size_t universe) {
    return Subset(universe, universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1);
  }
  static Subset of(const BEAlgebra& a, std::initializer_list<Element> members);

  std::size_t universe() const { return universe_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(Element x) const { return (mask_ >> x) & 1U; }
  void insert(Element x) { mask_ |= std::uint64_t{1} << x; }
  bool empty() const { return mask_ == 0; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool is_subset_of(const Subset& o) const { return (mask_ & ~o.mask_) == 0; }
  std::vector<Element> members() const;

  Subset operator|(const Subset& o) const { return Subset(universe_, mask_ | o.mask_); }

  friend bool operator==(const Subset&, const Subset&) = default;

  /// Canonical family order: by cardinality, then by mask value.
  friend bool canonical_less(const Subset& a, const Subset& b) {
    const auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a.mask_ < b.mask_;
  }

 private:
  std::size_t universe_ = 0;
  std::uint64_t mask_ = 0;
};

/// "{1,a,b}" using the algebra's labels; "{}" for the empty set.
std::string format_subset(const BEAlgebra& a, const Subset& s);

/// Parses "1,a,b" against the algebra's labels. Throws InputError.
Subset parse_subset(const BEAlgebra& a, const std::string& csv);

}  // namespace beal
