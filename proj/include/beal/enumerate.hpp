#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "beal/algebra.hpp"
#include "beal/nstructure.hpp"

namespace beal {

enum class AlgebraFilter { kNone, kTransitive, kSelfDistributive };

struct EnumerationConfig {
  std::size_t size = 1;
  AlgebraFilter filter = AlgebraFilter::kNone;
  bool up_to_iso = false;
  unsigned workers = 1;
  std::size_t size_cap = 6;
};

/// Row-major Cayley table over indices with the unit at 0.
using Table = std::vector<Element>;

/// Every labelled BE-table of size n, in depth-first order. Row 0, column 0
/// and the diagonal are forced by V3/V2/V1; the remaining (n-1)(n-2) cells
/// are filled row-major and a branch is cut as soon as a V4 instance whose
/// operands are all assigned fails. Work is split by the value of the first
/// free cell; buckets are concatenated in value order, so the result does
/// not depend on the worker count.
std::vector<Table> enumerate_tables(std::size_t n, unsigned workers = 1);

/// Streams the same tables in the same order on the calling thread.
void visit_tables(std::size_t n, const std::function<void(const Table&)>& visit);

/// Lexicographically least table over all relabellings that fix the unit.
Table canonical_form(const BEAlgebra& a);
Table canonical_form(std::size_t n, const Table& t);

/// Labelled algebras (DFS order) or, with up_to_iso, one canonical
/// representative per class in ascending table order. Throws InputError
/// when size is 0 or above size_cap.
std::vector<BEAlgebra> enumerate_algebras(const EnumerationConfig& config);

/// Number of algebras enumerate_algebras would return, without storing
/// labelled tables.
std::size_t count_algebras(const EnumerationConfig& config);

/// Streams what enumerate_algebras returns, in the same order.
void visit_algebras(const EnumerationConfig& config, const std::function<void(const BEAlgebra&)>& visit);

/// Size of the automorphism-free orbit of a table under unit-fixing
/// relabellings (number of distinct relabelled tables).
std::size_t orbit_size(std::size_t n, const Table& t);

inline constexpr std::uint64_t kMaxExhaustiveFunctions = 2'000'000;

/// Denominator m of a grid step 1/m. Throws InputError otherwise.
unsigned step_denominator(const Rational& step);

/// All (m+1)^n functions with values in {0, -1/m, ..., -1}, ordered
/// lexicographically by element (value index 0 = 0, index m = -1).
/// Throws InputError when the count exceeds kMaxExhaustiveFunctions.
std::vector<NFunction> enumerate_n_functions(std::size_t n, const Rational& step);

/// count functions drawn uniformly from the same grid with a fixed seed.
std::vector<NFunction> sample_n_functions(std::size_t n, const Rational& step, std::size_t count,
                                          std::uint64_t seed);

}  // namespace beal
