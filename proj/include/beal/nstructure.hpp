#pragma once

#include <optional>
#include <vector>

#include "beal/algebra.hpp"
#include "beal/rational.hpp"
#include "beal/subset.hpp"

namespace beal {

/// Negative-valued function f: X -> [-1, 0]; f(x) = values()[x].
class NFunction {
 public:
  NFunction() = default;
  /// Throws InputError if any value lies outside [-1, 0].
  explicit NFunction(std::vector<Rational> values);

  static NFunction constant(std::size_t n, const Rational& v) { return NFunction(std::vector<Rational>(n, v)); }
  /// -1 on the subset, 0 elsewhere.
  static NFunction characteristic(const Subset& s);

  std::size_t size() const { return values_.size(); }
  const Rational& operator()(Element x) const { return values_[x]; }
  const std::vector<Rational>& values() const { return values_; }

  /// Distinct values, ascending.
  std::vector<Rational> image() const;

  friend bool operator==(const NFunction&, const NFunction&) = default;

 private:
  std::vector<Rational> values_;
};

/// Throws InputError unless k lies in (-1, 0].
void require_k_range(const Rational& k);

/// Throws InputError unless f is defined on exactly the algebra's elements.
void require_same_universe(const BEAlgebra& a, const NFunction& f);

/// Closed cut C(f;t) = {x : f(x) <= t}, t in [-1, 0].
Subset cut(const NFunction& f, const Rational& t);

/// Provenance bits for grid points.
enum GridSource : unsigned {
  kBoundary = 1U << 0,   // -1 or 0
  kImage = 1U << 1,      // a value of f
  kReflected = 1U << 2,  // -1-k-v for an image value v
  kBeta = 1U << 3,       // (-k-1)/2
  kWindow = 1U << 4,     // caller-supplied interval endpoint
  kMidpoint = 1U << 5,   // representative of an open interval between breakpoints
};

struct GridPoint {
  Rational value;
  unsigned sources = 0;
  bool is_breakpoint() const { return (sources & kMidpoint) == 0; }
};

/// Finite set of thresholds that decides every comparison between t and
/// the quantities f(x), -1-k-f(x), (-k-1)/2: breakpoints plus one midpoint
/// per open gap, all inside [-1, 0], ascending.
class ThresholdGrid {
 public:
  explicit ThresholdGrid(std::vector<GridPoint> points) : points_(std::move(points)) {}

  const std::vector<GridPoint>& points() const { return points_; }
  std::vector<Rational> breakpoints() const;
  std::vector<Rational> midpoints() const;

 private:
  std::vector<GridPoint> points_;
};

/// Grid for f alone (k absent) or the k-aware grid. Extra breakpoints are
/// clipped to [-1, 0] and tagged kWindow.
ThresholdGrid critical_thresholds(const NFunction& f, const std::optional<Rational>& k,
                                  const std::vector<Rational>& extra = {});

/// All cuts at image values are empty or ideals. Cuts are constant between
/// consecutive image values and empty below the least one, so this decides
/// the condition for every t in [-1, 0]. Witness: clause "n-ideal/<ideal clause>",
/// threshold t, elements from the ideal witness.
Verdict is_n_ideal(const BEAlgebra& a, const NFunction& f);

/// The point N-structure x/t with t in [-1, 0).
struct PointAssertion {
  Element x;
  Rational t;
  /// Throws InputError unless t lies in [-1, 0).
  PointAssertion(Element x, Rational t);
};

/// x/t [e] f : f(x) <= t.
bool employed(const NFunction& f, const PointAssertion& p);

/// x/t [c_k] f : f(x) + t + k + 1 < 0.
bool k_employed(const NFunction& f, const PointAssertion& p, const Rational& k);

/// x/t ([e] or [c_k]) f.
bool e_or_ck(const NFunction& f, const PointAssertion& p, const Rational& k);

/// Q(f;t) = {x : f(x) + t + k + 1 < 0}; t in [-1, 0), k in (-1, 0].
Subset q_set(const NFunction& f, const Rational& t, const Rational& k);

/// [f]_t = C(f;t) united with {x : f(x) + t + k + 1 <= 0}.
Subset level_set(const NFunction& f, const Rational& t, const Rational& k);

}  // namespace beal

namespace beal {

/// Consequences every N-ideal satisfies: f(1) <= f(x); f((x*y)*y) <= f(x);
/// f(y) <= max{f(x), f(x*y)}; x <= y => f(y) <= f(x). Hypothesis: is_n_ideal.
TheoremReport check_n_ideal_consequences(const BEAlgebra& a, const NFunction& f);

}  // namespace beal
