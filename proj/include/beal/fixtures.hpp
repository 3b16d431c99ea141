#pragma once

#include <string>
#include <vector>

#include "beal/algebra.hpp"
#include "beal/ek_ideals.hpp"
#include "beal/nstructure.hpp"

namespace beal::fixtures {

/// Five-element algebra X = {1, α, h, m, 0} with the N-function
/// (-0.7, -0.7, -0.7, -0.2, -0.2).
BEAlgebra example1_algebra();
NFunction example1_function();

/// An interval of thresholds together with the cut a reference claims for it.
struct ClaimedCut {
  Rational lo;
  bool lo_closed = true;
  Rational hi;
  bool hi_closed = true;
  std::vector<std::string> members;

  bool contains(const Rational& t) const {
    return (lo_closed ? lo <= t : lo < t) && (hi_closed ? t <= hi : t < hi);
  }
};

/// The published piecewise cut display: {1,α,h} on [-0.7, 0], empty on [-1, -0.7).
std::vector<ClaimedCut> example1_claimed_cuts();

/// X = {1, γ, 0, m, ω} (same table shape as example 1) with
/// f = (-0.9, -0.8, -0.7, -0.9, -0.8).
BEAlgebra example2_algebra();
NFunction example2_function();
/// Thresholds t, r restricted to [-0.7, -0.3).
ThresholdWindow example2_window();
/// k in {-0.95, -0.90, ..., -0.45}, inside the published range (-1, -0.4).
std::vector<Rational> example2_k_grid();

/// The unique two-element BE-algebra {1, a}.
BEAlgebra b2();

}  // namespace beal::fixtures
