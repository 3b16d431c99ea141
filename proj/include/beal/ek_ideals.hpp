#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beal/algebra.hpp"
#include "beal/nstructure.hpp"

namespace beal {

/// The parameter k of [c_k], with the boundary beta = (-k-1)/2 cached.
class EkParameters {
 public:
  /// Throws InputError unless -1 < k <= 0.
  explicit EkParameters(Rational k);
  const Rational& k() const { return k_; }
  const Rational& beta() const { return beta_; }

 private:
  Rational k_;
  Rational beta_;
};

enum class EkMethod { kDefinition, kTh4, kTh6, kLevels };

const char* method_name(EkMethod m);
/// "def", "th4", "th6", "levels". Throws InputError otherwise.
EkMethod parse_method(const std::string& s);

struct EkVerdict {
  EkMethod method = EkMethod::kDefinition;
  Verdict verdict;
  bool holds() const { return verdict.holds; }
};

/// Half-open threshold window [lo, hi) restricting t and r in the definition.
struct ThresholdWindow {
  Rational lo;
  Rational hi;
};

/// Point-wise definition:
///   (1) y/t [e] f                 => (x*y)/t ([e] or [c_k]) f
///   (2) x/t [e] f, y/r [e] f      => ((x*(y*z))*z)/max{t,r} ([e] or [c_k]) f
/// for all x, y, z and t, r in [-1, 0) (or in the window). Only s = max{t,r}
/// reaches the consequent, so one threshold sweep over the k-aware grid is
/// exact. Witness clause "def(1)" (x, y; t) or "def(2)" (x, y, z; t = r).
EkVerdict is_ek_ideal_definition(const BEAlgebra& a, const NFunction& f, const EkParameters& p,
                                 const std::optional<ThresholdWindow>& window = std::nullopt);

/// Closed form:
///   (2.1) f(x*y) <= max{f(y), beta}
///   (2.2) f((x*(y*z))*z) <= max{f(x), f(y), beta}
EkVerdict is_ek_ideal_th4(const BEAlgebra& a, const NFunction& f, const EkParameters& p);

/// Transitive algebras only (PreconditionError otherwise):
///   (1) f(1) <= max{f(x), beta}
///   (2) f(x*z) <= max{f(x*(y*z)), f(y), beta}
EkVerdict is_ek_ideal_th6(const BEAlgebra& a, const NFunction& f, const EkParameters& p);

/// Transitive algebras only: every [f]_t, t in [-1, 0), is empty or an ideal.
EkVerdict is_ek_ideal_levels(const BEAlgebra& a, const NFunction& f, const EkParameters& p);

EkVerdict is_ek_ideal(const BEAlgebra& a, const NFunction& f, const EkParameters& p, EkMethod method);

/// Grid points at which the definition (or the level-set test) fails. Used
/// to detect violations confined to exact breakpoints.
std::vector<GridPoint> violating_thresholds(const BEAlgebra& a, const NFunction& f, const EkParameters& p,
                                            EkMethod method);

/// f(1) <= max{f(x), beta}; f((x*y)*y) <= max{f(x), beta};
/// x <= y => f(y) <= max{f(x), beta}. Hypothesis: f is an ek-ideal.
TheoremReport check_th5(const BEAlgebra& a, const NFunction& f, const EkParameters& p);

/// Hypotheses: the two closed-form inequalities of is_ek_ideal_th6 (no
/// transitivity needed). Conclusion: x <= y => f(y) <= max{f(x), beta}.
TheoremReport check_pro2(const BEAlgebra& a, const NFunction& f, const EkParameters& p);

/// Transitive algebras only. Hypotheses: ek-ideal and f(1) > beta.
/// Conclusion: f is an N-ideal.
TheoremReport check_n_ideal_promotion(const BEAlgebra& a, const NFunction& f, const EkParameters& p);

/// Transitive algebras only, k in (-1/2, 0] unless exploratory (then the
/// report is marked non-normative). Hypothesis: ek-ideal. Conclusion:
/// Q(f;t) is empty or an ideal for every t in [-1, beta).
TheoremReport check_q_theorem(const BEAlgebra& a, const NFunction& f, const EkParameters& p,
                              bool exploratory = false);

}  // namespace beal
