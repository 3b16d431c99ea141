#pragma once

#include <vector>

#include "beal/algebra.hpp"
#include "beal/subset.hpp"

namespace beal {

/// J(X), sorted canonically (cardinality, then mask).
using IdealFamily = std::vector<Subset>;

/// Ideal by definition:
///   (1) x*s in I            for all x in X, s in I
///   (2) (s*(q*x))*x in I    for all x in X, s, q in I
/// Witness clause is "ideal(1)" with (x, s) or "ideal(2)" with (x, s, q).
/// Throws InputError for an empty subset or a subset of another universe.
Verdict is_ideal_def(const BEAlgebra& a, const Subset& ideal);

/// Ideal by the unit/cancellation characterization:
///   1 in I, and y in I, x*(y*z) in I  =>  x*z in I.
/// Witness clause "lemma(1)" (no elements) or "lemma(2)" with (x, y, z).
Verdict is_ideal_lemma(const BEAlgebra& a, const Subset& ideal);

/// Empty-or-ideal test used by every cut-style characterization.
inline bool is_empty_or_ideal(const BEAlgebra& a, const Subset& s) {
  return s.empty() || is_ideal_def(a, s).holds;
}

inline constexpr std::size_t kDefaultIdealEnumerationCap = 20;

/// All nonempty subsets passing is_ideal_def, in canonical order.
/// Throws InputError when the algebra is larger than size_cap.
IdealFamily enumerate_ideals(const BEAlgebra& a, std::size_t size_cap = kDefaultIdealEnumerationCap);

}  // namespace beal
