#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beal/rational.hpp"

namespace beal {

using Element = unsigned;

/// A decision plus, when it is negative, the lexicographically first
/// instance of the violated condition.
struct Verdict {
  bool holds = true;
  std::string clause;                // which defining condition failed
  std::vector<Element> elements;     // witness tuple in the clause's variable order
  std::optional<Rational> threshold; // t, when the clause quantifies thresholds
  std::optional<Rational> threshold2;  // r, for two-threshold clauses

  explicit operator bool() const { return holds; }

  static Verdict pass() { return {}; }
  static Verdict fail(std::string clause, std::vector<Element> elements,
                      std::optional<Rational> t = std::nullopt,
                      std::optional<Rational> r = std::nullopt) {
    return Verdict{false, std::move(clause), std::move(elements), std::move(t), std::move(r)};
  }
};

}  // namespace beal

namespace beal {

/// Outcome of checking one theorem instance: "hypotheses => conclusion".
/// The conclusion is evaluated even when the hypotheses are unmet so that
/// negative controls can be observed; such instances pass vacuously.
struct TheoremReport {
  std::string theorem;
  bool hypotheses_met = false;
  bool conclusion_holds = true;
  bool normative = true;  // false when run outside the theorem's stated range
  Verdict witness;        // first conclusion violation, if any

  bool passed() const { return !hypotheses_met || conclusion_holds; }
  bool vacuous() const { return !hypotheses_met; }
};

}  // namespace beal
