#include "beal/fixtures.hpp"

namespace beal::fixtures {

namespace {

Rational r(const char* s) { return Rational::parse(s); }

NFunction function_of(std::initializer_list<const char*> values) {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(r(s));
  return NFunction(std::move(v));
}

}  // namespace

BEAlgebra example1_algebra() {
  return BEAlgebra::from_labels({"1", "α", "h", "m", "0"}, {
                                    {"1", "α", "h", "m", "0"},
                                    {"1", "1", "α", "m", "m"},
                                    {"1", "1", "1", "m", "m"},
                                    {"1", "α", "h", "1", "α"},
                                    {"1", "1", "α", "1", "1"},
                                });
}

NFunction example1_function() { return function_of({"-0.7", "-0.7", "-0.7", "-0.2", "-0.2"}); }

std::vector<ClaimedCut> example1_claimed_cuts() {
  return {
      {r("-0.7"), true, r("0"), true, {"1", "α", "h"}},
      {r("-1"), true, r("-0.7"), false, {}},
  };
}

BEAlgebra example2_algebra() {
  return BEAlgebra::from_labels({"1", "γ", "0", "m", "ω"}, {
                                    {"1", "γ", "0", "m", "ω"},
                                    {"1", "1", "γ", "m", "m"},
                                    {"1", "1", "1", "m", "m"},
                                    {"1", "γ", "0", "1", "γ"},
                                    {"1", "1", "γ", "1", "1"},
                                });
}

NFunction example2_function() { return function_of({"-0.9", "-0.8", "-0.7", "-0.9", "-0.8"}); }

ThresholdWindow example2_window() { return {r("-0.7"), r("-0.3")}; }

std::vector<Rational> example2_k_grid() {
  std::vector<Rational> ks;
  for (int hundredths = -95; hundredths <= -45; hundredths += 5) ks.emplace_back(hundredths, 100);
  return ks;
}

BEAlgebra b2() { return BEAlgebra::from_labels({"1", "a"}, {{"1", "a"}, {"1", "1"}}); }

}  // namespace beal::fixtures
