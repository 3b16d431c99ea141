#include "beal/nstructure.hpp"

#include <algorithm>
#include <map>

#include "beal/error.hpp"
#include "beal/ideals.hpp"

namespace beal {

namespace {

const Rational kMinusOne{-1};
const Rational kZero{0};

void require_threshold(const Rational& t, bool allow_zero) {
  if (t < kMinusOne || t > kZero || (!allow_zero && t == kZero)) {
    throw InputError("threshold " + t.str() + (allow_zero ? " outside [-1, 0]" : " outside [-1, 0)"));
  }
}

}  // namespace

NFunction::NFunction(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& v : values_) {
    if (v < kMinusOne || v > kZero) throw InputError("N-function value " + v.str() + " outside [-1, 0]");
  }
}

NFunction NFunction::characteristic(const Subset& s) {
  std::vector<Rational> v(s.universe(), kZero);
  for (Element x : s.members()) v[x] = kMinusOne;
  return NFunction(std::move(v));
}

std::vector<Rational> NFunction::image() const {
  std::vector<Rational> img = values_;
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

void require_k_range(const Rational& k) {
  if (k <= kMinusOne || k > kZero) throw InputError("k = " + k.str() + " outside (-1, 0]");
}

void require_same_universe(const BEAlgebra& a, const NFunction& f) {
  if (f.size() != a.size()) {
    throw InputError("N-function has " + std::to_string(f.size()) + " values for an algebra of size " +
                     std::to_string(a.size()));
  }
}

Subset cut(const NFunction& f, const Rational& t) {
  require_threshold(t, true);
  Subset s(f.size());
  for (Element x = 0; x < f.size(); ++x) {
    if (f(x) <= t) s.insert(x);
  }
  return s;
}

std::vector<Rational> ThresholdGrid::breakpoints() const {
  std::vector<Rational> out;
  for (const auto& p : points_) {
    if (p.is_breakpoint()) out.push_back(p.value);
  }
  return out;
}

std::vector<Rational> ThresholdGrid::midpoints() const {
  std::vector<Rational> out;
  for (const auto& p : points_) {
    if (!p.is_breakpoint()) out.push_back(p.value);
  }
  return out;
}

ThresholdGrid critical_thresholds(const NFunction& f, const std::optional<Rational>& k,
                                  const std::vector<Rational>& extra) {
  if (k) require_k_range(*k);
  std::map<Rational, unsigned> marks;
  auto add = [&](const Rational& v, unsigned source) {
    if (v < kMinusOne || v > kZero) return;
    marks[v] |= source;
  };
  add(kMinusOne, kBoundary);
  add(kZero, kBoundary);
  for (const auto& v : f.values()) {
    add(v, kImage);
    if (k) add(kMinusOne - *k - v, kReflected);
  }
  if (k) add((-*k - Rational(1)) / Rational(2), kBeta);
  for (const auto& v : extra) add(v, kWindow);

  std::vector<GridPoint> points;
  const Rational two{2};
  for (auto it = marks.begin(); it != marks.end(); ++it) {
    if (it != marks.begin()) {
      const auto& prev = std::prev(it)->first;
      points.push_back({(prev + it->first) / two, kMidpoint});
    }
    points.push_back({it->first, it->second});
  }
  return ThresholdGrid(std::move(points));
}

Verdict is_n_ideal(const BEAlgebra& a, const NFunction& f) {
  require_same_universe(a, f);
  for (const auto& v : f.image()) {
    const auto c = cut(f, v);
    if (c.empty()) continue;
    auto w = is_ideal_def(a, c);
    if (!w) return Verdict::fail("n-ideal/" + w.clause, std::move(w.elements), v);
  }
  return Verdict::pass();
}

PointAssertion::PointAssertion(Element x_, Rational t_) : x(x_), t(std::move(t_)) { require_threshold(t, false); }

bool employed(const NFunction& f, const PointAssertion& p) { return f(p.x) <= p.t; }

bool k_employed(const NFunction& f, const PointAssertion& p, const Rational& k) {
  require_k_range(k);
  return (f(p.x) + p.t + k + Rational(1)).is_negative();
}

bool e_or_ck(const NFunction& f, const PointAssertion& p, const Rational& k) {
  require_k_range(k);
  return employed(f, p) || k_employed(f, p, k);
}

Subset q_set(const NFunction& f, const Rational& t, const Rational& k) {
  require_threshold(t, false);
  require_k_range(k);
  const Rational bound = kMinusOne - t - k;  // f(x) < -1-t-k
  Subset s(f.size());
  for (Element x = 0; x < f.size(); ++x) {
    if (f(x) < bound) s.insert(x);
  }
  return s;
}

Subset level_set(const NFunction& f, const Rational& t, const Rational& k) {
  require_threshold(t, false);
  require_k_range(k);
  const Rational bound = kMinusOne - t - k;
  Subset s(f.size());
  for (Element x = 0; x < f.size(); ++x) {
    if (f(x) <= t || f(x) <= bound) s.insert(x);
  }
  return s;
}

}  // namespace beal

namespace beal {

TheoremReport check_n_ideal_consequences(const BEAlgebra& a, const NFunction& f) {
  TheoremReport r;
  r.theorem = "n_ideal_consequences";
  r.hypotheses_met = is_n_ideal(a, f).holds;
  const auto n = static_cast<Element>(a.size());
  auto fail = [&](const char* clause, std::vector<Element> w) {
    r.conclusion_holds = false;
    r.witness = Verdict::fail(clause, std::move(w));
    return r;
  };
  for (Element x = 0; x < n; ++x) {
    if (f(BEAlgebra::unit()) > f(x)) return fail("unit-least", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f(a.mul(a.mul(x, y), y)) > f(x)) return fail("absorb", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f(y) > std::max(f(x), f(a.mul(x, y)))) return fail("modus-ponens", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.leq(x, y) && f(y) > f(x)) return fail("order", {x, y});
    }
  }
  return r;
}

}  // namespace beal
