#include "beal/ek_ideals.hpp"

#include <algorithm>

#include "beal/error.hpp"
#include "beal/ideals.hpp"

namespace beal {

namespace {

const Rational kOne{1};
const Rational kZero{0};

void require_transitive(const BEAlgebra& a, const char* what) {
  if (!is_transitive(a)) throw PreconditionError(std::string(what) + " requires a transitive BE-algebra");
}

const Rational& max3(const Rational& a, const Rational& b, const Rational& c) {
  return std::max(std::max(a, b), c);
}

// Grid thresholds in [-1, 0) (restricted to the window when given), with
// per-element truth tables for "f(x) <= t" and "x/t ([e] or [c_k]) f".
struct ThresholdTables {
  std::vector<GridPoint> points;
  std::vector<std::vector<char>> emp;  // [x][i]: f(x) <= t_i
  std::vector<std::vector<char>> sat;  // [x][i]: x/t_i ([e] or [c_k]) f

  ThresholdTables(const NFunction& f, const EkParameters& p, const std::optional<ThresholdWindow>& window) {
    std::vector<Rational> extra;
    if (window) extra = {window->lo, window->hi};
    const auto grid = critical_thresholds(f, p.k(), extra);
    for (const auto& g : grid.points()) {
      if (!(g.value < kZero)) continue;
      if (window && (g.value < window->lo || !(g.value < window->hi))) continue;
      points.push_back(g);
    }
    emp.assign(f.size(), std::vector<char>(points.size()));
    sat.assign(f.size(), std::vector<char>(points.size()));
    for (Element x = 0; x < f.size(); ++x) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        const PointAssertion pa(x, points[i].value);
        emp[x][i] = employed(f, pa);
        sat[x][i] = e_or_ck(f, pa, p.k());
      }
    }
  }
};

// Calls on_fail(clause, elements, grid index) for every violated instance;
// stops early when on_fail returns true.
template <typename OnFail>
void scan_definition(const BEAlgebra& a, const ThresholdTables& tt, OnFail&& on_fail) {
  const auto n = static_cast<Element>(a.size());
  const std::size_t m = tt.points.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element w = a.mul(x, y);
      for (std::size_t i = 0; i < m; ++i) {
        if (tt.emp[y][i] && !tt.sat[w][i]) {
          if (on_fail("def(1)", std::vector<Element>{x, y}, i)) return;
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const Element w = a.mul(a.mul(x, a.mul(y, z)), z);
        for (std::size_t i = 0; i < m; ++i) {
          if (tt.emp[x][i] && tt.emp[y][i] && !tt.sat[w][i]) {
            if (on_fail("def(2)", std::vector<Element>{x, y, z}, i)) return;
          }
        }
      }
    }
  }
}

std::vector<GridPoint> negative_grid(const NFunction& f, const EkParameters& p) {
  std::vector<GridPoint> out;
  const auto grid = critical_thresholds(f, p.k());
  for (const auto& g : grid.points()) {
    if (g.value < kZero) out.push_back(g);
  }
  return out;
}

}  // namespace

EkParameters::EkParameters(Rational k) : k_(std::move(k)) {
  require_k_range(k_);
  beta_ = (-k_ - kOne) / Rational(2);
}

const char* method_name(EkMethod m) {
  switch (m) {
    case EkMethod::kDefinition: return "def";
    case EkMethod::kTh4: return "th4";
    case EkMethod::kTh6: return "th6";
    case EkMethod::kLevels: return "levels";
  }
  return "?";
}

EkMethod parse_method(const std::string& s) {
  if (s == "def") return EkMethod::kDefinition;
  if (s == "th4") return EkMethod::kTh4;
  if (s == "th6") return EkMethod::kTh6;
  if (s == "levels") return EkMethod::kLevels;
  throw InputError("unknown method '" + s + "' (expected def, th4, th6, levels)");
}

EkVerdict is_ek_ideal_definition(const BEAlgebra& a, const NFunction& f, const EkParameters& p,
                                 const std::optional<ThresholdWindow>& window) {
  require_same_universe(a, f);
  if (window && !(window->lo < window->hi)) throw InputError("empty threshold window");
  const ThresholdTables tt(f, p, window);
  EkVerdict v{EkMethod::kDefinition, Verdict::pass()};
  scan_definition(a, tt, [&](const char* clause, std::vector<Element> w, std::size_t i) {
    const auto& t = tt.points[i].value;
    v.verdict = std::string_view(clause) == "def(1)" ? Verdict::fail(clause, std::move(w), t)
                                                     : Verdict::fail(clause, std::move(w), t, t);
    return true;
  });
  return v;
}

EkVerdict is_ek_ideal_th4(const BEAlgebra& a, const NFunction& f, const EkParameters& p) {
  require_same_universe(a, f);
  const auto n = static_cast<Element>(a.size());
  const auto& beta = p.beta();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f(a.mul(x, y)) > std::max(f(y), beta)) return {EkMethod::kTh4, Verdict::fail("th4(2.1)", {x, y})};
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (f(a.mul(a.mul(x, a.mul(y, z)), z)) > max3(f(x), f(y), beta)) {
          return {EkMethod::kTh4, Verdict::fail("th4(2.2)", {x, y, z})};
        }
      }
    }
  }
  return {EkMethod::kTh4, Verdict::pass()};
}

namespace {

// The two closed-form inequalities shared by TH6 and PRO2's hypotheses.
Verdict th6_inequalities(const BEAlgebra& a, const NFunction& f, const EkParameters& p, const char* prefix) {
  const auto n = static_cast<Element>(a.size());
  const auto& beta = p.beta();
  const std::string tag = prefix;
  for (Element x = 0; x < n; ++x) {
    if (f(BEAlgebra::unit()) > std::max(f(x), beta)) return Verdict::fail(tag + "(1)", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (f(a.mul(x, z)) > max3(f(a.mul(x, a.mul(y, z))), f(y), beta)) {
          return Verdict::fail(tag + "(2)", {x, y, z});
        }
      }
    }
  }
  return Verdict::pass();
}

}  // namespace

EkVerdict is_ek_ideal_th6(const BEAlgebra& a, const NFunction& f, const EkParameters& p) {
  require_same_universe(a, f);
  require_transitive(a, "th6 method");
  return {EkMethod::kTh6, th6_inequalities(a, f, p, "th6")};
}

EkVerdict is_ek_ideal_levels(const BEAlgebra& a, const NFunction& f, const EkParameters& p) {
  require_same_universe(a, f);
  require_transitive(a, "levels method");
  for (const auto& g : negative_grid(f, p)) {
    const auto s = level_set(f, g.value, p.k());
    if (s.empty()) continue;
    auto w = is_ideal_def(a, s);
    if (!w) return {EkMethod::kLevels, Verdict::fail("levels/" + w.clause, std::move(w.elements), g.value)};
  }
  return {EkMethod::kLevels, Verdict::pass()};
}

EkVerdict is_ek_ideal(const BEAlgebra& a, const NFunction& f, const EkParameters& p, EkMethod method) {
  switch (method) {
    case EkMethod::kDefinition: return is_ek_ideal_definition(a, f, p);
    case EkMethod::kTh4: return is_ek_ideal_th4(a, f, p);
    case EkMethod::kTh6: return is_ek_ideal_th6(a, f, p);
    case EkMethod::kLevels: return is_ek_ideal_levels(a, f, p);
  }
  throw InputError("unknown method");
}

std::vector<GridPoint> violating_thresholds(const BEAlgebra& a, const NFunction& f, const EkParameters& p,
                                            EkMethod method) {
  require_same_universe(a, f);
  std::vector<GridPoint> out;
  if (method == EkMethod::kDefinition) {
    const ThresholdTables tt(f, p, std::nullopt);
    std::vector<char> bad(tt.points.size());
    scan_definition(a, tt, [&](const char*, std::vector<Element>, std::size_t i) {
      bad[i] = 1;
      return false;
    });
    for (std::size_t i = 0; i < bad.size(); ++i) {
      if (bad[i]) out.push_back(tt.points[i]);
    }
  } else if (method == EkMethod::kLevels) {
    require_transitive(a, "levels method");
    for (const auto& g : negative_grid(f, p)) {
      if (!is_empty_or_ideal(a, level_set(f, g.value, p.k()))) out.push_back(g);
    }
  } else {
    throw InputError("violating_thresholds supports the def and levels methods only");
  }
  return out;
}

TheoremReport check_th5(const BEAlgebra& a, const NFunction& f, const EkParameters& p) {
  require_same_universe(a, f);
  TheoremReport r;
  r.theorem = "th5";
  r.hypotheses_met = is_ek_ideal_th4(a, f, p).holds();
  const auto n = static_cast<Element>(a.size());
  const auto& beta = p.beta();
  auto fail = [&](const char* clause, std::vector<Element> w) {
    r.conclusion_holds = false;
    r.witness = Verdict::fail(clause, std::move(w));
    return r;
  };
  for (Element x = 0; x < n; ++x) {
    if (f(BEAlgebra::unit()) > std::max(f(x), beta)) return fail("th5(1)", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (f(a.mul(a.mul(x, y), y)) > std::max(f(x), beta)) return fail("th5(2)", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.leq(x, y) && f(y) > std::max(f(x), beta)) return fail("th5-order", {x, y});
    }
  }
  return r;
}

TheoremReport check_pro2(const BEAlgebra& a, const NFunction& f, const EkParameters& p) {
  require_same_universe(a, f);
  TheoremReport r;
  r.theorem = "pro2";
  r.hypotheses_met = th6_inequalities(a, f, p, "pro2-hyp").holds;
  const auto n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.leq(x, y) && f(y) > std::max(f(x), p.beta())) {
        r.conclusion_holds = false;
        r.witness = Verdict::fail("pro2-order", {x, y});
        return r;
      }
    }
  }
  return r;
}

TheoremReport check_n_ideal_promotion(const BEAlgebra& a, const NFunction& f, const EkParameters& p) {
  require_same_universe(a, f);
  require_transitive(a, "N-ideal promotion");
  TheoremReport r;
  r.theorem = "n_ideal_promotion";
  r.hypotheses_met = f(BEAlgebra::unit()) > p.beta() && is_ek_ideal_th4(a, f, p).holds();
  r.witness = is_n_ideal(a, f);
  r.conclusion_holds = r.witness.holds;
  return r;
}

TheoremReport check_q_theorem(const BEAlgebra& a, const NFunction& f, const EkParameters& p, bool exploratory) {
  require_same_universe(a, f);
  require_transitive(a, "Q-set theorem");
  TheoremReport r;
  r.theorem = "q_theorem";
  if (!(p.k() > Rational(-1, 2))) {
    if (!exploratory) throw PreconditionError("Q-set theorem requires k in (-1/2, 0]; k = " + p.k().str());
    r.normative = false;
  }
  r.hypotheses_met = is_ek_ideal_th4(a, f, p).holds();
  for (const auto& g : negative_grid(f, p)) {
    if (!(g.value < p.beta())) break;
    const auto q = q_set(f, g.value, p.k());
    if (q.empty()) continue;
    auto w = is_ideal_def(a, q);
    if (!w) {
      r.conclusion_holds = false;
      r.witness = Verdict::fail("q/" + w.clause, std::move(w.elements), g.value);
      break;
    }
  }
  return r;
}

}  // namespace beal
