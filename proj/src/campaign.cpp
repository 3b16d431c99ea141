#include "beal/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "beal/enumerate.hpp"
#include "beal/error.hpp"
#include "beal/ideals.hpp"

namespace beal {

namespace {

const std::set<std::string> kEquivalenceChecks{
    "lemma1_equivalence", "characteristic_embedding", "th4_equivalence",
    "th6_equivalence",    "levels_equivalence",       "fixture_method_agreement",
};

Json labels(const BEAlgebra& a, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (Element x : xs) out.push_back(a.name(x));
  return out;
}

Json witness_json(const BEAlgebra& a, const Verdict& v) {
  Json j{{"clause", v.clause}, {"elements", labels(a, v.elements)}};
  if (v.threshold) j["t"] = v.threshold->str();
  if (v.threshold2) j["r"] = v.threshold2->str();
  return j;
}

Json instance_json(const BEAlgebra& a, const NFunction* f = nullptr, const Rational* k = nullptr) {
  Json j{{"algebra", algebra_to_json(a)}};
  if (f) j["function"] = function_to_json(a, *f).at("function");
  if (k) j["k"] = k->str();
  return j;
}

// Accumulates tallies, examples and findings for one unit of work; units
// are merged in a fixed order so the report never depends on scheduling.
struct Partial {
  std::size_t max_examples = 20;
  std::map<std::string, Tally> tallies;
  std::vector<Json> counterexamples;
  std::map<std::string, std::size_t> examples_per_check;
  std::vector<Json> findings;
  std::map<std::string, std::size_t> finding_totals;

  void record(const std::string& check, bool hypotheses_met, bool passed, bool self_distributive,
              const std::function<Json()>& describe) {
    auto& t = tallies[check];
    ++t.instances;
    if (self_distributive) ++t.self_distributive_instances;
    if (!hypotheses_met) ++t.vacuous;
    if (passed) {
      ++t.passes;
      return;
    }
    ++t.violations;
    if (self_distributive) ++t.self_distributive_violations;
    if (examples_per_check[check]++ < max_examples) {
      Json j{{"check", check}};
      j.update(describe());
      counterexamples.push_back(std::move(j));
    }
  }

  void find(const std::string& kind, const std::function<Json()>& describe) {
    if (finding_totals[kind]++ < max_examples) {
      Json j{{"kind", kind}};
      j.update(describe());
      findings.push_back(std::move(j));
    }
  }

  void merge(Partial&& o) {
    for (auto& [name, t] : o.tallies) {
      auto& d = tallies[name];
      d.instances += t.instances;
      d.passes += t.passes;
      d.vacuous += t.vacuous;
      d.violations += t.violations;
      d.self_distributive_instances += t.self_distributive_instances;
      d.self_distributive_violations += t.self_distributive_violations;
    }
    for (auto& c : o.counterexamples) {
      if (examples_per_check[c.at("check").get<std::string>()]++ < max_examples) counterexamples.push_back(std::move(c));
    }
    for (auto& f : o.findings) {
      if (finding_totals_seen[f.at("kind").get<std::string>()]++ < max_examples) findings.push_back(std::move(f));
    }
    for (auto& [kind, n] : o.finding_totals) finding_totals[kind] += n;
  }

  std::map<std::string, std::size_t> finding_totals_seen;
};

struct AlgebraInfo {
  BEAlgebra algebra;
  bool transitive = false;
  bool self_distributive = false;
};

struct Unit {
  const AlgebraInfo* info = nullptr;
  bool structure_check = false;
  bool all_subsets = false;
  std::vector<NFunction> functions;
  std::vector<Subset> subsets;
};

void record_report(Partial& out, const std::string& check, const TheoremReport& r, const AlgebraInfo& info,
                   const NFunction& f, const Rational* k) {
  out.record(check, r.hypotheses_met, r.passed(), info.self_distributive, [&] {
    Json j = instance_json(info.algebra, &f, k);
    j["witness"] = witness_json(info.algebra, r.witness);
    return j;
  });
}

void record_equivalence(Partial& out, const std::string& check, const EkVerdict& lhs, const EkVerdict& rhs,
                        const AlgebraInfo& info, const NFunction& f, const Rational& k) {
  out.record(check, true, lhs.holds() == rhs.holds(), info.self_distributive, [&] {
    Json j = instance_json(info.algebra, &f, &k);
    j[method_name(lhs.method)] = witness_json(info.algebra, lhs.verdict);
    j[method_name(lhs.method)]["holds"] = lhs.holds();
    j[method_name(rhs.method)] = witness_json(info.algebra, rhs.verdict);
    j[method_name(rhs.method)]["holds"] = rhs.holds();
    return j;
  });
}

void check_boundary(Partial& out, const AlgebraInfo& info, const NFunction& f, const EkParameters& p,
                    EkMethod method) {
  const auto bad = violating_thresholds(info.algebra, f, p, method);
  if (bad.empty()) return;
  if (!std::all_of(bad.begin(), bad.end(), [](const GridPoint& g) { return g.is_breakpoint(); })) return;
  out.find("boundary_only_violation", [&] {
    Json j = instance_json(info.algebra, &f, &p.k());
    j["method"] = method_name(method);
    Json ts = Json::array();
    for (const auto& g : bad) ts.push_back(g.value.str());
    j["thresholds"] = std::move(ts);
    return j;
  });
}

void evaluate_function(const CampaignConfig& cfg, const std::vector<EkParameters>& params, const AlgebraInfo& info,
                       const NFunction& f, Partial& out) {
  const auto& a = info.algebra;
  const bool sd = info.self_distributive;
  record_report(out, "n_ideal_consequences", check_n_ideal_consequences(a, f), info, f, nullptr);

  std::vector<bool> ek(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& p = params[i];
    const auto def = is_ek_ideal_definition(a, f, p);
    const auto th4 = is_ek_ideal_th4(a, f, p);
    ek[i] = th4.holds();
    record_equivalence(out, "th4_equivalence", def, th4, info, f, p.k());
    if (!def.holds()) check_boundary(out, info, f, p, EkMethod::kDefinition);

    record_report(out, "th5", check_th5(a, f, p), info, f, &p.k());
    record_report(out, "pro2", check_pro2(a, f, p), info, f, &p.k());

    if (!info.transitive) continue;
    const auto th6 = is_ek_ideal_th6(a, f, p);
    const auto levels = is_ek_ideal_levels(a, f, p);
    record_equivalence(out, "th6_equivalence", th4, th6, info, f, p.k());
    record_equivalence(out, "levels_equivalence", th4, levels, info, f, p.k());
    if (!levels.holds()) check_boundary(out, info, f, p, EkMethod::kLevels);

    record_report(out, "n_ideal_promotion", check_n_ideal_promotion(a, f, p), info, f, &p.k());
    if (p.k() > Rational(-1, 2)) {
      record_report(out, "q_theorem", check_q_theorem(a, f, p), info, f, &p.k());
    } else if (cfg.exploratory) {
      record_report(out, "q_theorem_exploratory", check_q_theorem(a, f, p, true), info, f, &p.k());
    }
  }

  // [c_k] weakens as k decreases, so ek-ideals persist to every smaller k.
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = 0; j < params.size(); ++j) {
      if (!(params[j].k() < params[i].k())) continue;
      out.record("k_monotonicity", ek[i], !ek[i] || ek[j], sd, [&] {
        Json r = instance_json(a, &f, &params[i].k());
        r["k2"] = params[j].k().str();
        return r;
      });
    }
  }
}

void evaluate_subset(const AlgebraInfo& info, const Subset& s, Partial& out) {
  const auto& a = info.algebra;
  const bool def = is_ideal_def(a, s).holds;
  auto describe = [&] {
    Json j = instance_json(a);
    j["subset"] = labels(a, s.members());
    return j;
  };
  out.record("lemma1_equivalence", true, def == is_ideal_lemma(a, s).holds, info.self_distributive, describe);
  const bool embedded = is_n_ideal(a, NFunction::characteristic(s)).holds;
  out.record("characteristic_embedding", true, def == embedded, info.self_distributive, describe);
}

void evaluate_unit(const CampaignConfig& cfg, const std::vector<EkParameters>& params, const Unit& u, Partial& out) {
  const auto& info = *u.info;
  if (u.structure_check) {
    out.record("self_distributive_implies_transitive", info.self_distributive,
               !info.self_distributive || info.transitive, info.self_distributive,
               [&] { return instance_json(info.algebra); });
    if (info.transitive && !info.self_distributive) {
      out.find("transitive_not_self_distributive", [&] {
        Json j = instance_json(info.algebra);
        j["size"] = info.algebra.size();
        j["self_distributivity_witness"] = witness_json(info.algebra, is_self_distributive(info.algebra));
        return j;
      });
    }
  }
  if (u.all_subsets) {
    const std::uint64_t limit = std::uint64_t{1} << info.algebra.size();
    for (std::uint64_t m = 1; m < limit; ++m) evaluate_subset(info, Subset(info.algebra.size(), m), out);
  }
  for (const auto& s : u.subsets) evaluate_subset(info, s, out);
  for (const auto& f : u.functions) evaluate_function(cfg, params, info, f, out);
}

// ---------------------------------------------------------------- fixtures

Json subset_labels(const BEAlgebra& a, const Subset& s) { return labels(a, s.members()); }

Subset subset_of_labels(const BEAlgebra& a, const std::vector<std::string>& names) {
  Subset s(a.size());
  for (const auto& n : names) {
    const auto idx = a.index_of(n);
    if (!idx) throw InputError("unknown element label '" + n + "'");
    s.insert(*idx);
  }
  return s;
}

void evaluate_fixture(const FixtureConfig& fx, Partial& out) {
  const auto& a = fx.algebra;
  const auto& f = fx.function;
  const AlgebraInfo info{a, is_transitive(a).holds, is_self_distributive(a).holds};
  auto base = [&](const Rational* k = nullptr) {
    Json j = instance_json(a, &f, k);
    j["fixture"] = fx.name;
    return j;
  };

  for (const auto& claim : fx.claimed_cuts) {
    const auto claimed = subset_of_labels(a, claim.members);
    const auto grid = critical_thresholds(f, std::nullopt, {claim.lo, claim.hi});
    for (const auto& g : grid.points()) {
      if (!claim.contains(g.value)) continue;
      const auto computed = cut(f, g.value);
      const bool match = computed == claimed;
      if (match) continue;
      out.find("cut_discrepancy", [&] {
        Json j = base();
        j["t"] = g.value.str();
        j["claimed"] = subset_labels(a, claimed);
        j["computed"] = subset_labels(a, computed);
        j["message"] = "computed cut differs from the published cut display";
        return j;
      });
    }
  }

  for (const auto& members : fx.claimed_ideals) {
    const auto s = subset_of_labels(a, members);
    const auto v = is_ideal_def(a, s);
    out.record("fixture_claims", true, v.holds, info.self_distributive, [&] {
      Json j = base();
      j["claim"] = "ideal";
      j["subset"] = subset_labels(a, s);
      j["expected"] = true;
      j["witness"] = witness_json(a, v);
      return j;
    });
  }

  if (fx.claim_n_ideal) {
    const auto v = is_n_ideal(a, f);
    out.record("fixture_claims", true, v.holds == *fx.claim_n_ideal, info.self_distributive, [&] {
      Json j = base();
      j["claim"] = "n_ideal";
      j["expected"] = *fx.claim_n_ideal;
      j["witness"] = witness_json(a, v);
      return j;
    });
  }

  for (const auto& k : fx.k_values) {
    const EkParameters p(k);
    std::vector<EkVerdict> verdicts{is_ek_ideal_definition(a, f, p), is_ek_ideal_th4(a, f, p)};
    if (info.transitive) {
      verdicts.push_back(is_ek_ideal_th6(a, f, p));
      verdicts.push_back(is_ek_ideal_levels(a, f, p));
    }
    const bool agree = std::all_of(verdicts.begin(), verdicts.end(),
                                   [&](const EkVerdict& v) { return v.holds() == verdicts.front().holds(); });
    out.record("fixture_method_agreement", true, agree, info.self_distributive, [&] {
      Json j = base(&k);
      for (const auto& v : verdicts) j[method_name(v.method)] = v.holds();
      return j;
    });
    if (fx.claim_ek_ideal) {
      for (const auto& v : verdicts) {
        out.record("fixture_claims", true, v.holds() == *fx.claim_ek_ideal, info.self_distributive, [&] {
          Json j = base(&k);
          j["claim"] = std::string("ek_ideal:") + method_name(v.method);
          j["expected"] = *fx.claim_ek_ideal;
          j["witness"] = witness_json(a, v.verdict);
          return j;
        });
      }
    }
    if (fx.window) {
      const auto windowed = is_ek_ideal_definition(a, f, p, fx.window);
      out.find("window_verdict", [&] {
        Json j = base(&k);
        j["window"] = {fx.window->lo.str(), fx.window->hi.str()};
        j["full_domain"] = verdicts.front().holds();
        j["window_domain"] = windowed.holds();
        return j;
      });
    }
  }
}

// ------------------------------------------------------------ config parse

std::size_t size_key(const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoul(s, &pos);
    if (pos != s.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("sample map keys must be algebra sizes, got '" + s + "'");
  }
}

std::map<std::size_t, std::size_t> size_map(const Json& j) {
  if (!j.is_object()) throw InputError("sample counts must be an object {\"size\": count}");
  std::map<std::size_t, std::size_t> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_unsigned()) throw InputError("sample counts must be non-negative integers");
    out[size_key(k)] = v.get<std::size_t>();
  }
  return out;
}

std::size_t unsigned_field(const Json& j, const char* name) {
  const auto& v = j.at(name);
  if (!v.is_number_unsigned()) throw InputError(std::string(name) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

FixtureConfig parse_fixture(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InputError("fixtures entries must be objects");
  if (j.contains("builtin")) {
    auto fx = builtin_fixture(j.at("builtin").get<std::string>());
    if (j.contains("name")) fx.name = j.at("name").get<std::string>();
    return fx;
  }
  FixtureConfig fx;
  fx.name = j.value("name", std::string("fixture"));
  Json algebra = j.contains("algebra_file") ? read_json_file(base_dir / j.at("algebra_file").get<std::string>())
                                            : j.at("algebra");
  const auto doc = parse_algebra_document(algebra);
  fx.algebra = BEAlgebra::from_labels(doc.elements, doc.table);
  Json fdoc = j.contains("function_file") ? read_json_file(base_dir / j.at("function_file").get<std::string>())
                                          : Json{{"function", j.at("function")}};
  fx.function = parse_function_document(fx.algebra, fdoc);
  for (const auto& c : j.value("claimed_cuts", Json::array())) {
    fixtures::ClaimedCut cc{rational_from_json(c.at("lo")), c.value("lo_closed", true), rational_from_json(c.at("hi")),
                            c.value("hi_closed", true), c.at("members").get<std::vector<std::string>>()};
    fx.claimed_cuts.push_back(std::move(cc));
  }
  if (j.contains("claims")) {
    const auto& claims = j.at("claims");
    if (claims.contains("n_ideal")) fx.claim_n_ideal = claims.at("n_ideal").get<bool>();
    if (claims.contains("ek_ideal")) fx.claim_ek_ideal = claims.at("ek_ideal").get<bool>();
    if (claims.contains("ideals")) fx.claimed_ideals = claims.at("ideals").get<std::vector<std::vector<std::string>>>();
  }
  for (const auto& k : j.value("k_values", Json::array())) fx.k_values.push_back(rational_from_json(k));
  if (j.contains("window")) {
    fx.window = ThresholdWindow{rational_from_json(j.at("window").at(0)), rational_from_json(j.at("window").at(1))};
  }
  return fx;
}

Json sizes_json(const std::map<std::size_t, std::size_t>& m) {
  Json j = Json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

Json config_json(const CampaignConfig& c) {
  Json ks = Json::array();
  for (const auto& k : c.k_values) ks.push_back(k.str());
  Json fx = Json::array();
  for (const auto& f : c.fixtures) fx.push_back(f.name);
  return Json{{"exhaustive_max_size", c.exhaustive_max_size},
              {"max_size", c.max_size},
              {"structure_max_size", c.structure_max_size},
              {"step", c.step.str()},
              {"k_values", std::move(ks)},
              {"samples", sizes_json(c.samples)},
              {"subset_samples", sizes_json(c.subset_samples)},
              {"seed", c.seed},
              {"exploratory", c.exploratory},
              {"max_examples", c.max_examples},
              {"fixtures", std::move(fx)}};
}

}  // namespace

// ------------------------------------------------------------------ public

FixtureConfig builtin_fixture(const std::string& name) {
  FixtureConfig fx;
  fx.name = name;
  if (name == "example1") {
    fx.algebra = fixtures::example1_algebra();
    fx.function = fixtures::example1_function();
    fx.claimed_cuts = fixtures::example1_claimed_cuts();
    fx.claimed_ideals = {{"1", "α", "h"}};
    fx.claim_n_ideal = true;
  } else if (name == "example2") {
    fx.algebra = fixtures::example2_algebra();
    fx.function = fixtures::example2_function();
    fx.k_values = fixtures::example2_k_grid();
    fx.window = fixtures::example2_window();
    fx.claim_ek_ideal = true;
  } else {
    throw InputError("unknown builtin fixture '" + name + "'");
  }
  return fx;
}

CampaignConfig parse_campaign_config(const Json& j, const std::filesystem::path& base_dir) {
  static const std::set<std::string> known{"exhaustive_max_size", "max_size",     "structure_max_size", "step",
                                           "k_values",            "samples",      "subset_samples",     "seed",
                                           "workers",             "exploratory",  "max_examples",       "fixtures"};
  if (!j.is_object()) throw InputError("campaign config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!known.contains(key)) throw InputError("unknown campaign config key '" + key + "'");
  }
  CampaignConfig c;
  try {
    if (j.contains("exhaustive_max_size")) c.exhaustive_max_size = unsigned_field(j, "exhaustive_max_size");
    c.max_size = j.contains("max_size") ? unsigned_field(j, "max_size") : c.exhaustive_max_size;
    if (j.contains("structure_max_size")) c.structure_max_size = unsigned_field(j, "structure_max_size");
    if (j.contains("step")) c.step = rational_from_json(j.at("step"));
    if (j.contains("k_values")) {
      c.k_values.clear();
      for (const auto& k : j.at("k_values")) c.k_values.push_back(rational_from_json(k));
    }
    if (j.contains("samples")) c.samples = size_map(j.at("samples"));
    if (j.contains("subset_samples")) c.subset_samples = size_map(j.at("subset_samples"));
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("workers")) c.workers = static_cast<unsigned>(std::max<std::size_t>(1, unsigned_field(j, "workers")));
    if (j.contains("exploratory")) c.exploratory = j.at("exploratory").get<bool>();
    if (j.contains("max_examples")) c.max_examples = unsigned_field(j, "max_examples");
    for (const auto& fx : j.value("fixtures", Json::array())) c.fixtures.push_back(parse_fixture(fx, base_dir));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("campaign config: ") + e.what());
  }
  step_denominator(c.step);
  for (const auto& k : c.k_values) require_k_range(k);
  if (c.max_size > 6 || c.structure_max_size > 6) throw InputError("campaign sizes are capped at 6");
  if (c.exhaustive_max_size > c.max_size) throw InputError("exhaustive_max_size exceeds max_size");
  return c;
}

std::size_t CampaignReport::violations() const {
  std::size_t n = 0;
  for (const auto& [name, t] : tallies) {
    if (!is_exploratory_check(name)) n += t.violations;
  }
  return n;
}

std::size_t CampaignReport::disagreements() const {
  std::size_t n = 0;
  for (const auto& [name, t] : tallies) {
    if (is_equivalence_check(name)) n += t.violations;
  }
  return n;
}

bool is_equivalence_check(const std::string& check) { return kEquivalenceChecks.contains(check); }
bool is_exploratory_check(const std::string& check) { return check == "q_theorem_exploratory"; }

Json CampaignReport::to_json() const {
  Json t = Json::object();
  for (const auto& [name, v] : tallies) {
    t[name] = Json{{"instances", v.instances},
                   {"passes", v.passes},
                   {"vacuous_passes", v.vacuous},
                   {"violations", v.violations},
                   {"self_distributive_instances", v.self_distributive_instances},
                   {"self_distributive_violations", v.self_distributive_violations},
                   {"normative", !is_exploratory_check(name)}};
  }
  return Json{{"config", config},
              {"universe", universe},
              {"tallies", std::move(t)},
              {"counterexamples", counterexamples},
              {"findings", findings},
              {"summary", {{"violations", violations()}, {"disagreements", disagreements()}}}};
}

int campaign_exit_code(const CampaignReport& r) {
  if (r.disagreements() > 0) return 3;
  if (r.violations() > 0) return 1;
  return 0;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  std::vector<EkParameters> params;
  for (const auto& k : cfg.k_values) params.emplace_back(k);

  CampaignReport report;
  report.config = config_json(cfg);

  const std::size_t top = std::max({cfg.max_size, cfg.structure_max_size, std::size_t{0}});
  std::vector<std::vector<AlgebraInfo>> universe(top + 1);
  std::vector<Unit> units;
  std::mt19937_64 rng(cfg.seed);

  for (std::size_t n = 1; n <= top; ++n) {
    const bool exhaustive = n <= cfg.exhaustive_max_size;
    const bool sampled = !exhaustive && n <= cfg.max_size;
    const bool structure = n <= cfg.structure_max_size;
    if (!exhaustive && !sampled && !structure) continue;

    std::set<Table> classes;
    for (auto& t : enumerate_tables(n, cfg.workers)) {
      classes.insert(canonical_form(n, t));
      AlgebraInfo info{BEAlgebra::from_table(n, std::move(t))};
      info.transitive = is_transitive(info.algebra).holds;
      info.self_distributive = is_self_distributive(info.algebra).holds;
      universe[n].push_back(std::move(info));
    }
    const auto& algebras = universe[n];
    std::size_t transitive = 0, sd = 0, t_not_sd = 0;
    for (const auto& info : algebras) {
      transitive += info.transitive;
      sd += info.self_distributive;
      t_not_sd += info.transitive && !info.self_distributive;
    }

    std::size_t function_instances = 0;
    if (exhaustive) {
      const auto functions = enumerate_n_functions(n, cfg.step);
      for (const auto& info : algebras) {
        units.push_back(Unit{&info, structure, true, functions, {}});
        function_instances += functions.size();
      }
    } else {
      for (const auto& info : algebras) {
        if (structure) units.push_back(Unit{&info, true, false, {}, {}});
      }
      if (sampled) {
        const auto pairs = cfg.samples.contains(n) ? cfg.samples.at(n) : 0;
        const auto m = step_denominator(cfg.step);
        for (std::size_t i = 0; i < pairs; ++i) {
          const auto& info = algebras[rng() % algebras.size()];
          std::vector<Rational> values;
          for (std::size_t x = 0; x < n; ++x) {
            values.emplace_back(-static_cast<std::int64_t>(rng() % (m + 1)), m);
          }
          units.push_back(Unit{&info, false, false, {NFunction(std::move(values))}, {}});
        }
        function_instances = pairs;
        const auto subsets = cfg.subset_samples.contains(n) ? cfg.subset_samples.at(n) : 0;
        const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;
        for (std::size_t i = 0; i < subsets; ++i) {
          const auto& info = algebras[rng() % algebras.size()];
          units.push_back(Unit{&info, false, false, {}, {Subset(n, 1 + rng() % nonempty)}});
        }
      }
    }

    report.universe.push_back(Json{{"size", n},
                                   {"mode", exhaustive ? "exhaustive" : (sampled ? "sampled" : "structure")},
                                   {"labeled", algebras.size()},
                                   {"up_to_iso", classes.size()},
                                   {"transitive", transitive},
                                   {"self_distributive", sd},
                                   {"transitive_not_self_distributive", t_not_sd},
                                   {"function_instances", function_instances}});
  }

  std::vector<Partial> partials(units.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      partials[i].max_examples = cfg.max_examples;
      evaluate_unit(cfg, params, units[i], partials[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < cfg.workers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  Partial total;
  total.max_examples = cfg.max_examples;
  for (auto& p : partials) total.merge(std::move(p));
  for (const auto& fx : cfg.fixtures) {
    Partial p;
    p.max_examples = cfg.max_examples;
    evaluate_fixture(fx, p);
    total.merge(std::move(p));
  }

  // Does any theorem's truth differ between the transitive and the
  // self-distributive sub-universes?
  Json per_check = Json::object();
  bool differs = false;
  for (const auto& [name, t] : total.tallies) {
    const bool sd_clean = t.self_distributive_violations == 0;
    const bool rest_clean = t.violations - t.self_distributive_violations == 0;
    differs = differs || sd_clean != rest_clean;
    per_check[name] = {{"self_distributive_violations", t.self_distributive_violations},
                       {"other_violations", t.violations - t.self_distributive_violations}};
  }
  Json comparison{{"kind", "subuniverse_comparison"}, {"differs", differs}, {"checks", std::move(per_check)}};
  total.findings.push_back(std::move(comparison));

  Json totals = Json::object();
  for (const auto& [kind, n] : total.finding_totals) totals[kind] = n;
  total.findings.push_back(Json{{"kind", "finding_totals"}, {"totals", std::move(totals)}});

  report.tallies = std::move(total.tallies);
  report.counterexamples = std::move(total.counterexamples);
  report.findings = std::move(total.findings);
  return report;
}

// ------------------------------------------------------------------ replay

namespace {

struct Replayed {
  BEAlgebra algebra;
  std::optional<NFunction> function;
  std::optional<Rational> k;
};

Replayed load_instance(const Json& j) {
  Replayed r;
  const auto doc = parse_algebra_document(j.at("algebra"));
  r.algebra = BEAlgebra::from_labels(doc.elements, doc.table);
  if (j.contains("function")) r.function = parse_function_document(r.algebra, Json{{"function", j.at("function")}});
  if (j.contains("k")) r.k = rational_from_json(j.at("k"));
  return r;
}

}  // namespace

bool replay_counterexample(const Json& c) {
  const auto check = c.at("check").get<std::string>();
  const auto in = load_instance(c);
  const auto& a = in.algebra;

  if (check == "self_distributive_implies_transitive") {
    return is_self_distributive(a).holds && !is_transitive(a).holds;
  }
  if (check == "lemma1_equivalence" || check == "characteristic_embedding") {
    const auto s = subset_of_labels(a, c.at("subset").get<std::vector<std::string>>());
    const bool def = is_ideal_def(a, s).holds;
    if (check == "lemma1_equivalence") return def != is_ideal_lemma(a, s).holds;
    return def != is_n_ideal(a, NFunction::characteristic(s)).holds;
  }
  const auto& f = in.function.value();
  if (check == "n_ideal_consequences") return !check_n_ideal_consequences(a, f).passed();
  if (check == "fixture_claims" && c.at("claim") == "n_ideal") {
    return is_n_ideal(a, f).holds != c.at("expected").get<bool>();
  }
  if (check == "fixture_claims" && c.at("claim") == "ideal") {
    return !is_ideal_def(a, subset_of_labels(a, c.at("subset").get<std::vector<std::string>>())).holds;
  }

  const EkParameters p(in.k.value());
  if (check == "th4_equivalence") return is_ek_ideal_definition(a, f, p).holds() != is_ek_ideal_th4(a, f, p).holds();
  if (check == "th6_equivalence") return is_ek_ideal_th4(a, f, p).holds() != is_ek_ideal_th6(a, f, p).holds();
  if (check == "levels_equivalence") return is_ek_ideal_th4(a, f, p).holds() != is_ek_ideal_levels(a, f, p).holds();
  if (check == "th5") return !check_th5(a, f, p).passed();
  if (check == "pro2") return !check_pro2(a, f, p).passed();
  if (check == "n_ideal_promotion") return !check_n_ideal_promotion(a, f, p).passed();
  if (check == "q_theorem") return !check_q_theorem(a, f, p).passed();
  if (check == "q_theorem_exploratory") return !check_q_theorem(a, f, p, true).passed();
  if (check == "k_monotonicity") {
    const EkParameters smaller(rational_from_json(c.at("k2")));
    return is_ek_ideal_th4(a, f, p).holds() && !is_ek_ideal_th4(a, f, smaller).holds();
  }
  if (check == "fixture_method_agreement") {
    std::set<bool> seen{is_ek_ideal_definition(a, f, p).holds(), is_ek_ideal_th4(a, f, p).holds()};
    if (is_transitive(a)) {
      seen.insert(is_ek_ideal_th6(a, f, p).holds());
      seen.insert(is_ek_ideal_levels(a, f, p).holds());
    }
    return seen.size() > 1;
  }
  if (check == "fixture_claims") {
    const auto claim = c.at("claim").get<std::string>();
    const auto method = parse_method(claim.substr(claim.find(':') + 1));
    return is_ek_ideal(a, f, p, method).holds() != c.at("expected").get<bool>();
  }
  throw InputError("cannot replay check '" + check + "'");
}

std::optional<bool> replay_finding(const Json& finding) {
  const auto kind = finding.at("kind").get<std::string>();
  if (kind == "transitive_not_self_distributive") {
    const auto in = load_instance(finding);
    return is_transitive(in.algebra).holds && !is_self_distributive(in.algebra).holds;
  }
  if (kind == "cut_discrepancy") {
    const auto in = load_instance(finding);
    const auto t = rational_from_json(finding.at("t"));
    const auto claimed = subset_of_labels(in.algebra, finding.at("claimed").get<std::vector<std::string>>());
    const auto computed = subset_of_labels(in.algebra, finding.at("computed").get<std::vector<std::string>>());
    const auto actual = cut(in.function.value(), t);
    return actual == computed && actual != claimed;
  }
  if (kind == "boundary_only_violation") {
    const auto in = load_instance(finding);
    const EkParameters p(in.k.value());
    const auto bad = violating_thresholds(in.algebra, in.function.value(), p,
                                          parse_method(finding.at("method").get<std::string>()));
    return !bad.empty() &&
           std::all_of(bad.begin(), bad.end(), [](const GridPoint& g) { return g.is_breakpoint(); });
  }
  if (kind == "window_verdict") {
    const auto in = load_instance(finding);
    const EkParameters p(in.k.value());
    const ThresholdWindow w{rational_from_json(finding.at("window").at(0)),
                            rational_from_json(finding.at("window").at(1))};
    return is_ek_ideal_definition(in.algebra, in.function.value(), p).holds() ==
               finding.at("full_domain").get<bool>() &&
           is_ek_ideal_definition(in.algebra, in.function.value(), p, w).holds() ==
               finding.at("window_domain").get<bool>();
  }
  return std::nullopt;
}

}  // namespace beal
