#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beal/fixtures.hpp"
#include "beal/io.hpp"

namespace beal {

/// A concrete structure with the claims a reference makes about it.
struct FixtureConfig {
  std::string name;
  BEAlgebra algebra;
  NFunction function;
  std::vector<fixtures::ClaimedCut> claimed_cuts;
  std::vector<std::vector<std::string>> claimed_ideals;
  std::optional<bool> claim_n_ideal;
  std::optional<bool> claim_ek_ideal;
  std::vector<Rational> k_values;
  std::optional<ThresholdWindow> window;
};

FixtureConfig builtin_fixture(const std::string& name);

struct CampaignConfig {
  std::size_t exhaustive_max_size = 3;  // every algebra x every grid function
  std::size_t max_size = 3;             // sizes above exhaustive_max_size are sampled
  std::size_t structure_max_size = 4;   // algebra-level checks (self-distributive => transitive)
  Rational step{1, 4};
  std::vector<Rational> k_values{Rational(0), Rational(-1, 4), Rational(-1, 2), Rational(-3, 4)};
  std::map<std::size_t, std::size_t> samples;         // (algebra, f) pairs per sampled size
  std::map<std::size_t, std::size_t> subset_samples;  // (algebra, subset) pairs per sampled size
  std::uint64_t seed = 7;
  unsigned workers = 1;  // never affects the report
  bool exploratory = false;
  std::size_t max_examples = 20;
  std::vector<FixtureConfig> fixtures;
};

/// Throws InputError on unknown keys or invalid values. Relative fixture
/// file paths resolve against base_dir.
CampaignConfig parse_campaign_config(const Json& j, const std::filesystem::path& base_dir = {});

struct Tally {
  std::size_t instances = 0;
  std::size_t passes = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::size_t self_distributive_instances = 0;
  std::size_t self_distributive_violations = 0;
};

struct CampaignReport {
  Json config;
  Json universe = Json::array();
  std::map<std::string, Tally> tallies;
  std::vector<Json> counterexamples;
  std::vector<Json> findings;

  /// Violations of normative theorem checks (equivalences included).
  std::size_t violations() const;
  /// Violations of method-equivalence checks only.
  std::size_t disagreements() const;
  Json to_json() const;
};

/// Checks whose violations mean two deciding methods disagree.
bool is_equivalence_check(const std::string& check);
/// Checks run outside a theorem's stated range; never counted as violations.
bool is_exploratory_check(const std::string& check);

CampaignReport run_campaign(const CampaignConfig& config);

/// 0 = all checks pass, 1 = theorem violation, 3 = method disagreement.
int campaign_exit_code(const CampaignReport& report);

/// Re-runs the named check on a counterexample record in isolation; true
/// when the violation reproduces.
bool replay_counterexample(const Json& counterexample);

/// Same for findings that carry a concrete instance; nullopt for summaries.
std::optional<bool> replay_finding(const Json& finding);

}  // namespace beal
