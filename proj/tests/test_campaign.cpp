#include "doctest.h"

#include "beal/campaign.hpp"
#include "beal/error.hpp"
#include "beal/fixtures.hpp"
#include "support.hpp"

using namespace beal;
using testing::q;

namespace {

CampaignConfig small_config() {
  CampaignConfig c;
  c.exhaustive_max_size = 3;
  c.max_size = 3;
  c.structure_max_size = 3;
  return c;
}

std::vector<Json> findings_of(const CampaignReport& r, const std::string& kind) {
  std::vector<Json> out;
  for (const auto& f : r.findings) {
    if (f.at("kind") == kind) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_SUITE("campaign") {

TEST_CASE("exhaustive small universe") {
  const auto r = run_campaign(small_config());
  CHECK(r.violations() == 0);
  CHECK(r.disagreements() == 0);
  CHECK(campaign_exit_code(r) == 0);

  const auto& th4 = r.tallies.at("th4_equivalence");
  CHECK(th4.instances == 3120);
  CHECK(th4.passes == 3120);
  CHECK(r.tallies.at("th6_equivalence").instances == 3120);  // every algebra up to size 3 is transitive
  CHECK(r.tallies.at("lemma1_equivalence").instances == 1 + 3 + 6 * 7);
  CHECK(r.tallies.at("q_theorem").instances == 780 * 2);
  CHECK_FALSE(r.tallies.contains("q_theorem_exploratory"));

  REQUIRE(r.universe.size() == 3);
  CHECK(r.universe[2].at("labeled") == 6);
  CHECK(r.universe[2].at("up_to_iso") == 4);
  CHECK(r.universe[2].at("function_instances") == 750);

  // Transitive, non-self-distributive algebras exist already at size 3.
  const auto tns = findings_of(r, "transitive_not_self_distributive");
  CHECK(tns.size() == 2);
  for (const auto& f : tns) CHECK(replay_finding(f) == std::optional<bool>(true));
}

TEST_CASE("reports do not depend on worker count or run") {
  auto c = small_config();
  c.max_size = 4;
  c.samples = {{4, 300}};
  c.subset_samples = {{4, 200}};
  c.exploratory = true;
  c.fixtures = {builtin_fixture("example1"), builtin_fixture("example2")};
  const auto a = run_campaign(c).to_json().dump();
  CHECK(a == run_campaign(c).to_json().dump());
  c.workers = 4;
  CHECK(a == run_campaign(c).to_json().dump());
  c.seed = 8;
  CHECK(a != run_campaign(c).to_json().dump());
}

TEST_CASE("fixtures produce the expected findings") {
  auto c = small_config();
  c.exhaustive_max_size = 1;
  c.max_size = 1;
  c.structure_max_size = 1;
  c.fixtures = {builtin_fixture("example1"), builtin_fixture("example2")};
  const auto r = run_campaign(c);
  CHECK(r.violations() == 0);
  CHECK(r.disagreements() == 0);
  CHECK(r.tallies.at("fixture_method_agreement").instances == 11);

  const auto cuts = findings_of(r, "cut_discrepancy");
  REQUIRE(cuts.size() == 3);
  CHECK(cuts[0].at("t") == "-0.2");
  CHECK(cuts[1].at("t") == "-0.1");
  CHECK(cuts[2].at("t") == "0");
  CHECK(cuts[1].at("computed").size() == 5);
  for (const auto& f : cuts) CHECK(replay_finding(f) == std::optional<bool>(true));

  const auto windows = findings_of(r, "window_verdict");
  REQUIRE(windows.size() == 11);
  for (const auto& w : windows) {
    CHECK(w.at("full_domain") == true);
    CHECK(w.at("window_domain") == true);
    CHECK(replay_finding(w) == std::optional<bool>(true));
  }
  CHECK_FALSE(replay_finding(Json{{"kind", "finding_totals"}}).has_value());
}

TEST_CASE("false claims become replayable counterexamples") {
  const auto cfg = Json::parse(R"({
    "exhaustive_max_size": 1,
    "structure_max_size": 1,
    "fixtures": [{
      "name": "wrong",
      "algebra": {"elements": ["1", "a"], "table": [["1", "a"], ["1", "1"]]},
      "function": {"1": "-0.1", "a": "-0.9"},
      "claims": {"n_ideal": true, "ek_ideal": true, "ideals": [["a"]]},
      "k_values": ["0"]
    }]
  })");
  const auto r = run_campaign(parse_campaign_config(cfg));
  CHECK(r.disagreements() == 0);
  // n_ideal, ideal {a}, and four ek-ideal methods.
  CHECK(r.violations() == 6);
  CHECK(campaign_exit_code(r) == 1);
  REQUIRE(r.counterexamples.size() == 6);
  for (const auto& ce : r.counterexamples) {
    CAPTURE(ce.dump());
    CHECK(ce.at("check") == "fixture_claims");
    CHECK(replay_counterexample(ce));
  }
}

TEST_CASE("config parsing") {
  const auto c = parse_campaign_config(Json::parse(R"({"step": "1/2", "k_values": ["0", "-0.5"], "seed": 3,
      "samples": {"4": 10}, "fixtures": [{"builtin": "example1"}]})"));
  CHECK(c.step == q("1/2"));
  CHECK(c.k_values == std::vector<Rational>{q("0"), q("-1/2")});
  CHECK(c.seed == 3);
  CHECK(c.samples.at(4) == 10);
  REQUIRE(c.fixtures.size() == 1);
  CHECK(c.fixtures[0].claim_n_ideal == std::optional<bool>(true));

  CHECK_THROWS_AS(parse_campaign_config(Json::parse(R"({"bogus": 1})")), InputError);
  CHECK_THROWS_AS(parse_campaign_config(Json::parse(R"({"step": "2/5"})")), InputError);
  CHECK_THROWS_AS(parse_campaign_config(Json::parse(R"({"k_values": ["-1"]})")), InputError);
  CHECK_THROWS_AS(parse_campaign_config(Json::parse(R"({"seed": "x"})")), InputError);
  CHECK_THROWS_AS(parse_campaign_config(Json::parse(R"({"fixtures": [{"builtin": "nope"}]})")), InputError);
  CHECK_THROWS_AS(parse_campaign_config(Json::parse("[]")), InputError);

  const auto file = parse_campaign_config(read_json_file(testing::data_path("campaign_default.json")),
                                          testing::data_path(""));
  CHECK(file.max_size == 5);
  CHECK(file.fixtures.size() == 2);
}

TEST_CASE("check classification") {
  CHECK(is_equivalence_check("th4_equivalence"));
  CHECK(is_equivalence_check("fixture_method_agreement"));
  CHECK_FALSE(is_equivalence_check("th5"));
  CHECK(is_exploratory_check("q_theorem_exploratory"));
  CHECK_FALSE(is_exploratory_check("q_theorem"));
}

}
