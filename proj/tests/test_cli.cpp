#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "beal/io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("beal_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run cli(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const auto err = scratch() / "stderr.txt";
  const std::string cmd = std::string("cd '") + scratch().string() + "' && '" + BEAL_CLI_PATH + "' " + args + " >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string ex(const char* name) { return "'" + testing::data_path(std::string("examples/") + name) + "'"; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check algebra") {
  const auto ok = cli("check algebra " + ex("example1_algebra.json"));
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "V1: pass\nV2: pass\nV3: pass\nV4: pass\n"
        "self-distributive: false (witness α,α,h)\ntransitive: true\n");

  const auto bad = cli("check algebra " + ex("not_be.json"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("V2: fail at (a)") != std::string::npos);
}

TEST_CASE("ideals and ideal checks") {
  const auto all = cli("ideals " + ex("example1_algebra.json"));
  CHECK(all.code == 0);
  CHECK(all.out == "{1}\n{1,m}\n{1,α,h}\n{1,α,h,m,0}\n");

  CHECK(cli("check ideal " + ex("example1_algebra.json") + " --subset 1,α,h").code == 0);
  const auto no = cli("check ideal " + ex("example1_algebra.json") + " --subset 1,α --method both");
  CHECK(no.code == 1);
  CHECK(no.err.find("clause: ideal(2)") != std::string::npos);
  CHECK(no.err.find("elements: h,α,α") != std::string::npos);
  CHECK(cli("check ideal " + ex("example1_algebra.json") + " --subset 1,zz").code == 2);
}

TEST_CASE("N-ideal check and cut listing") {
  const auto yes = cli("check n-ideal " + ex("example1_algebra.json") + " --function " + ex("example1_function.json"));
  CHECK(yes.code == 0);
  CHECK(yes.out == "n-ideal: true\n");

  const auto no = cli("check n-ideal " + ex("b2_algebra.json") + " --function " + ex("b2_not_ideal.json"));
  CHECK(no.code == 1);
  CHECK(no.err.find("t: -0.9") != std::string::npos);

  const auto cuts = cli("cuts " + ex("example1_algebra.json") + " --function " + ex("example1_function.json"));
  CHECK(cuts.code == 0);
  CHECK(cuts.out.rfind("breakpoints: -1 -0.7 -0.2 0\nmidpoints: -0.85 -0.45 -0.1\n", 0) == 0);
  CHECK(cuts.out.find("t in (-0.2, 0)           C = {1,α,h,m,0}") != std::string::npos);

  const auto kcuts = cli("cuts " + ex("example2_algebra.json") + " --function " + ex("example2_function.json") +
                          " --k -1/2");
  CHECK(kcuts.code == 0);
  CHECK(kcuts.out.find("-0.25") != std::string::npos);
  CHECK(kcuts.out.find("Q = ") != std::string::npos);
}

TEST_CASE("ek-ideal checks") {
  const auto yes = cli("check ek-ideal " + ex("example2_algebra.json") + " --function " +
                        ex("example2_function.json") + " --k -1/2 --method all");
  CHECK(yes.code == 0);
  CHECK(yes.out == "def: true\nth4: true\nth6: true\nlevels: true\n");

  const auto no = cli("check ek-ideal " + ex("b2_algebra.json") + " --function " + ex("b2_not_ideal.json") +
                       " --k 0 --method def");
  CHECK(no.code == 1);
  CHECK(no.err.find("clause: def(1)") != std::string::npos);
  CHECK(no.err.find("t: -0.9") != std::string::npos);

  CHECK(cli("check ek-ideal " + ex("b2_algebra.json") + " --function " + ex("b2_ideal.json") +
             " --k 0 --method th6")
            .code == 0);
  CHECK(cli("check ek-ideal " + ex("b2_algebra.json") + " --function " + ex("b2_ideal.json") + " --k 0.5").code == 2);
  CHECK(cli("check ek-ideal " + ex("b2_algebra.json") + " --function " + ex("b2_ideal.json") +
             " --k 0 --method bogus")
            .code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli("check algebra /nonexistent.json").code == 2);
  CHECK(cli("check n-ideal " + ex("b2_algebra.json") + " --function " + ex("example1_function.json")).code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("enumerate") {
  const auto counts = cli("enumerate --size 4 --count-only");
  CHECK(counts.code == 0);
  CHECK(counts.out == "250\n");
  CHECK(cli("enumerate --size 4 --count-only --up-to-iso").out == "51\n");
  CHECK(cli("enumerate --size 4 --count-only --transitive --workers 3").out == "110\n");
  CHECK(cli("enumerate --size 4 --count-only --self-distributive").out == "44\n");
  CHECK(cli("enumerate --size 9 --count-only").code == 2);

  const auto lines = cli("enumerate --size 3 --up-to-iso");
  CHECK(lines.code == 0);
  CHECK(lines.out.rfind(R"({"elements":["1","a","b"],"table":[["1","a","b"],["1","1","1"],["1","1","1"]]})", 0) == 0);

  const auto dir = scratch() / "algebras";
  fs::remove_all(dir);
  CHECK(cli("enumerate --size 3 --out '" + dir.string() + "'").code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    CHECK(e.path().filename().string().rfind("algebra_3_", 0) == 0);
  }
  CHECK(files == 6);
  CHECK(cli("check algebra '" + (dir / "algebra_3_000000.json").string() + "'").code == 0);
}

TEST_CASE("verify-theorems writes a deterministic report") {
  const auto cfg = scratch() / "small.json";
  beal::write_json_file(cfg, beal::Json{{"exhaustive_max_size", 2},
                                        {"structure_max_size", 3},
                                        {"fixtures", beal::Json::array({beal::Json{{"builtin", "example1"}}})}});
  const auto r1 = cli("verify-theorems --config '" + cfg.string() + "' --out r1.json");
  const auto r2 = cli("verify-theorems --config '" + cfg.string() + "' --out r2.json --workers 3");
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(r1.err.find("violations: 0, disagreements: 0") != std::string::npos);
  const auto a = slurp(scratch() / "r1.json");
  CHECK_FALSE(a.empty());
  CHECK(a == slurp(scratch() / "r2.json"));
  const auto report = beal::Json::parse(a);
  CHECK(report.at("summary").at("violations") == 0);
  CHECK(report.contains("tallies"));
  CHECK(report.contains("findings"));

  beal::write_json_file(cfg, beal::Json{{"nonsense", true}});
  CHECK(cli("verify-theorems --config '" + cfg.string() + "'").code == 2);
}

}
