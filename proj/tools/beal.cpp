// beal: decide ideal notions on finite BE-algebras, enumerate algebras and
// run theorem-verification campaigns.
//
// Exit codes: 0 pass, 1 violation / negative verdict, 2 input or
// precondition error, 3 deciding methods disagree.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "beal/campaign.hpp"
#include "beal/ek_ideals.hpp"
#include "beal/enumerate.hpp"
#include "beal/error.hpp"
#include "beal/ideals.hpp"
#include "beal/io.hpp"

namespace {

using namespace beal;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;
constexpr int kDisagreement = 3;

std::string join_labels(const BEAlgebra& a, const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + a.name(xs[i]);
  return out;
}

void print_witness(const BEAlgebra& a, const std::string& what, const Verdict& v) {
  std::cerr << "verdict: false\n"
            << "check: " << what << "\n"
            << "clause: " << v.clause << "\n"
            << "elements: " << join_labels(a, v.elements) << "\n";
  if (v.threshold) std::cerr << "t: " << v.threshold->str() << "\n";
  if (v.threshold2) std::cerr << "r: " << v.threshold2->str() << "\n";
}

int check_algebra(const std::string& path) {
  const auto doc = parse_algebra_document(read_json_file(path));
  const auto report = validate_be_algebra(doc.elements, doc.table);
  for (std::size_t i = 0; i < 4; ++i) {
    std::cout << AxiomReport::kNames[i] << ": " << (report.passed[i] ? "pass" : "fail");
    if (!report.passed[i]) {
      std::cout << " at (";
      for (std::size_t j = 0; j < report.witness[i].size(); ++j) std::cout << (j ? "," : "") << report.witness[i][j];
      std::cout << ")";
    }
    std::cout << "\n";
  }
  if (!report.all_pass()) return kViolation;
  const auto a = BEAlgebra::from_labels(doc.elements, doc.table);
  const auto sd = is_self_distributive(a);
  const auto tr = is_transitive(a);
  std::cout << "self-distributive: " << (sd ? "true" : "false");
  if (!sd) std::cout << " (witness " << join_labels(a, sd.elements) << ")";
  std::cout << "\ntransitive: " << (tr ? "true" : "false");
  if (!tr) std::cout << " (witness " << join_labels(a, tr.elements) << ")";
  std::cout << "\n";
  return kPass;
}

int check_ideal(const std::string& path, const std::string& subset, const std::string& method) {
  const auto a = load_algebra(path);
  const auto s = parse_subset(a, subset);
  if (method != "def" && method != "lemma" && method != "both") throw InputError("method must be def, lemma or both");
  std::optional<Verdict> def, lemma;
  if (method != "lemma") def = is_ideal_def(a, s);
  if (method != "def") lemma = is_ideal_lemma(a, s);
  if (def && lemma && def->holds != lemma->holds) {
    std::cout << "ideal: methods disagree (def=" << def->holds << ", lemma=" << lemma->holds << ")\n";
    return kDisagreement;
  }
  const auto& v = def ? *def : *lemma;
  std::cout << "ideal " << format_subset(a, s) << ": " << (v ? "true" : "false") << "\n";
  if (!v) {
    print_witness(a, "ideal", v);
    return kViolation;
  }
  return kPass;
}

int check_n_ideal(const std::string& path, const std::string& fpath) {
  const auto a = load_algebra(path);
  const auto f = load_function(a, fpath);
  const auto v = is_n_ideal(a, f);
  std::cout << "n-ideal: " << (v ? "true" : "false") << "\n";
  if (!v) {
    print_witness(a, "n-ideal", v);
    return kViolation;
  }
  return kPass;
}

int check_ek_ideal(const std::string& path, const std::string& fpath, const std::string& k,
                   const std::string& method, const std::string& report_path) {
  const auto a = load_algebra(path);
  const auto f = load_function(a, fpath);
  const EkParameters p(Rational::parse(k));
  std::vector<EkMethod> methods;
  if (method == "all") {
    methods = {EkMethod::kDefinition, EkMethod::kTh4, EkMethod::kTh6, EkMethod::kLevels};
  } else {
    methods = {parse_method(method)};
  }
  const bool transitive = is_transitive(a).holds;
  std::vector<EkVerdict> verdicts;
  for (auto m : methods) {
    if (method == "all" && !transitive && (m == EkMethod::kTh6 || m == EkMethod::kLevels)) {
      std::cout << method_name(m) << ": skipped (algebra is not transitive)\n";
      continue;
    }
    verdicts.push_back(is_ek_ideal(a, f, p, m));
    std::cout << method_name(m) << ": " << (verdicts.back().holds() ? "true" : "false") << "\n";
  }
  const bool first = verdicts.front().holds();
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(), [&](const EkVerdict& v) { return v.holds() == first; });
  if (!agree) {
    Json j{{"algebra", algebra_to_json(a)}, {"function", function_to_json(a, f).at("function")}, {"k", p.k().str()}};
    for (const auto& v : verdicts) j[method_name(v.method)] = v.holds();
    write_json_file(report_path, j);
    std::cerr << "methods disagree; counterexample written to " << report_path << "\n";
    return kDisagreement;
  }
  if (!first) {
    for (const auto& v : verdicts) print_witness(a, std::string("ek-ideal/") + method_name(v.method), v.verdict);
    return kViolation;
  }
  return kPass;
}

int list_ideals(const std::string& path) {
  const auto a = load_algebra(path);
  for (const auto& s : enumerate_ideals(a)) std::cout << format_subset(a, s) << "\n";
  return kPass;
}

int print_cuts(const std::string& path, const std::string& fpath, const std::string& k_text) {
  const auto a = load_algebra(path);
  const auto f = load_function(a, fpath);
  std::optional<Rational> k;
  if (!k_text.empty()) k = Rational::parse(k_text);
  const auto grid = critical_thresholds(f, k);

  std::cout << "breakpoints:";
  for (const auto& b : grid.breakpoints()) std::cout << ' ' << b;
  std::cout << "\nmidpoints:";
  for (const auto& m : grid.midpoints()) std::cout << ' ' << m;
  std::cout << "\n";

  const auto& pts = grid.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& t = pts[i].value;
    std::ostringstream where;
    if (pts[i].is_breakpoint()) {
      where << "t = " << t;
    } else {
      where << "t in (" << pts[i - 1].value << ", " << pts[i + 1].value << ")";
    }
    std::cout << std::left << std::setw(24) << where.str() << " C = " << format_subset(a, cut(f, t));
    if (k && t.is_negative()) {
      std::cout << "  Q = " << format_subset(a, q_set(f, t, *k)) << "  [f]_t = " << format_subset(a, level_set(f, t, *k));
    }
    std::cout << "\n";
  }
  return kPass;
}

int run_enumerate(std::size_t size, bool transitive, bool self_distributive, bool up_to_iso, bool count_only,
                  const std::string& out_dir, unsigned workers) {
  EnumerationConfig c;
  c.size = size;
  c.filter = self_distributive ? AlgebraFilter::kSelfDistributive
                               : (transitive ? AlgebraFilter::kTransitive : AlgebraFilter::kNone);
  c.up_to_iso = up_to_iso;
  c.workers = workers;
  if (count_only && out_dir.empty()) {
    std::cout << count_algebras(c) << "\n";
    return kPass;
  }
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  std::size_t index = 0;
  visit_algebras(c, [&](const BEAlgebra& a) {
    if (!out_dir.empty()) {
      std::ostringstream name;
      name << "algebra_" << size << '_' << std::setw(6) << std::setfill('0') << index << ".json";
      write_json_file(std::filesystem::path(out_dir) / name.str(), algebra_to_json(a));
    }
    if (!count_only) std::cout << algebra_to_json(a).dump() << "\n";
    ++index;
  });
  if (count_only) std::cout << index << "\n";
  return kPass;
}

int verify_theorems(const std::string& config_path, const std::string& out_path, unsigned workers) {
  const auto path = std::filesystem::path(config_path);
  auto config = parse_campaign_config(read_json_file(path), path.parent_path());
  if (workers > 0) config.workers = workers;
  const auto report = run_campaign(config);
  const auto j = report.to_json();
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(out_path, j);
  }
  std::cerr << "violations: " << report.violations() << ", disagreements: " << report.disagreements() << "\n";
  return campaign_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite BE-algebra ideal checker and theorem verifier"};
  app.require_subcommand(1);

  std::string algebra, function, subset, k, method = "all", report = "ek_disagreement.json", config, out;
  std::string ideal_method = "def";
  std::size_t size = 0;
  unsigned workers = 0;
  bool transitive = false, self_distributive = false, up_to_iso = false, count_only = false;

  auto* check = app.add_subcommand("check", "decide one property");
  check->require_subcommand(1);
  auto* c_alg = check->add_subcommand("algebra", "validate V1-V4 and classify");
  c_alg->add_option("algebra", algebra)->required();
  auto* c_ideal = check->add_subcommand("ideal", "is a subset an ideal");
  c_ideal->add_option("algebra", algebra)->required();
  c_ideal->add_option("--subset", subset, "comma-separated labels")->required();
  c_ideal->add_option("--method", ideal_method, "def | lemma | both");
  auto* c_n = check->add_subcommand("n-ideal", "is an N-structure an N-ideal");
  c_n->add_option("algebra", algebra)->required();
  c_n->add_option("--function", function)->required();
  auto* c_ek = check->add_subcommand("ek-ideal", "is an N-structure an ([e],[e]v[c_k])-ideal");
  c_ek->add_option("algebra", algebra)->required();
  c_ek->add_option("--function", function)->required();
  c_ek->add_option("--k", k)->required();
  c_ek->add_option("--method", method, "def | th4 | th6 | levels | all");
  c_ek->add_option("--report", report, "where to write a disagreement counterexample");

  auto* ideals = app.add_subcommand("ideals", "list every ideal");
  ideals->add_option("algebra", algebra)->required();

  auto* cuts = app.add_subcommand("cuts", "print the threshold grid and cut sets");
  cuts->add_option("algebra", algebra)->required();
  cuts->add_option("--function", function)->required();
  cuts->add_option("--k", k, "also print Q(f;t) and [f]_t");

  auto* en = app.add_subcommand("enumerate", "enumerate BE-algebras of one size");
  en->add_option("--size", size)->required();
  en->add_flag("--transitive", transitive);
  en->add_flag("--self-distributive", self_distributive);
  en->add_flag("--up-to-iso", up_to_iso);
  en->add_flag("--count-only", count_only);
  en->add_option("--out", out, "directory for algebra files");
  en->add_option("--workers", workers);

  auto* vt = app.add_subcommand("verify-theorems", "run a verification campaign");
  vt->add_option("--config", config)->required();
  vt->add_option("--out", out, "report file (stdout if absent)");
  vt->add_option("--workers", workers, "override the configured worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*c_alg) return check_algebra(algebra);
    if (*c_ideal) return check_ideal(algebra, subset, ideal_method);
    if (*c_n) return check_n_ideal(algebra, function);
    if (*c_ek) return check_ek_ideal(algebra, function, k, method, report);
    if (*ideals) return list_ideals(algebra);
    if (*cuts) return print_cuts(algebra, function, k);
    if (*en) return run_enumerate(size, transitive, self_distributive, up_to_iso, count_only, out, std::max(1U, workers));
    if (*vt) return verify_theorems(config, out, workers);
  } catch (const AxiomError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
