#include "pathkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pathkit/checks.hpp"

namespace pathkit {

namespace {

enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

std::vector<Path> parse_path_list(const std::string& text) {
  std::vector<Path> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ';')) out.push_back(parse_path(piece));
  return out;
}

std::uint64_t env_seed() {
  const char* s = std::getenv("PATHKIT_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw Error(std::string("PATHKIT_SEED is not a number: ") + s);
  }
}

std::size_t default_subsample(const std::string& law) {
  if (law == "interchange") return 20;
  if (law == "pentagon" || law == "triangle") return 10;
  return 0;
}

void print_summary(std::ostream& out, const CheckReport& r) {
  out << r.law << ": " << (r.passed() ? "pass" : "FAIL") << ", " << r.samples << " samples, "
      << r.failures.size() << " failures";
  if (r.oracle_confirmed || r.oracle_unknown)
    out << ", oracle confirmed " << r.oracle_confirmed << ", unknown " << r.oracle_unknown;
  out << "\n";
  for (const auto& [k, v] : r.stats) out << "  " << k << " = " << v << "\n";
  for (const Failure& f : r.failures) {
    out << "  failure:\n";
    for (const std::string& in : f.inputs) out << "    input    " << in << "\n";
    out << "    expected " << f.expected << "\n    got      " << f.got << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computational paths between lambda terms: construction, rewriting and law checks",
               "pathkit"};
  app.require_subcommand(1);

  std::string term_a, term_b;
  std::size_t fuel = 0;
  bool trace = false;
  std::string style = "paper";

  auto* parse = app.add_subcommand("parse", "Parse a term and print it back");
  parse->add_option("term", term_a)->required();

  auto* reduce = app.add_subcommand("reduce", "Beta-eta normalize a term");
  reduce->add_option("term", term_a)->required();
  reduce->add_flag("--trace", trace, "Print every contraction");
  reduce->add_option("--fuel", fuel, "Step budget (default 10000)");

  auto* path = app.add_subcommand("path", "Build a path between two beta-eta equal terms");
  path->add_option("m", term_a)->required();
  path->add_option("n", term_b)->required();
  path->add_option("--style", style, "paper or structural")
      ->check(CLI::IsMember({"paper", "structural"}));
  path->add_option("--fuel", fuel, "Step budget (default 10000)");

  auto* normalize = app.add_subcommand("normalize", "Rewrite a path to its rw-normal form");
  normalize->add_option("path", term_a)->required();
  normalize->add_flag("--trace", trace, "Print every rw-step");
  normalize->add_option("--fuel", fuel, "Step budget (default 100000)");

  auto* eq = app.add_subcommand("eq", "Decide rw-equality of two paths");
  eq->add_option("p", term_a)->required();
  eq->add_option("q", term_b)->required();
  eq->add_option("--fuel", fuel, "Step budget (default 100000)");

  auto* hc = app.add_subcommand("hcomp", "Horizontal composition of two rw-sequences");
  hc->add_option("alpha", term_a, "Paths separated by ';'")->required();
  hc->add_option("theta", term_b, "Paths separated by ';'")->required();

  std::string law;
  CampaignOptions opts;
  std::optional<std::uint64_t> seed;
  bool json = false, summary = false, oracle = false, timing = false, serial = false;
  std::string out_file;
  auto* check = app.add_subcommand("check", "Run a law-checking campaign");
  check->add_option("law", law)
      ->required()
      ->check(CLI::IsMember(
          {"groupoid", "interchange", "pentagon", "triangle", "confluence", "termination", "equivalence"}));
  check->add_option("--samples", opts.samples, "Number of instances")->capture_default_str();
  check->add_option("--seed", seed, "Campaign seed (default $PATHKIT_SEED, else 0)");
  check->add_option("--depth", opts.depth, "Maximum path depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* json_flag = check->add_flag("--json", json, "Emit the JSON report (the default)");
  check->add_flag("--summary", summary, "Emit a readable summary instead of JSON")->excludes(json_flag);
  check->add_flag("--oracle", oracle, "Confirm every instance with the 2-cell oracle");
  check->add_option("--oracle-cap", opts.oracle_cap, "Oracle node budget")->capture_default_str();
  check->add_option("--fuel", fuel, "Rewriting step budget (default 100000)");
  check->add_option("--out", out_file, "Write the report to a file instead of standard output");
  check->add_flag("--timing", timing, "Include elapsed time in the JSON report");
  check->add_flag("--serial", serial, "Run samples on one thread");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "pathkit: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (parse->parsed()) {
      out << print_term(parse_term(term_a)) << "\n";
      return kOk;
    }
    if (reduce->parsed()) {
      ReductionTrace t = normalize_term(parse_term(term_a), fuel ? fuel : kDefaultTermFuel);
      if (trace) {
        out << print_term(t.start) << "\n";
        for (const Redex& r : t.steps)
          out << "  " << to_string(r.kind) << " @ " << r.position.to_string() << "\n"
              << print_term(r.result) << "\n";
      } else {
        out << print_term(t.final_term()) << "\n";
      }
      return kOk;
    }
    if (path->parsed()) {
      Path p = path_between(parse_term(term_a), parse_term(term_b), fuel ? fuel : kDefaultTermFuel);
      out << print_path(p, style == "paper" ? PathStyle::Paper : PathStyle::Structural) << "\n";
      return kOk;
    }
    if (normalize->parsed()) {
      Path p = parse_path(term_a);
      validate_path(p);
      RwNormalForm nf = normalize_rw(p, fuel ? fuel : kDefaultPathFuel);
      if (trace) {
        out << print_path(p) << "\n";
        for (const RwStepRecord& s : nf.trace)
          out << "  " << s.rule << " @ " << s.position.to_string() << "\n" << print_path(s.after) << "\n";
      } else {
        out << print_path(nf.normal) << "\n";
      }
      return kOk;
    }
    if (eq->parsed()) {
      Path p = parse_path(term_a);
      Path q = parse_path(term_b);
      validate_path(p);
      validate_path(q);
      bool same = rw_eq(p, q, fuel ? fuel : kDefaultPathFuel);
      out << (same ? "true" : "false") << "\n";
      return same ? kOk : kFalse;
    }
    if (hc->parsed()) {
      RwSequence alpha = infer_sequence(parse_path_list(term_a));
      RwSequence theta = infer_sequence(parse_path_list(term_b));
      out << print_sequence(hcomp(alpha, theta)) << "\n";
      return kOk;
    }
    // check
    opts.seed = seed ? *seed : env_seed();
    opts.fuel = fuel ? fuel : kDefaultPathFuel;
    opts.oracle_all = oracle;
    opts.oracle_subsample = default_subsample(law);
    opts.execution = serial ? Execution::Serial : Execution::Parallel;
    CheckReport report = run_campaign(law, opts);
    std::ofstream file;
    if (!out_file.empty()) {
      file.open(out_file);
      if (!file) throw Error("cannot write " + out_file);
    }
    std::ostream& sink = out_file.empty() ? out : file;
    if (summary)
      print_summary(sink, report);
    else
      sink << to_json(report, timing) << "\n";
    if (!report.passed()) return kFalse;
    return report.oracle_unknown > 0 ? kBudget : kOk;
  } catch (const NotBetaEtaEqual& e) {
    err << "pathkit: " << e.what() << "\n";
    return kFalse;
  } catch (const FuelExhausted& e) {
    err << "pathkit: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "pathkit: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace pathkit
