// Command-line interface: decide sequents, check algebra files, run
// expectation suites.  Exit codes for `decide`: 0 provable, 1 refuted,
// 2 unknown, 3+ error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bfnl/decider.hpp"
#include "bfnl/parallel.hpp"
#include "bfnl/serialize.hpp"

namespace {

using namespace bfnl;

constexpr int kExitProvable = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitError = 4;

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    line.erase(0, start);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<Sequent> read_sequents(const std::string& path) {
  std::vector<Sequent> out;
  for (const std::string& line : read_lines(path)) out.push_back(parse_sequent(line));
  return out;
}

int exit_code_for(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Provable: return kExitProvable;
    case Verdict::Kind::Refuted: return kExitRefuted;
    case Verdict::Kind::Unknown: return kExitUnknown;
  }
  return kExitError;
}

const char* verdict_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Provable: return "provable";
    case Verdict::Kind::Refuted: return "refuted";
    case Verdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

struct CommonOpts {
  int kmax = 2;
  int depth = 30;
  int bunch_cap = 2;
  bool paper_faithful = false;
  int size_cap = 3;
  int jobs = 0;
};

void add_engine_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--kmax", o->kmax, "frame size cap for countermodel search")
      ->check(CLI::Range(1, 3));
  cmd->add_option("--depth", o->depth, "prover depth limit")->check(CLI::PositiveNumber);
  cmd->add_option("--bunch-cap", o->bunch_cap, "bunch growth factor over the goal size")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--paper-faithful", o->paper_faithful,
                "also run the table-enumeration refuter");
  cmd->add_option("--size-cap", o->size_cap, "universe cap for the table enumeration")
      ->check(CLI::Range(1, 3));
  cmd->add_option("--jobs", o->jobs, "worker threads (default: BFNL_JOBS or OpenMP default)");
}

DecisionConfig config_from(const CommonOpts& o) {
  DecisionConfig cfg;
  cfg.kmax = o.kmax;
  cfg.prover_depth = o.depth;
  cfg.bunch_cap_factor = o.bunch_cap;
  cfg.paper_faithful = o.paper_faithful;
  cfg.size_cap = o.size_cap;
  return cfg;
}

void apply_jobs(int jobs) {
  if (jobs <= 0) {
    if (const char* env = std::getenv("BFNL_JOBS")) jobs = std::atoi(env);
  }
  if (jobs > 0) set_worker_count(jobs);
}

int run_decide(const std::string& input, const std::string& file,
               const std::string& assume_path, bool json_out, const CommonOpts& opts) {
  apply_jobs(opts.jobs);
  DecisionConfig cfg = config_from(opts);
  std::vector<Sequent> hypotheses;
  if (!assume_path.empty()) hypotheses = read_sequents(assume_path);

  if (!file.empty()) {
    std::vector<Sequent> goals = read_sequents(file);
    std::vector<Verdict> verdicts(goals.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(goals.size()); ++i)
      verdicts[i] = decide(hypotheses, goals[i], cfg);
    if (json_out) {
      Json items = Json::array();
      for (std::size_t i = 0; i < goals.size(); ++i)
        items.push_back(verdict_to_json(hypotheses, goals[i], verdicts[i]));
      Json j;
      j["items"] = std::move(items);
      std::cout << j.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < goals.size(); ++i)
        std::cout << verdict_name(verdicts[i].kind) << "\t" << to_string(goals[i]) << "\n";
    }
    return kExitProvable;
  }

  Sequent goal = parse_sequent(input);
  if (cfg.paper_faithful && cfg.size_cap < entailment_bound(hypotheses, goal))
    std::cerr << "note: table enumeration capped below the completeness bound ("
              << cfg.size_cap << " < " << entailment_bound(hypotheses, goal)
              << "); absence of a countermodel is not conclusive\n";
  Verdict v = decide(hypotheses, goal, cfg);
  if (json_out) {
    std::cout << verdict_to_json(hypotheses, goal, v).dump(2) << "\n";
  } else {
    std::cout << verdict_name(v.kind) << "\n";
    if (v.proof) std::cout << proof_to_text(*v.proof);
  }
  return exit_code_for(v.kind);
}

int run_check_algebra(const std::string& path, bool json_out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  Json j = Json::parse(in);  // throws on malformed JSON
  PartialAlgebra a = algebra_from_json(j);
  CheckerVerdict v = check_partial_rba(a);
  Json out = checker_verdict_to_json(v);
  if (v.accepted) out["certificate"] = certificate_to_json(certify_acceptance(a, v));
  if (json_out) std::cout << out.dump(2) << "\n";
  else
    std::cout << (v.accepted ? "accepted"
                             : "rejected at step " + std::to_string(v.failing_step))
              << "\n";
  return v.accepted ? 0 : 1;
}

struct SuiteItem {
  Sequent sequent;
  Verdict::Kind expected;
};

std::vector<SuiteItem> read_suite(const std::string& path) {
  std::vector<SuiteItem> items;
  for (const std::string& line : read_lines(path)) {
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("suite line missing tab separator: " + line);
    std::string expect = line.substr(tab + 1);
    auto colon = expect.find(':');
    if (colon == std::string::npos || expect.substr(0, colon) != "expect")
      throw std::runtime_error("suite line missing 'expect:' field: " + line);
    std::string want = expect.substr(colon + 1);
    Verdict::Kind kind;
    if (want == "provable") kind = Verdict::Kind::Provable;
    else if (want == "refuted") kind = Verdict::Kind::Refuted;
    else if (want == "unknown") kind = Verdict::Kind::Unknown;
    else throw std::runtime_error("suite expectation must be provable|refuted|unknown");
    items.push_back({parse_sequent(line.substr(0, tab)), kind});
  }
  return items;
}

int run_bench(const std::string& path, const CommonOpts& opts) {
  apply_jobs(opts.jobs);
  DecisionConfig cfg = config_from(opts);
  std::vector<SuiteItem> items = read_suite(path);
  std::vector<Verdict> verdicts(items.size());
  std::vector<double> millis(items.size(), 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    verdicts[i] = decide({}, items[i].sequent, cfg);
    auto t1 = std::chrono::steady_clock::now();
    millis[i] = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }

  int mismatches = 0;
  std::cout << std::left << std::setw(40) << "sequent" << std::setw(10) << "expected"
            << std::setw(10) << "got" << std::setw(10) << "ms" << std::setw(10) << "frames"
            << std::setw(10) << "filters" << std::setw(12) << "nodes" << "\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Verdict& v = verdicts[i];
    bool ok = v.kind == items[i].expected;
    if (!ok) ++mismatches;
    std::cout << std::left << std::setw(40) << to_string(items[i].sequent) << std::setw(10)
              << verdict_name(items[i].expected) << std::setw(10) << verdict_name(v.kind)
              << std::setw(10) << std::fixed << std::setprecision(1) << millis[i]
              << std::setw(10) << v.stats.frames_checked << std::setw(10)
              << v.stats.filters_checked << std::setw(12) << v.stats.prover_nodes
              << (ok ? "" : "  MISMATCH") << "\n";
  }
  std::cout << items.size() - mismatches << "/" << items.size() << " as expected\n";
  return mismatches == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision engine for the Boolean full nonassociative Lambek calculus"};
  app.require_subcommand(1);

  std::string decide_input, decide_file, assume_path, algebra_path, suite_path;
  bool decide_json = false, check_json = false;
  CommonOpts decide_opts, bench_opts;

  CLI::App* cmd_decide = app.add_subcommand("decide", "decide one sequent or a batch file");
  cmd_decide->add_option("sequent", decide_input, "sequent text, e.g. \"p , q => p * q\"");
  cmd_decide->add_option("--file", decide_file, "batch file, one sequent per line");
  cmd_decide->add_option("--assume", assume_path, "file of hypothesis sequents");
  cmd_decide->add_flag("--json", decide_json, "emit the verdict with certificate as JSON");
  add_engine_flags(cmd_decide, &decide_opts);

  CLI::App* cmd_check = app.add_subcommand("check-algebra", "run the recognition procedure");
  cmd_check->add_option("file", algebra_path, "algebra JSON file")->required();
  cmd_check->add_flag("--json", check_json, "emit the verdict as JSON");

  CLI::App* cmd_bench = app.add_subcommand("bench", "run an expectation suite");
  cmd_bench->add_option("suite", suite_path, "suite file: <sequent> TAB expect:<verdict>")
      ->required();
  add_engine_flags(cmd_bench, &bench_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_decide->parsed()) {
      if (decide_input.empty() && decide_file.empty()) {
        std::cerr << "decide: provide a sequent or --file\n";
        return kExitError;
      }
      return run_decide(decide_input, decide_file, assume_path, decide_json, decide_opts);
    }
    if (cmd_check->parsed()) return run_check_algebra(algebra_path, check_json);
    if (cmd_bench->parsed()) return run_bench(suite_path, bench_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
