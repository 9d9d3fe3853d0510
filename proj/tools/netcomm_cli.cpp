// netcomm: directed-network communicability toolkit CLI.
//
// Subcommands: analyze (dataset summary), modify (greedy edge
// updates/downdates), brute (exhaustive baselines), selfcheck (built-in
// identity suite). See README.md for examples.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "netcomm/candidates.hpp"
#include "netcomm/communicability.hpp"
#include "netcomm/csv.hpp"
#include "netcomm/engine.hpp"
#include "netcomm/errors.hpp"
#include "netcomm/graph_io.hpp"
#include "netcomm/selfcheck.hpp"

namespace {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("NETCOMM_LOG");
  if (!env) return LogLevel::info;
  std::string v(env);
  if (v == "quiet") return LogLevel::quiet;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::info;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::info) std::cerr << "[netcomm] " << msg << '\n';
}

struct InputOptions {
  std::string path;
  std::string format = "edgelist";
  int index_base = 0;
  bool header = false;
};

struct SolverOptions {
  double tol = -1.0;  // <0: keep defaults
  int krylov_dim = 300;
  int dense_cap = 500;
  std::string backend = "auto";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "input graph file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"edgelist", "mm"}))
      ->capture_default_str();
  cmd->add_option("--index-base", in.index_base, "edge list index base")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();
  cmd->add_flag("--header", in.header, "edge list starts with an 'n m' count line");
}

void add_solver_options(CLI::App* cmd, SolverOptions& s) {
  cmd->add_option("--tol", s.tol, "Krylov relative tolerance override");
  cmd->add_option("--krylov-dim", s.krylov_dim, "maximum Krylov dimension")
      ->capture_default_str();
  cmd->add_option("--dense-cap", s.dense_cap, "dense-backend size threshold")
      ->capture_default_str();
  cmd->add_option("--backend", s.backend, "numerical backend selection")
      ->check(CLI::IsMember({"auto", "dense", "iterative"}))
      ->capture_default_str();
}

netcomm::SpectralOptions to_spectral(const SolverOptions& s) {
  netcomm::SpectralOptions opts;
  if (s.tol > 0) opts.krylov_tol = s.tol;
  opts.krylov_dim = s.krylov_dim;
  opts.dense_cap = s.dense_cap;
  if (s.backend == "dense") opts.backend = netcomm::Backend::dense;
  if (s.backend == "iterative") opts.backend = netcomm::Backend::iterative;
  return opts;
}

netcomm::LoadResult load(const InputOptions& in) {
  using namespace netcomm;
  LoadResult result = load_graph_file(
      in.path, in.format == "mm" ? GraphFormat::matrix_market : GraphFormat::edge_list,
      in.index_base == 1 ? IndexBase::one : IndexBase::zero,
      in.header ? HeaderMode::count_header : HeaderMode::none);
  if (result.report.self_loops_dropped || result.report.duplicates_dropped)
    log_info("dropped " + std::to_string(result.report.self_loops_dropped) +
             " self-loops and " + std::to_string(result.report.duplicates_dropped) +
             " duplicate edges");
  if (!result.report.weakly_connected)
    log_info("graph is not weakly connected (kept as-is)");
  return result;
}

std::string sanitize(const std::string& label) {
  std::string out = label;
  for (char& c : out)
    if (c == ':' || c == '+' || c == '.') c = '_';
  return out;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p);
  if (!f) throw netcomm::Error("cannot write '" + p.string() + "'");
  return f;
}

int cmd_analyze(const InputOptions& in, const SolverOptions& solver,
                const std::string& out_dir) {
  using namespace netcomm;
  LoadResult loaded = load(in);
  const Digraph& g = loaded.graph;
  SpectralOptions opts = to_spectral(solver);

  Vector sv = top_singular_values(g, std::min(2, g.node_count()), opts);
  GlobalIndices idx = hub_authority_indices(g, opts, true);

  std::ostringstream report;
  report << "n=" << g.node_count() << '\n'
         << "m=" << g.edge_count() << '\n'
         << "tau=" << virtual_edge_count(g) << '\n'
         << "weakly_connected=" << (loaded.report.weakly_connected ? 1 : 0) << '\n'
         << "self_loops_dropped=" << loaded.report.self_loops_dropped << '\n'
         << "duplicates_dropped=" << loaded.report.duplicates_dropped << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", sv[0]);
  report << "sigma1=" << buf << '\n';
  if (sv.size() > 1) {
    std::snprintf(buf, sizeof buf, "%.10g", sv[1]);
    report << "sigma2=" << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.10g", sv[0] - sv[1]);
    report << "gap=" << buf << '\n';
  }
  auto emit = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    report << key << '=' << buf << '\n';
  };
  emit("thc", idx.thc);
  emit("tac", idx.tac);
  emit("tc", idx.tc);
  emit("thc_per_edge", normalize_index(idx.thc, g, Normalization::per_edge));
  emit("tac_per_edge", normalize_index(idx.tac, g, Normalization::per_edge));

  std::cout << report.str();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    open_out(std::filesystem::path(out_dir) / "analyze.txt") << report.str();
  }
  return 0;
}

int cmd_modify(const InputOptions& in, const SolverOptions& solver,
               const std::string& methods_csv, int k, const std::string& kind,
               double fraction, bool restrict_downdates, bool rank2,
               std::uint64_t seed, bool no_tc, const std::string& out_dir) {
  using namespace netcomm;
  std::vector<CentralityMethod> methods;
  std::stringstream ss(methods_csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    CentralityMethod m = CentralityMethod::parse(token);  // throws on unknown names
    m.rank2 = rank2;
    methods.push_back(m);
  }
  if (methods.empty()) throw ParameterError("no methods given");

  LoadResult loaded = load(in);
  ModificationPlan plan;
  plan.kind = kind == "downdate" ? ModificationKind::downdate : ModificationKind::update;
  plan.steps = k;
  plan.seed = seed;
  plan.spectral = to_spectral(solver);
  plan.record_tc = !no_tc;
  if (fraction > 0) plan.fraction = fraction;
  plan.restrict_downdates = restrict_downdates;
  if (plan.fraction && plan.kind == ModificationKind::downdate && !restrict_downdates)
    log_info("--fraction ignored for downdates (pass --restrict-downdates to apply it)");

  ComparisonTable table = compare_methods(loaded.graph, plan, methods);

  std::filesystem::create_directories(out_dir);
  for (const MethodRun& run : table.runs) {
    if (!run.trajectory) {
      log_info("method " + run.method.label() + " skipped: " + run.error);
      continue;
    }
    if (run.trajectory->truncated)
      log_info("method " + run.method.label() + " truncated: " + run.trajectory->note);
    auto f = open_out(std::filesystem::path(out_dir) /
                      (sanitize(run.trajectory->label) + ".csv"));
    write_trajectory_csv(f, *run.trajectory);
  }
  {
    auto f = open_out(std::filesystem::path(out_dir) / "comparison.csv");
    write_comparison_csv(f, table);
  }
  {
    auto f = open_out(std::filesystem::path(out_dir) / "timings.csv");
    write_timings_csv(f, table);
  }

  bool any_ok = false;
  for (const MethodRun& run : table.runs) any_ok |= run.trajectory.has_value();
  return any_ok ? 0 : 1;
}

int cmd_brute(const InputOptions& in, const SolverOptions& solver, int k,
              const std::string& kind, const std::string& objective, bool no_tc,
              const std::string& out_dir) {
  using namespace netcomm;
  LoadResult loaded = load(in);
  const ModificationKind mkind =
      kind == "downdate" ? ModificationKind::downdate : ModificationKind::update;
  SpectralOptions opts = to_spectral(solver);
  std::filesystem::create_directories(out_dir);

  auto run_one = [&](BruteForceObjective obj) {
    ModificationTrajectory traj =
        run_brute_force(loaded.graph, mkind, k, obj, opts, !no_tc);
    if (traj.truncated) log_info(traj.label + " truncated: " + traj.note);
    auto f = open_out(std::filesystem::path(out_dir) / (traj.label + ".csv"));
    write_trajectory_csv(f, traj);
  };
  if (objective == "sum" || objective == "both") run_one(BruteForceObjective::sum);
  if (objective == "prod" || objective == "both") run_one(BruteForceObjective::prod);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed-network communicability toolkit"};
  app.set_config("--config", "", "flat key=value config file (flags override it)");
  app.require_subcommand(1);

  InputOptions in;
  SolverOptions solver;
  std::string out_dir;

  auto* analyze = app.add_subcommand("analyze", "summarize a graph and its indices");
  add_input_options(analyze, in);
  add_solver_options(analyze, solver);
  analyze->add_option("--out", out_dir, "directory for analyze.txt (optional)");

  std::string methods = "gtc";
  std::string kind = "update";
  std::string objective = "both";
  int k = 1;
  double fraction = -1.0;
  bool restrict_downdates = false, rank2 = false, no_tc = false, perturb = false;
  std::uint64_t seed = 0;

  auto* modify = app.add_subcommand("modify", "greedy edge updates/downdates");
  add_input_options(modify, in);
  add_solver_options(modify, solver);
  modify->add_option("--methods", methods, "comma-separated method list")
      ->capture_default_str();
  modify->add_option("--k", k, "modification budget K")->required()->check(CLI::PositiveNumber);
  modify->add_option("--kind", kind, "update or downdate")
      ->check(CLI::IsMember({"update", "downdate"}))
      ->capture_default_str();
  modify->add_option("--fraction", fraction,
                     "restrict candidates to the top-fraction induced subgraph")
      ->check(CLI::Range(1e-9, 1.0));
  modify->add_flag("--restrict-downdates", restrict_downdates,
                   "apply --fraction to downdates too");
  modify->add_flag("--rank2", rank2, "symmetric rank-two modifications");
  modify->add_option("--seed", seed, "seed for the random baseline")->capture_default_str();
  modify->add_flag("--no-tc", no_tc, "skip per-step total communicability");
  modify->add_option("--out", out_dir, "output directory")->required();

  auto* brute = app.add_subcommand("brute", "exhaustive opt-sum / opt-prod baselines");
  add_input_options(brute, in);
  add_solver_options(brute, solver);
  brute->add_option("--k", k, "modification budget K")->required()->check(CLI::PositiveNumber);
  brute->add_option("--kind", kind, "update or downdate")
      ->check(CLI::IsMember({"update", "downdate"}))
      ->capture_default_str();
  brute->add_option("--objective", objective, "sum, prod, or both")
      ->check(CLI::IsMember({"sum", "prod", "both"}))
      ->capture_default_str();
  brute->add_flag("--no-tc", no_tc, "skip per-step total communicability");
  brute->add_option("--out", out_dir, "output directory")->required();

  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in identity suite");
  selfcheck->add_flag("--perturb", perturb, "negative control: corrupt one value")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(in, solver, out_dir);
    if (modify->parsed())
      return cmd_modify(in, solver, methods, k, kind, fraction, restrict_downdates, rank2,
                        seed, no_tc, out_dir);
    if (brute->parsed()) return cmd_brute(in, solver, k, kind, objective, no_tc, out_dir);
    if (selfcheck->parsed()) {
      netcomm::SelfCheckReport report = netcomm::run_selfcheck(perturb);
      netcomm::print_selfcheck(std::cout, report);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const netcomm::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "unexpected error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
