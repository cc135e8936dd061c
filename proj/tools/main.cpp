#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "veflab/besov.hpp"
#include "veflab/config_io.hpp"
#include "veflab/functionals.hpp"
#include "veflab/manifest.hpp"
#include "veflab/ops.hpp"
#include "veflab/series_io.hpp"
#include "veflab/simulation.hpp"
#include "veflab/snapshot_io.hpp"
#include "veflab/verification.hpp"

namespace {

using namespace vefl;

struct CommonOpts {
  std::string config_path;
  std::string out = ".";
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool quiet = false;
};

SimConfig resolve_config(const CommonOpts& opts) {
  SimConfig cfg;
  if (!opts.config_path.empty()) cfg = load_config(opts.config_path);
  if (opts.seed_given) cfg.seed = opts.seed;
  return cfg;
}

FunctionalParams functional_params(const SimConfig& cfg) {
  return FunctionalParams{cfg.s, cfg.r, cfg.p1, cfg.p2, cfg.resolved_r0(),
                          cfg.dim};
}

void print_verdict(std::ostream& out, const FunctionalReport& report,
                   const BoundednessVerdict& verdict, double lambda1) {
  if (report.s_window_warning)
    out << "note: regularity index s is outside the admissible window; "
           "functionals computed anyway\n";
  if (verdict.rest_state) {
    out << "verdict: rest state, X_p(0) = 0; bounded: "
        << (verdict.bounded ? "yes" : "no") << "\n";
    return;
  }
  out << "verdict: sup X_p1/X_p1(0) = " << verdict.ratio_p1
      << ", sup X_p2/X_p2(0) = " << verdict.ratio_p2
      << ", sup X_p2 = " << verdict.sup_x_p2 << (verdict.hypothesis_ok
                                                     ? " <= "
                                                     : " > ")
      << "lambda1 = " << lambda1
      << "; bounded: " << (verdict.bounded ? "yes" : "no") << "\n";
}

int run_simulate(const CommonOpts& opts) {
  SimConfig cfg = resolve_config(opts);
  namespace fs = std::filesystem;
  fs::create_directories(opts.out);
  const std::string dir = opts.out + "/";

  RunManifest manifest;
  manifest.config = cfg;
  manifest.outputs = {"config.cfg", "series.csv", "report.csv", "final.vec"};
  save_config(cfg, dir + "config.cfg");
  write_manifest(manifest, dir + "manifest.json");

  auto t0 = std::chrono::steady_clock::now();
  SimResult result = run_simulation(cfg, opts.quiet);
  auto t1 = std::chrono::steady_clock::now();

  write_block_series_csv(result.series, dir + "series.csv");
  FunctionalReport report = assemble_report(result.series, functional_params(cfg));
  write_report_csv(report, dir + "report.csv");
  write_snapshot(result.final_state, cfg.mu, dir + "final.vec");

  manifest.status = result.aborted ? "aborted" : "complete";
  manifest.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  manifest.steps_taken = result.steps_taken;
  manifest.cfl_warned = result.cfl_warned;
  write_manifest(manifest, dir + "manifest.json");

  if (!opts.quiet) {
    std::cout << "steps: " << result.steps_taken
              << ", final t = " << result.final_state.time
              << ", wall " << manifest.wall_seconds << " s\n";
    if (result.cfl_warned)
      std::cout << "warning: advective step limit exceeded during the run "
                   "(max speed "
                << result.max_speed_seen << ")\n";
    BoundednessVerdict verdict = boundedness_report(report, cfg.lambda1);
    print_verdict(std::cout, report, verdict, cfg.lambda1);
    std::cout << "outputs in " << opts.out << ": config.cfg series.csv "
                 "report.csv final.vec manifest.json\n";
  }
  if (result.aborted) {
    std::cerr << "run aborted at t = " << result.abort_time
              << ": non-finite values\n";
    return 1;
  }
  return 0;
}

int run_suite(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) print_criterion(std::cout, r);
  return all_pass(results) ? 0 : 1;
}

int run_norms(const std::string& snapshot_path, const CommonOpts& opts) {
  Snapshot snap = read_snapshot(snapshot_path);
  SimConfig cfg = resolve_config(opts);
  const Grid& g = snap.state.velocity.grid();
  DyadicPartition part = build_partition(snap.state.velocity.grid_ptr());
  const double n2 = g.dim() / 2.0;

  std::cout << "grid: dim " << g.dim() << ", " << g.points_per_dim() << "^"
            << g.dim() << ", period " << g.period() << ", mu " << snap.mu
            << ", t " << snap.state.time << "\n";
  std::cout << "blocks q in [" << part.q_min() << ", " << part.q_max()
            << "]\n";

  SpectralField c = divergence_tensor(snap.state.strain);
  remove_mean(c);
  c = lambda_power(c, -1.0);

  struct Row {
    const char* name;
    const SpectralField* f;
    double s;
  };
  SpectralField v_scaled = snap.state.velocity;  // keep rows uniform
  const Row rows[] = {{"v", &v_scaled, n2 - 1.0},
                      {"E", &snap.state.strain, n2},
                      {"c", &c, n2}};
  for (const Row& row : rows) {
    BesovResult b21 = besov_norm(*row.f, BesovSpec{row.s, 2.0, 1.0}, part);
    BesovResult bp1 =
        besov_norm(*row.f, BesovSpec{g.dim() / cfg.p2 + row.s - n2, cfg.p2, 1.0},
                   part);
    std::cout << row.name << ": B^{" << row.s << "}_{2,1} = " << b21.value
              << " (leaked " << b21.leaked_fraction << "), B^{"
              << g.dim() / cfg.p2 + row.s - n2 << "}_{" << cfg.p2
              << ",1} = " << bp1.value << ", L2 = " << spectral_l2_norm(*row.f)
              << "\n";
  }
  return 0;
}

int run_report(const std::string& series_path, const CommonOpts& opts,
               const std::string& out_file) {
  SimConfig cfg = resolve_config(opts);
  NormSeries series = read_block_series_csv(series_path);
  FunctionalReport report = assemble_report(series, functional_params(cfg));
  write_report_csv(report, out_file);
  BoundednessVerdict verdict = boundedness_report(report, cfg.lambda1);
  if (!opts.quiet) {
    print_verdict(std::cout, report, verdict, cfg.lambda1);
    std::cout << "report written to " << out_file << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral laboratory for an incompressible viscoelastic model"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string snapshot_path, series_path, report_out = "report.csv";

  auto add_common = [&](CLI::App* cmd, bool with_seed, bool with_out) {
    cmd->add_option("--config", opts.config_path,
                    "key = value run configuration file");
    if (with_out) cmd->add_option("--out", opts.out, "output location");
    if (with_seed)
      cmd->add_option("--seed", opts.seed, "override the configured seed")
          ->each([&](const std::string&) { opts.seed_given = true; });
    cmd->add_flag("--quiet", opts.quiet, "suppress progress output");
  };

  CLI::App* sim = app.add_subcommand("simulate", "run the configured flow");
  add_common(sim, true, true);

  CLI::App* vg = app.add_subcommand(
      "verify-green", "check the mode propagator and its decay structure");
  add_common(vg, false, false);
  CLI::App* vl = app.add_subcommand(
      "verify-lp", "check the block-analysis toolkit and norm scalings");
  add_common(vl, false, false);
  CLI::App* vc = app.add_subcommand(
      "verify-constraints",
      "check constraint transport and stepper convergence");
  add_common(vc, false, false);

  CLI::App* norms = app.add_subcommand("norms", "print norms of a snapshot");
  norms->add_option("snapshot", snapshot_path, "snapshot file")->required();
  add_common(norms, false, false);

  CLI::App* report =
      app.add_subcommand("report", "assemble functionals from a series CSV");
  report->add_option("series", series_path, "block-norm series CSV")->required();
  report->add_option("--out", report_out, "report CSV destination");
  add_common(report, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sim->parsed()) return run_simulate(opts);
    if (vg->parsed()) return run_suite(verify_green_suite());
    if (vl->parsed()) return run_suite(verify_lp_suite());
    if (vc->parsed()) return run_suite(verify_constraint_suite());
    if (norms->parsed()) return run_norms(snapshot_path, opts);
    if (report->parsed()) return run_report(series_path, opts, report_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
