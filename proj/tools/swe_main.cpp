// Command-line front end: run benchmark cases, refinement studies and the
// lake-at-rest suite. SWE_THREADS caps the data-parallel width; results are
// bitwise independent of it.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swe/drivers.hpp"
#include "swe/swe.hpp"

namespace {

// 0 success, 2 configuration error, 3 solver blowup, 4 stalled run,
// 5 invariant violation
int run_guarded(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const swe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const swe::BlowupError& e) {
    std::cerr << "solver blowup: " << e.what();
    if (e.rk_stage >= 0) std::cerr << " (rk stage " << e.rk_stage << ")";
    std::cerr << "\n";
    return 3;
  } catch (const swe::StallError& e) {
    std::cerr << "stalled run: " << e.what() << "\n";
    return 4;
  } catch (const swe::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-balanced fifth-order finite volume shallow water solver"};
  app.require_subcommand(1);

  // --- run ---
  auto* run = app.add_subcommand("run", "run one benchmark case");
  swe::RunConfig rc;
  std::string config_file;
  int nx = 0, ny = 0;
  double cfl = 0.0, tfinal = -1.0;
  bool pp_flag = false, strict_flag = false;
  std::vector<double> snaps;
  run->add_option("--case", rc.case_name, "case name (see list)")->required();
  auto* o_nx = run->add_option("--nx", nx, "cells in x");
  auto* o_ny = run->add_option("--ny", ny, "cells in y (2D)");
  auto* o_cfl = run->add_option("--cfl", cfl, "CFL number (default 0.6)");
  auto* o_tf = run->add_option("--tfinal", tfinal, "final time override");
  auto* o_pp = run->add_flag("--pp,!--no-pp", pp_flag,
                             "positivity limiter (default: case setting)");
  auto* o_st = run->add_flag(
      "--strict-pp,!--no-strict-pp", strict_flag,
      "enforce the provable PP step bound (default: on when pp is on)");
  run->add_option("--out", rc.out_dir, "output directory (default .)");
  auto* o_sn = run->add_option("--snapshots", snaps,
                               "comma-separated snapshot times")
                   ->delimiter(',');
  run->add_option("--config", config_file,
                  "key = value file with a [case] section of overrides");

  // --- convergence ---
  auto* conv = app.add_subcommand("convergence",
                                  "refinement ladder with the CFL schedule");
  std::string conv_case, conv_out = ".";
  int levels = 0, ref_n = 0;
  conv->add_option("--case", conv_case, "case name")->required();
  conv->add_option("--levels", levels, "ladder levels (default 5 / 4)");
  conv->add_option("--ref-n", ref_n, "reference grid size");
  conv->add_option("--out", conv_out, "output directory for convergence.csv");

  // --- cproperty ---
  auto* cprop = app.add_subcommand("cproperty", "lake-at-rest exactness suite");
  int dim = 0;
  bool no_fix = false;
  cprop->add_option("--dim", dim, "1, 2, or 0 for both (default)");
  cprop
      ->add_flag("--debug-disable-hydrostatic-fix", no_fix,
                 "negative control: break the face-depth fix")
      ->group("");  // hidden

  // --- list ---
  app.add_subcommand("list", "print the case catalogue");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    return run_guarded([&] {
      if (!config_file.empty()) {
        auto sections = swe::parse_config_file(config_file);
        if (auto it = sections.find(rc.case_name); it != sections.end())
          swe::apply_config_section(rc, it->second);
      }
      if (o_nx->count()) rc.nx = nx;
      if (o_ny->count()) rc.ny = ny;
      if (o_cfl->count()) rc.cfl = cfl;
      if (o_tf->count()) rc.t_final = tfinal;
      if (o_pp->count()) rc.pp = pp_flag;
      if (o_st->count()) rc.strict_pp = strict_flag;
      if (o_sn->count()) {
        rc.snapshot_times = snaps;
        rc.snapshots_set = true;
      }
      swe::cmd_run(rc, std::cout);
    });
  }
  if (conv->parsed()) {
    return run_guarded([&] {
      std::filesystem::create_directories(conv_out);
      swe::cmd_convergence(conv_case, levels, ref_n,
                           conv_out + "/convergence.csv", &std::cout);
    });
  }
  if (cprop->parsed()) {
    int failures = 0;
    const int rc2 = run_guarded([&] {
      for (int d : {1, 2}) {
        if (dim != 0 && dim != d) continue;
        std::cout << d << "D lake-at-rest suite:\n";
        for (const auto& row : swe::cmd_cproperty(d, no_fix, &std::cout))
          failures += row.pass ? 0 : 1;
      }
    });
    if (rc2 != 0) return rc2;
    return failures == 0 ? 0 : 1;
  }
  swe::cmd_list(std::cout);
  return 0;
}
