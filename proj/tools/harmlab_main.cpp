// harmlab: construct and numerically verify families of sense-preserving
// planar harmonic mappings on the unit disk that share one Jacobian.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "harmlab/catalog.hpp"
#include "harmlab/errors.hpp"
#include "harmlab/expr.hpp"
#include "harmlab/family.hpp"
#include "harmlab/report.hpp"
#include "harmlab/suite.hpp"

namespace {

using namespace harmlab;

struct MapFlags {
  std::string map_spec;
  std::string catalog_name;
};

void add_map_flags(CLI::App* cmd, MapFlags& flags) {
  auto* m = cmd->add_option("--map", flags.map_spec, "map as \"<h-expr>;<g-expr>\"");
  auto* c = cmd->add_option("--catalog", flags.catalog_name, "built-in map name");
  m->excludes(c);
}

void add_grid_flags(CLI::App* cmd, GridSpec& grid) {
  cmd->add_option("--rmax", grid.r_max, "grid radius")->capture_default_str();
  cmd->add_option("--nr", grid.n_radial, "radial rings")->capture_default_str();
  cmd->add_option("--na", grid.n_angular, "angular samples")->capture_default_str();
}

void apply_env_seed(SuiteConfig& cfg) {
  if (const char* env = std::getenv("HARMLAB_SEED")) {
    cfg.seed = std::strtoull(env, nullptr, 10);
  }
}

int print_and_write(const CheckReport& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report_to_json(report);
  } else {
    write_report_json(report, out_path);
    for (const CheckResult& c : report.checks) {
      std::printf("[%s] %-34s max_residual=%.3e tol=%.3e%s%s\n",
                  c.pass ? "pass" : "FAIL", c.name.c_str(), c.max_residual,
                  c.tolerance, c.note.empty() ? "" : "  ", c.note.c_str());
    }
    std::printf("%s: %s -> %s\n", report.all_pass() ? "PASS" : "FAIL",
                report.suite_name.c_str(), out_path.c_str());
  }
  return report.all_pass() ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"planar harmonic mappings with identical Jacobians"};
  app.require_subcommand(1);

  // catalog
  auto* cmd_catalog = app.add_subcommand("catalog", "list built-in maps");

  // check
  auto* cmd_check = app.add_subcommand("check", "run the verification suite");
  MapFlags check_flags;
  SuiteConfig check_cfg;
  std::string check_out;
  add_map_flags(cmd_check, check_flags);
  add_grid_flags(cmd_check, check_cfg.grid);
  cmd_check->add_option("--step", check_cfg.fd_step, "FD step")->capture_default_str();
  cmd_check->add_option("--seed", check_cfg.seed, "random seed")->capture_default_str();
  cmd_check->add_option("--params", check_cfg.n_params, "family params samples")
      ->capture_default_str();
  cmd_check->add_option("--tol-fd", check_cfg.tol_fd, "FD-path tolerance")
      ->capture_default_str();
  cmd_check->add_option("--tol-analytic", check_cfg.tol_analytic,
                        "analytic-path tolerance")
      ->capture_default_str();
  cmd_check->add_option("--out", check_out, "write the JSON report here");

  // classify
  auto* cmd_classify = app.add_subcommand("classify", "print Type1|Type2");
  MapFlags classify_flags;
  add_map_flags(cmd_classify, classify_flags);

  // family
  auto* cmd_family = app.add_subcommand("family", "print a family member's series");
  MapFlags family_flags;
  add_map_flags(cmd_family, family_flags);
  double fam_alpha = 0.0, fam_beta = 0.0;
  std::string fam_z0 = "0", fam_c = "0", fam_emit = "series";
  int fam_order = kDefaultSeriesOrder;
  cmd_family->add_option("--alpha", fam_alpha, "alpha (radians)")->capture_default_str();
  cmd_family->add_option("--beta", fam_beta, "beta (radians)")->capture_default_str();
  cmd_family->add_option("--z0", fam_z0, "z0 (complex literal)")->capture_default_str();
  cmd_family->add_option("--C", fam_c, "C (complex literal)")->capture_default_str();
  cmd_family->add_option("--emit", fam_emit, "output format (series)")
      ->capture_default_str();
  cmd_family->add_option("--order", fam_order, "series order")->capture_default_str();

  // reconstruct
  auto* cmd_rec = app.add_subcommand("reconstruct", "recover omega from Q");
  MapFlags rec_flags;
  SuiteConfig rec_cfg;
  std::string rec_out;
  add_map_flags(cmd_rec, rec_flags);
  add_grid_flags(cmd_rec, rec_cfg.grid);
  cmd_rec->add_flag("--blackbox", rec_cfg.blackbox, "also probe Q from J samples");
  cmd_rec->add_option("--inner-step", rec_cfg.inner_step, "inner FD step")
      ->capture_default_str();
  cmd_rec->add_option("--outer-step", rec_cfg.outer_step, "outer FD step")
      ->capture_default_str();
  cmd_rec->add_option("--tol-blackbox", rec_cfg.tol_blackbox,
                      "black-box Q relative tolerance")
      ->capture_default_str();
  cmd_rec->add_option("--seed", rec_cfg.seed, "random seed")->capture_default_str();
  cmd_rec->add_option("--out", rec_out, "write the JSON report here");

  // grid
  auto* cmd_grid = app.add_subcommand("grid", "export grid samples as CSV");
  MapFlags grid_flags;
  GridSpec grid_spec;
  std::string grid_out = "grid.csv";
  add_map_flags(cmd_grid, grid_flags);
  add_grid_flags(cmd_grid, grid_spec);
  cmd_grid->add_option("--out", grid_out, "CSV path")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (cmd_catalog->parsed()) {
    for (const CatalogEntry& e : catalog()) {
      SuiteConfig cfg;
      cfg.catalog_name = e.name;
      const HarmonicMap f = resolve_map(cfg).map;
      const char* type =
          classify_type(f, cfg.grid) == MapType::kType1 ? "Type1" : "Type2";
      std::printf("%-14s %s  h = %s ; g = %s  (%s)\n", e.name.c_str(), type,
                  e.h_text.c_str(), e.g_text.c_str(), e.note.c_str());
    }
    return 0;
  }

  if (cmd_check->parsed()) {
    check_cfg.catalog_name = check_flags.catalog_name;
    check_cfg.map_spec = check_flags.map_spec;
    apply_env_seed(check_cfg);
    return print_and_write(run_check_suite(check_cfg), check_out);
  }

  if (cmd_classify->parsed()) {
    SuiteConfig cfg;
    cfg.catalog_name = classify_flags.catalog_name;
    cfg.map_spec = classify_flags.map_spec;
    const ResolvedMap r = resolve_map(cfg);
    std::printf("%s\n", classify_type(r.map, cfg.grid) == MapType::kType1 ? "Type1"
                                                                          : "Type2");
    return 0;
  }

  if (cmd_family->parsed()) {
    if (fam_emit != "series")
      raise(Errc::config_error, "--emit supports only 'series'");
    SuiteConfig cfg;
    cfg.catalog_name = family_flags.catalog_name;
    cfg.map_spec = family_flags.map_spec;
    const ResolvedMap r = resolve_map(cfg);
    FamilyParams params;
    params.alpha = fam_alpha;
    params.beta = fam_beta;
    params.z0 = parse_cx(fam_z0);
    params.C = parse_cx(fam_c);
    const HarmonicMap member = family_member(r.map, params, fam_order);
    const double radius = member.eval_radius();
    const PowerSeries hs = to_series(member.h, fam_order, radius);
    const PowerSeries gs = to_series(member.g, fam_order, radius);
    std::printf("# member of %s: alpha=%.17g beta=%.17g z0=%s C=%s\n",
                r.name.c_str(), params.alpha, params.beta,
                format_cx(params.z0).c_str(), format_cx(params.C).c_str());
    for (int n = 0; n <= hs.trunc_order(); ++n)
      std::printf("h %d %.17g %.17g\n", n, hs.coeff(n).real(), hs.coeff(n).imag());
    for (int n = 0; n <= gs.trunc_order(); ++n)
      std::printf("g %d %.17g %.17g\n", n, gs.coeff(n).real(), gs.coeff(n).imag());
    std::printf("c %.17g %.17g\n", member.c.real(), member.c.imag());
    return 0;
  }

  if (cmd_rec->parsed()) {
    rec_cfg.catalog_name = rec_flags.catalog_name;
    rec_cfg.map_spec = rec_flags.map_spec;
    apply_env_seed(rec_cfg);
    return print_and_write(reconstruct_command(rec_cfg), rec_out);
  }

  if (cmd_grid->parsed()) {
    SuiteConfig cfg;
    cfg.catalog_name = grid_flags.catalog_name;
    cfg.map_spec = grid_flags.map_spec;
    const ResolvedMap r = resolve_map(cfg);
    emit_grid_csv(r.map, grid_spec, grid_out);
    std::printf("wrote %s\n", grid_out.c_str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const harmlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
