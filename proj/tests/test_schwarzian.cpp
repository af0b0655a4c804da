#include <doctest.h>

#include "harmlab/catalog.hpp"
#include "harmlab/sampler.hpp"
#include "harmlab/schwarzian.hpp"

using namespace harmlab;

namespace {

HarmonicMap catalog_map(const std::string& name) {
  const CatalogEntry& e = catalog_lookup(name);
  return HarmonicMap{e.h, e.g, Cx(0.0)};
}

Mobius random_mobius(ParamSampler& rng) {
  Mobius m;
  do {
    m = Mobius{rng.in_square(1.0), rng.in_square(1.0), rng.in_square(1.0),
               rng.in_square(1.0)};
  } while (std::abs(m.det()) < 0.3);
  return m;
}

}  // namespace

TEST_CASE("Schwarzian closed forms") {
  // Mobius maps have vanishing Schwarzian
  ParamSampler rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Mobius m = random_mobius(rng);
    const AnalyticFunction id = AnalyticFunction::parse("z");
    for (int k = 0; k < 5; ++k) {
      const Cx z = rng.in_disk(0.6);
      if (std::abs(m.c * z + m.d) < 0.3) continue;
      CHECK(std::abs(schwarzian_mobius_composed(m, id, z)) <= 1e-12);
    }
  }

  // S[exp] = -1/2 everywhere
  const AnalyticFunction e = AnalyticFunction::parse("exp(z)");
  CHECK(std::abs(schwarzian(e, Cx(0.0)) - Cx(-0.5)) <= 1e-15);
  CHECK(std::abs(schwarzian(e, Cx(0.4, -0.3)) - Cx(-0.5)) <= 1e-13);

  // S[z^2](1) = -3/2; S[z^2] is undefined at the critical point 0
  const AnalyticFunction sq = AnalyticFunction::parse("z^2");
  CHECK(std::abs(schwarzian(sq, Cx(1.0)) - Cx(-1.5)) <= 1e-14);
  CHECK_THROWS_AS(schwarzian(sq, Cx(0.0)), Error);
}

TEST_CASE("Schwarzian is Mobius-composition invariant on catalog functions") {
  ParamSampler rng(43);
  for (const CatalogEntry& entry : catalog()) {
    for (const AnalyticFunction* fn : {&entry.h, &entry.g}) {
      int used = 0;
      for (int trial = 0; trial < 200 && used < 50; ++trial) {
        const Cx z = rng.in_disk(0.6);
        const Jet j = fn->eval_jet(z, 3);
        if (std::abs(j.derivative(1)) < 0.05) continue;  // not locally univalent there
        const Mobius m = random_mobius(rng);
        if (std::abs(m.c * j.value() + m.d) < 0.3) continue;
        const Cx direct = schwarzian_jet(j);
        const Cx composed = schwarzian_jet(mobius_apply_jet(m, j));
        CHECK(std::abs(composed - direct) <= 1e-9 * (1.0 + std::abs(direct)));
        ++used;
      }
    }
  }
}

TEST_CASE("compute_Q_analytic closed forms") {
  CHECK(std::abs(compute_Q_analytic(AnalyticFunction::parse("z"), Cx(0.3, 0.2))) <=
        1e-14);

  // omega = z^2: Q = 2 S[z^2] = -3/z^2 = -12 at z = 0.5
  CHECK(std::abs(compute_Q_analytic(AnalyticFunction::parse("z^2"), Cx(0.5)) -
                 Cx(-12.0)) <= 1e-12);

  // a disk automorphism is a Mobius map, hence Q = 0
  const AnalyticFunction blaschke = AnalyticFunction::parse("(z+0.3)/(1+0.3*z)");
  CHECK(std::abs(compute_Q_analytic(blaschke, Cx(0.2, -0.4))) <= 1e-12);

  // omega' = 0 is a point of Z
  CHECK_THROWS_AS(compute_Q_analytic(AnalyticFunction::parse("z^2"), Cx(0.0)), Error);
  try {
    compute_Q_analytic(AnalyticFunction::parse("z^2"), Cx(0.0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_at_point);
  }
}

TEST_CASE("Q equals twice the Schwarzian for catalog dilatations") {
  GridSpec grid;
  grid.r_max = 0.6;
  grid.n_radial = 8;
  grid.n_angular = 16;
  for (const char* name : {"shear", "expmap", "blaschke-dil", "cubic-dil", "entire-dil"}) {
    const HarmonicMap f = catalog_map(name);
    for (const Cx& z : grid.points()) {
      const Jet w = omega_jet(f, z, 3);
      if (std::abs(w.derivative(1)) < 0.1) continue;
      INFO(name);
      CHECK(std::abs(compute_Q_analytic_jet(w) - 2.0 * schwarzian_jet(w)) <= 1e-9);
    }
  }
}

TEST_CASE("compute_Q_blackbox") {
  SUBCASE("omega = z gives Q near zero") {
    const HarmonicMap f = catalog_map("shear");
    const ScalarField jf{[f](Cx z) { return jacobian(f, z); }, f.eval_radius()};
    CHECK(std::abs(compute_Q_blackbox(jf, Cx(0.3, 0.0))) <= 1e-2);
  }

  SUBCASE("omega = z^2 gives Q near -12 at z = 0.5") {
    const HarmonicMap f{AnalyticFunction::parse("z"), AnalyticFunction::parse("z^3/3"),
                        Cx(0.0)};
    const ScalarField jf{[f](Cx z) { return jacobian(f, z); }, f.eval_radius()};
    const Cx q = compute_Q_blackbox(jf, Cx(0.5, 0.0));
    CHECK(std::abs(q - Cx(-12.0)) <= 0.02 * 12.0);
  }

  SUBCASE("a type-1 Jacobian raises NegativeInnerValue") {
    const ScalarField constant_j{[](Cx) { return 0.75; }, 0.95};
    CHECK_THROWS_AS(compute_Q_blackbox(constant_j, Cx(0.2, 0.1)), Error);
    try {
      compute_Q_blackbox(constant_j, Cx(0.2, 0.1));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::negative_inner_value);
    }
  }

  SUBCASE("stencil reach is validated") {
    const ScalarField jf{[](Cx z) { return 1.0 - abs2(z); }, 0.95};
    CHECK_THROWS_AS(compute_Q_blackbox(jf, Cx(0.94, 0.0)), Error);
    CHECK_THROWS_AS(compute_Q_blackbox(jf, Cx(0.0), 1e-3, 2e-3), Error);  // outer < 5x inner
  }
}

TEST_CASE("solve_schwarzian_series") {
  SUBCASE("free equation: omega_rec = z") {
    const PowerSeries q(std::vector<Cx>(17, Cx(0.0)));
    const PowerSeries rec = solve_schwarzian_series(q, 16);
    CHECK(std::abs(rec.coeff(1) - Cx(1.0)) == 0.0);
    for (int n = 0; n <= rec.trunc_order(); ++n) {
      if (n != 1) CHECK(std::abs(rec.coeff(n)) == 0.0);
    }
  }

  SUBCASE("self-consistency for omega = z + z^3/10") {
    const PowerSeries omega = series_from_expr(parse_expr("z+z^3/10"), 40);
    const PowerSeries q = q_series_from_omega(omega);
    const PowerSeries rec = solve_schwarzian_series(q, 36);
    for (const Cx z : {Cx(0.1, 0.0), Cx(0.0, 0.3), Cx(0.2, -0.2)}) {
      const Cx lhs = 2.0 * schwarzian_jet(rec.eval_jet(z, 3));
      CHECK(std::abs(lhs - q.eval(z)) <= 1e-9);
    }
    // the (0, 1, 0)-normalized solution reproduces omega itself here
    for (int n = 0; n <= 8; ++n) CHECK(std::abs(rec.coeff(n) - omega.coeff(n)) <= 1e-12);
  }

  SUBCASE("Mobius relation for omega = 0.9 z/(1+0.2 z)") {
    const PowerSeries omega = series_from_expr(parse_expr("0.9*z/(1+0.2*z)"), 48);
    const PowerSeries q = q_series_from_omega(omega);
    const PowerSeries rec = solve_schwarzian_series(q, 48);

    // 3-point fit, then 20 more validation points
    std::vector<Cx> probes;
    for (int k = 0; k < 23; ++k)
      probes.push_back((0.25 + 0.01 * k) * unit_phase(0.27 * k));
    std::vector<Cx> src, dst;
    for (const Cx& p : probes) {
      src.push_back(rec.eval(p));
      dst.push_back(omega.eval(p));
    }
    const MobiusFit fit = fit_mobius_values(src, dst, probes, 1e-8);
    CHECK(fit.validation_residual <= 1e-8);
  }
}

TEST_CASE("q_series of a Mobius dilatation vanishes") {
  const PowerSeries omega = series_from_expr(parse_expr("0.9*(z+0.3)/(1+0.3*z)"), 32);
  const PowerSeries q = q_series_from_omega(omega);
  for (int n = 0; n <= q.trunc_order(); ++n) CHECK(std::abs(q.coeff(n)) <= 1e-12);
}

TEST_CASE("default fit probes sit on the 0.4 circle") {
  const std::vector<Cx> probes = default_fit_probes();
  CHECK(probes.size() == 8);
  for (const Cx& p : probes) CHECK(std::abs(std::abs(p) - 0.4) <= 1e-15);
}
