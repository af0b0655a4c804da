#include <doctest.h>

#include "harmlab/mobius.hpp"
#include "harmlab/sampler.hpp"

using namespace harmlab;

namespace {

Mobius random_mobius(ParamSampler& rng) {
  Mobius m;
  do {
    m = Mobius{rng.in_square(1.0), rng.in_square(1.0), rng.in_square(1.0),
               rng.in_square(1.0)};
  } while (std::abs(m.det()) < 0.3);
  return m;
}

}  // namespace

TEST_CASE("mobius apply: identity, inversion, pole, degeneracy") {
  const Mobius id = Mobius::identity();
  CHECK(mobius_apply(id, Cx(0.3, -0.8)) == Cx(0.3, -0.8));

  const Mobius inv{Cx(0.0), Cx(1.0), Cx(1.0), Cx(0.0)};
  CHECK(mobius_apply(inv, Cx(2.0, 0.0)) == Cx(0.5, 0.0));
  CHECK_THROWS_AS(mobius_apply(inv, Cx(0.0)), Error);

  const Mobius degenerate{Cx(1.0), Cx(2.0), Cx(2.0), Cx(4.0)};
  CHECK_THROWS_AS(mobius_apply(degenerate, Cx(0.1)), Error);
  try {
    mobius_apply(degenerate, Cx(0.1));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_mobius);
  }
}

TEST_CASE("compose with inverse is a two-sided identity") {
  ParamSampler rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Mobius m = random_mobius(rng);
    const Mobius right = mobius_compose(m, mobius_inverse(m));
    const Mobius left = mobius_compose(mobius_inverse(m), m);
    for (const Cx w : {Cx(0.1, 0.2), Cx(-0.4, 0.3), Cx(0.7, -0.5)}) {
      CHECK(std::abs(mobius_apply(right, w) - w) <= 1e-12);
      CHECK(std::abs(mobius_apply(left, w) - w) <= 1e-12);
    }
  }
}

TEST_CASE("composition is associative up to the projective scalar") {
  ParamSampler rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const Mobius a = random_mobius(rng);
    const Mobius b = random_mobius(rng);
    const Mobius c = random_mobius(rng);
    const Mobius left = mobius_compose(mobius_compose(a, b), c);
    const Mobius right = mobius_compose(a, mobius_compose(b, c));
    for (const Cx w : {Cx(0.05, 0.1), Cx(-0.3, 0.25), Cx(0.2, -0.6)}) {
      Cx lv, rv;
      try {
        lv = mobius_apply(left, w);
        rv = mobius_apply(right, w);
      } catch (const Error&) {
        continue;  // w happened to sit at a pole
      }
      CHECK(std::abs(lv - rv) <= 1e-12 * (1.0 + std::abs(lv)));
    }
  }
}

TEST_CASE("disk automorphisms") {
  const Mobius id = disk_automorphism({0.0, Cx(0.0)});
  CHECK(mobius_apply(id, Cx(0.37, -0.11)) == Cx(0.37, -0.11));

  const double pi = 3.14159265358979323846;
  const Mobius flip = disk_automorphism({pi, Cx(0.0)});
  CHECK(std::abs(mobius_apply(flip, Cx(0.3, 0.4)) - Cx(-0.3, -0.4)) <= 1e-15);

  const Mobius t = disk_automorphism({0.0, Cx(0.4, 0.0)});
  for (int k = 0; k < 16; ++k) {
    const Cx w = unit_phase(2.0 * pi * k / 16.0);
    CHECK(std::abs(std::abs(mobius_apply(t, w)) - 1.0) <= 1e-12);
  }

  CHECK_THROWS_AS(disk_automorphism({0.0, Cx(1.0, 0.0)}), Error);
  CHECK_THROWS_AS(disk_automorphism({0.0, Cx(0.97, 0.0)}), Error);  // 0.95 guard
}

TEST_CASE("is_disk_automorphism") {
  CHECK(is_disk_automorphism(disk_automorphism({0.3, Cx(0.0, 0.2)})));

  const Mobius dilate{Cx(2.0), Cx(0.0), Cx(0.0), Cx(1.0)};
  CHECK(!is_disk_automorphism(dilate));

  const Mobius invert{Cx(0.0), Cx(1.0), Cx(1.0), Cx(0.0)};
  CHECK(!is_disk_automorphism(invert));
}

TEST_CASE("automorphism parameter extraction round-trips") {
  ParamSampler rng(33);
  for (int trial = 0; trial < 25; ++trial) {
    DiskAutomorphismParams p;
    p.gamma = rng.angle();
    p.z0 = rng.in_disk(0.9);
    const Mobius t = disk_automorphism(p);

    // T(-z0) = 0 is a direct evaluation
    CHECK(std::abs(mobius_apply(t, -p.z0)) <= 1e-12);

    const DiskAutomorphismParams rec = automorphism_params(t);
    CHECK(std::abs(rec.z0 - p.z0) <= 1e-12);
    const double two_pi = 6.283185307179586476925286766559;
    double dg = std::abs(rec.gamma - p.gamma);
    while (dg > two_pi / 2.0) dg = std::abs(dg - two_pi);
    CHECK(dg <= 1e-12);
  }
}

TEST_CASE("mobius_from_3_points") {
  // fixing three points pins the map: src = dst = (0.2, 0.5i, -0.4)
  const std::array<Cx, 3> fixed = {Cx(0.2, 0.0), Cx(0.0, 0.5), Cx(-0.4, 0.0)};
  const Mobius id_fit = mobius_from_3_points(fixed, fixed);
  CHECK(std::abs(mobius_apply(id_fit, Cx(0.3, 0.3)) - Cx(0.3, 0.3)) <= 1e-13);

  const Mobius doubling = mobius_from_3_points({Cx(0.0), Cx(1.0), Cx(-1.0)},
                                               {Cx(0.0), Cx(2.0), Cx(-2.0)});
  CHECK(std::abs(mobius_apply(doubling, Cx(0.0, 1.0)) - Cx(0.0, 2.0)) <= 1e-13);

  // (0,1,2) -> (1, 1/2, 1/3) is w -> 1/(1+w); check at w = 3
  const Mobius recip_shift = mobius_from_3_points(
      {Cx(0.0), Cx(1.0), Cx(2.0)}, {Cx(1.0), Cx(0.5), Cx(1.0 / 3.0)});
  CHECK(std::abs(mobius_apply(recip_shift, Cx(3.0)) - Cx(0.25)) <= 1e-13);

  CHECK_THROWS_AS(mobius_from_3_points({Cx(0.0), Cx(0.0), Cx(1.0)},
                                       {Cx(0.0), Cx(1.0), Cx(2.0)}),
                  Error);
}

TEST_CASE("fit_disk_automorphism: recovery and rejection") {
  const std::vector<Cx> probes = {0.4 * unit_phase(0.0),  0.4 * unit_phase(0.8),
                                  0.4 * unit_phase(1.6),  0.4 * unit_phase(2.4),
                                  0.4 * unit_phase(3.2),  0.4 * unit_phase(4.0),
                                  0.4 * unit_phase(4.8),  0.4 * unit_phase(5.6)};
  const AnalyticFunction rec = AnalyticFunction::parse("z");

  SUBCASE("target equals rec: identity") {
    const Mobius m = fit_disk_automorphism(rec, rec, probes);
    CHECK(is_disk_automorphism(m));
    CHECK(std::abs(mobius_apply(m, Cx(0.21, -0.34)) - Cx(0.21, -0.34)) <= 1e-12);
  }

  SUBCASE("target = T o rec recovers T") {
    const DiskAutomorphismParams truth{0.7, Cx(0.3, 0.1)};
    const Mobius t = disk_automorphism(truth);
    std::vector<Cx> rec_vals, target_vals;
    for (const Cx& p : probes) {
      rec_vals.push_back(p);
      target_vals.push_back(mobius_apply(t, p));
    }
    const MobiusFit fit = fit_disk_automorphism_values(rec_vals, target_vals, probes);
    const DiskAutomorphismParams got = automorphism_params(fit.m);
    CHECK(std::abs(got.z0 - truth.z0) <= 1e-9);
    double dg = std::abs(got.gamma - truth.gamma);
    const double two_pi = 6.283185307179586476925286766559;
    while (dg > two_pi / 2.0) dg = std::abs(dg - two_pi);
    CHECK(dg <= 1e-9);
    CHECK(fit.validation_residual <= 1e-9);
  }

  SUBCASE("target = 2 rec is Mobius-related but not an automorphism") {
    const AnalyticFunction target = AnalyticFunction::parse("2*z");
    CHECK_THROWS_AS(fit_disk_automorphism(target, rec, probes), Error);
    try {
      fit_disk_automorphism(target, rec, probes);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_disk_automorphism);
    }
  }

  SUBCASE("non-Mobius relation raises FitMismatch") {
    std::vector<Cx> rec_vals, target_vals;
    for (const Cx& p : probes) {
      rec_vals.push_back(p);
      target_vals.push_back(p * p);  // squaring is not fractional-linear
    }
    CHECK_THROWS_AS(fit_mobius_values(rec_vals, target_vals, probes, 1e-6), Error);
    try {
      fit_mobius_values(rec_vals, target_vals, probes, 1e-6);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::fit_mismatch);
    }
  }
}
