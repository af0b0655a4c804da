#include <doctest.h>

#include "harmlab/jet.hpp"
#include "harmlab/sampler.hpp"

using namespace harmlab;

namespace {

Jet jet_from(std::initializer_list<Cx> cs) {
  Jet j(static_cast<int>(cs.size()) - 1);
  int m = 0;
  for (const Cx& c : cs) j[m++] = c;
  return j;
}

double jet_dist(const Jet& a, const Jet& b) {
  REQUIRE(a.order() == b.order());
  double worst = 0.0;
  for (int m = 0; m <= a.order(); ++m) worst = std::max(worst, std::abs(a[m] - b[m]));
  return worst;
}

Jet random_jet(ParamSampler& rng, int order) {
  Jet j(order);
  for (int m = 0; m <= order; ++m) j[m] = rng.in_square(1.0);
  return j;
}

}  // namespace

TEST_CASE("jet product: polynomial and identity cases") {
  // (1+z)(1-z) = 1 - z^2 at 0
  const Jet p = jet_from({1.0, 1.0, 0.0});
  const Jet q = jet_from({1.0, -1.0, 0.0});
  CHECK(jet_dist(p * q, jet_from({1.0, 0.0, -1.0})) == 0.0);

  ParamSampler rng(7);
  const Jet x = random_jet(rng, 4);
  const Jet one = Jet::constant(Cx(1.0), 4);
  CHECK(jet_dist(x * one, x) == 0.0);
}

TEST_CASE("jet product: z^2 * z^3 at z=1 is the jet of z^5") {
  const Cx z0(1.0, 0.0);
  const Jet z = Jet::variable(z0, 3);
  const Jet z2 = z * z;
  const Jet z3 = z2 * z;
  // binomial oracle: (1+u)^5 = 1 + 5u + 10u^2 + 10u^3 + ...
  CHECK(jet_dist(z2 * z3, jet_from({1.0, 5.0, 10.0, 10.0})) <= 1e-14);
}

TEST_CASE("jet product requires equal orders") {
  CHECK_THROWS_AS(Jet(2) * Jet(3), Error);
  try {
    Jet(2) * Jet(3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_mismatch);
  }
}

TEST_CASE("jet reciprocal") {
  CHECK(jet_dist(recip(jet_from({1.0, 0.0, 0.0})), jet_from({1.0, 0.0, 0.0})) == 0.0);
  // geometric series: 1/(1+z) = 1 - z + z^2
  CHECK(jet_dist(recip(jet_from({1.0, 1.0, 0.0})), jet_from({1.0, -1.0, 1.0})) <= 1e-15);
  // long division of 1 by 2+u
  CHECK(jet_dist(recip(jet_from({2.0, 1.0, 0.0})), jet_from({0.5, -0.25, 0.125})) <= 1e-16);

  const Jet bad = jet_from({Cx(1e-13, 0.0), 1.0});
  CHECK_THROWS_AS(recip(bad), Error);
  try {
    recip(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::division_near_zero);
  }
}

TEST_CASE("jet exp and log") {
  CHECK(jet_dist(exp(jet_from({0.0, 1.0, 0.0})), jet_from({1.0, 1.0, 0.5})) <= 1e-16);
  CHECK(jet_dist(log(jet_from({1.0, 1.0, 0.0})), jet_from({0.0, 1.0, -0.5})) <= 1e-16);

  const Jet a = jet_from({0.3, 0.2, 0.1});
  CHECK(jet_dist(log(exp(a)), a) <= 1e-14);

  CHECK_THROWS_AS(log(jet_from({Cx(0.0), Cx(1.0)})), Error);
}

TEST_CASE("jet product is commutative and associative") {
  ParamSampler rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Jet a = random_jet(rng, 4);
    const Jet b = random_jet(rng, 4);
    const Jet c = random_jet(rng, 4);
    CHECK(jet_dist(a * b, b * a) <= 1e-14);
    CHECK(jet_dist((a * b) * c, a * (b * c)) <= 1e-14);
  }
}

TEST_CASE("jet derivative shift") {
  // z^3 at 2: [8, 12, 6, 1]; derivative 3z^2 at 2: [12, 12, 3]
  const Jet z = Jet::variable(Cx(2.0), 3);
  const Jet cubed = z * z * z;
  CHECK(jet_dist(jet_derivative(cubed), jet_from({12.0, 12.0, 3.0})) <= 1e-14);
  CHECK_THROWS_AS(jet_derivative(Jet(0)), Error);
}

TEST_CASE("jet integer powers, including negative") {
  const Jet z = Jet::variable(Cx(1.0, 1.0), 4);
  CHECK(jet_dist(pow_int(z, 5), z * z * z * z * z) <= 1e-13);
  CHECK(jet_dist(pow_int(z, 0), Jet::constant(Cx(1.0), 4)) == 0.0);

  const Jet one_plus_z = jet_from({1.0, 1.0, 0.0, 0.0});
  CHECK(jet_dist(pow_int(one_plus_z, -1), recip(one_plus_z)) == 0.0);
}

TEST_CASE("non-finite coefficients are detected") {
  Jet j(1);
  j[0] = Cx(1.0, 0.0);
  CHECK(j.finite());
  j[1] = Cx(std::numeric_limits<double>::infinity(), 0.0);
  CHECK(!j.finite());
}
