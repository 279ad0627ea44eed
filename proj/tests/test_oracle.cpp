#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fhcopula/copulas.hpp"
#include "fhcopula/oracle.hpp"
#include "test_support.hpp"

using namespace fhc;
using namespace fhc::testing;
using oracle::Integrand;
using oracle::OracleRequest;

TEST_CASE("disc_average examples") {
  double a = oracle::disc_average({Integrand::abs_z, {0.0, 0.0}, 0.2, 1e-10});
  CHECK(std::abs(a - 0.8 / (3.0 * std::numbers::pi)) <= 1e-11);
  CHECK(std::abs(a - 0.08488263631567751) <= 1e-11);

  a = oracle::disc_average({Integrand::abs_w, {0.5, 0.0}, 0.2, 1e-10});
  CHECK(std::abs(a - 0.5) <= 1e-12);

  a = oracle::disc_average({Integrand::fh_lower, {0.4, 0.1}, 0.1, 1e-10});
  CHECK(std::abs(a - 0.8 / std::numbers::sqrt2) <= 1e-11);
}

TEST_CASE("disc_average rejects bad requests") {
  CHECK_THROWS_AS(oracle::disc_average({Integrand::abs_z, {0.0, 0.0}, 0.0, 1e-10}), std::invalid_argument);
  CHECK_THROWS_AS(oracle::disc_average({Integrand::abs_z, {0.0, 0.0}, -1.0, 1e-10}), std::invalid_argument);
  CHECK_THROWS_AS(oracle::disc_average({Integrand::abs_z, {0.0, 0.0}, 0.2, 1e-13}), std::invalid_argument);
}

TEST_CASE("disc averages of |z| and |w| reproduce r g(rho)") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> radius(0.01, 0.5);
  std::uniform_real_distribution<double> rho(-2.0, 2.0);
  std::uniform_real_distribution<double> along(-0.7, 0.7);
  for (int i = 0; i < 100; ++i) {
    const double r = radius(rng);
    const double q = rho(rng);
    const double t = along(rng);
    const double exact = r * kernel_jet(q).g;
    const double by_z = oracle::disc_average({Integrand::abs_z, {t, q * r}, r, 1e-10});
    const double by_w = oracle::disc_average({Integrand::abs_w, {q * r, t}, r, 1e-10});
    CHECK(std::abs(by_z - exact) <= 1e-8 * std::max(1.0, r));
    CHECK(std::abs(by_w - exact) <= 1e-8 * std::max(1.0, r));
  }
}

TEST_CASE("disc averages of the bounds reproduce the smoothed copulas") {
  struct Case {
    CopulaSpec spec;
    Integrand integrand;
  };
  const std::vector<Case> cases{
      {CopulaSpec::smoothed_upper(gaussian(1.0)), Integrand::fh_upper},
      {CopulaSpec::smoothed_upper(skewed(0.3)), Integrand::fh_upper},
      {CopulaSpec::smoothed_upper(constant(0.2)), Integrand::fh_upper},
      {CopulaSpec::smoothed_lower(tapered_lower()), Integrand::fh_lower},
      {CopulaSpec::smoothed_lower(constant(0.2)), Integrand::fh_lower}};
  for (const Case& c : cases) {
    for (const DiamondPoint& d : diamond_points(100, 1e-6, 41)) {
      const double r = radius_jet(c.spec.model(), d).r;
      const double avg = oracle::disc_average({c.integrand, d, r, 1e-10});
      CHECK(std::abs(avg - smoothed_value(c.spec, diamond_to_square(d))) <= 1e-8);
    }
  }
}

TEST_CASE("fh_lower average is linear in the |w| average") {
  for (const DiamondPoint& d : diamond_points(100, 0.0, 43)) {
    const double r = 0.01 + 0.4 * std::abs(d.z);
    const double lower = oracle::disc_average({Integrand::fh_lower, d, r, 1e-10});
    const double abs_w = oracle::disc_average({Integrand::abs_w, d, r, 1e-10});
    CHECK(std::abs(lower - (d.w + abs_w) / std::numbers::sqrt2) <= 1e-10);
  }
}

TEST_CASE("fd_second_partials examples") {
  oracle::SecondDifferences s = oracle::fd_second_partials(
      [](const DiamondPoint& p) { return p.w * p.w; }, {0.1, 0.1}, 1e-4);
  CHECK(std::abs(s.f_ww - 2.0) <= 1e-6);
  CHECK(std::abs(s.f_zz) <= 1e-6);

  s = oracle::fd_second_partials([](const DiamondPoint& p) { return p.w * p.z; }, {0.1, 0.1}, 1e-4);
  CHECK(std::abs(s.f_ww) <= 1e-6);
  CHECK(std::abs(s.f_zz) <= 1e-6);

  const RadiusModel model = gaussian(1.0);
  const oracle::ScalarField big_g = [&](const DiamondPoint& p) {
    const double r = radius_jet(model, p).r;
    return r * kernel_jet(p.z / r).g;
  };
  const DiamondPoint p{0.05, 0.02};
  s = oracle::fd_second_partials(big_g, p, 1e-4);
  const RadiusJet j = radius_jet(model, p);
  const BandHessian h = band_hessian(j, p.z / j.r, Family::smoothed_upper);
  CHECK(close_rel(s.f_ww, h.along, 1e-5));
  CHECK(close_rel(s.f_zz, h.across, 1e-5));

  auto f = [](const DiamondPoint& q) { return q.w; };
  CHECK_THROWS_AS(oracle::fd_second_partials(f, p, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(oracle::fd_second_partials(f, p, 0.1), std::invalid_argument);
}
