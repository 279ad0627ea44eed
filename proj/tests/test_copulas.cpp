#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fhcopula/copulas.hpp"
#include "fhcopula/validator.hpp"
#include "test_support.hpp"

using namespace fhc;
using namespace fhc::testing;

namespace {

double mixed_fd(const CopulaSpec& spec, double u, double v, double h) {
  auto c = [&](double a, double b) { return smoothed_value(spec, SquarePoint(a, b)); };
  return (c(u + h, v + h) - c(u + h, v - h) - c(u - h, v + h) + c(u - h, v - h)) / (4 * h * h);
}

struct Named {
  const char* name;
  CopulaSpec spec;
};

// Every (model, orientation) pair here passes validate_model.
std::vector<Named> validating_specs() {
  return {{"gauss 0.5", CopulaSpec::smoothed_upper(gaussian(0.5))},
          {"gauss 1", CopulaSpec::smoothed_upper(gaussian(1.0))},
          {"gauss 2", CopulaSpec::smoothed_upper(gaussian(2.0))},
          {"tapered", CopulaSpec::smoothed_upper(tapered_upper(0.0))},
          {"tapered skew", CopulaSpec::smoothed_upper(tapered_upper(0.3))},
          {"tapered lower", CopulaSpec::smoothed_lower(tapered_lower())}};
}

}  // namespace

TEST_CASE("Fréchet–Hoeffding values") {
  CHECK(fh_value(Family::fh_lower, SquarePoint(0.3, 0.5)) == 0.0);
  CHECK(fh_value(Family::fh_upper, SquarePoint(0.3, 0.5)) == 0.3);
  CHECK(fh_value(Family::fh_lower, SquarePoint(0.7, 0.8)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("smoothed_value examples") {
  const auto upper = CopulaSpec::smoothed_upper(constant(0.2));
  const auto lower = CopulaSpec::smoothed_lower(constant(0.2));
  // 1/2 - 0.2 * 4/(3 pi) / sqrt2 and 0.2 * 4/(3 pi) / sqrt2, matched by the quadrature oracle.
  CHECK(std::abs(smoothed_value(upper, SquarePoint(0.5, 0.5)) - 0.43997891225619293) <= 1e-15);
  CHECK(smoothed_value(upper, SquarePoint(0.2, 0.8)) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(std::abs(smoothed_value(lower, SquarePoint(0.5, 0.5)) - 0.060021087743807071) <= 1e-15);
}

TEST_CASE("smoothed_partials examples") {
  const auto upper = CopulaSpec::smoothed_upper(constant(0.2));
  auto [du, dv] = smoothed_partials(upper, SquarePoint(0.5, 0.5));
  CHECK(du == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(dv == doctest::Approx(0.5).epsilon(1e-15));
  std::tie(du, dv) = smoothed_partials(upper, SquarePoint(0.2, 0.8));
  CHECK(du == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(dv) <= 1e-15);

  const auto gauss = CopulaSpec::smoothed_upper(gaussian(1.0));
  const double h = 1e-6;
  std::tie(du, dv) = smoothed_partials(gauss, SquarePoint(0.55, 0.5));
  auto c = [&](double u, double v) { return smoothed_value(gauss, SquarePoint(u, v)); };
  CHECK(std::abs(du - (c(0.55 + h, 0.5) - c(0.55 - h, 0.5)) / (2 * h)) <= 1e-7);
  CHECK(std::abs(dv - (c(0.55, 0.5 + h) - c(0.55, 0.5 - h)) / (2 * h)) <= 1e-7);
}

TEST_CASE("smoothed_density examples") {
  const auto upper = CopulaSpec::smoothed_upper(constant(0.2));
  const double center = smoothed_density(upper, SquarePoint(0.5, 0.5));
  CHECK(std::abs(center - std::numbers::sqrt2 / (std::numbers::pi * 0.2)) <= 1e-14);
  CHECK(std::abs(center - 2.2507907903927652) <= 1e-14);
  CHECK(std::abs(center - mixed_fd(upper, 0.5, 0.5, 1e-4)) <= 1e-6 * center);

  // z = r exactly: w = 0, z = 0.2 -> u = 0.5 - 0.2/sqrt2, v = 0.5 + 0.2/sqrt2.
  const SquarePoint edge = diamond_to_square({0.0, 0.2});
  CHECK(std::abs(smoothed_density(upper, edge)) <= 1e-7);

  CHECK(smoothed_density(upper, SquarePoint(0.2, 0.8)) == 0.0);
  CHECK(smoothed_density(CopulaSpec::smoothed_upper(gaussian(1.0)), SquarePoint(0.2, 0.8)) == 0.0);
  CHECK(smoothed_density(CopulaSpec::smoothed_upper(skewed(0.3)), SquarePoint(0.2, 0.8)) == 0.0);
}

TEST_CASE("smoothed copulas sit between the bounds") {
  for (const auto& [name, spec] : validating_specs()) {
    CAPTURE(name);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
      for (int j = 0; j <= 200; ++j) {
        const SquarePoint p(i / 200.0, j / 200.0);
        const double c = smoothed_value(spec, p);
        worst = std::min({worst, c - fh_value(Family::fh_lower, p), fh_value(Family::fh_upper, p) - c});
      }
    }
    CHECK(worst >= -1e-12);
  }
}

TEST_CASE("boundary values are preserved for validating models") {
  for (const auto& [name, spec] : validating_specs()) {
    CAPTURE(name);
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double t = i / 1000.0;
      worst = std::max({worst, std::abs(smoothed_value(spec, SquarePoint(t, 0.0))),
                        std::abs(smoothed_value(spec, SquarePoint(0.0, t))),
                        std::abs(smoothed_value(spec, SquarePoint(t, 1.0)) - t),
                        std::abs(smoothed_value(spec, SquarePoint(1.0, t)) - t)});
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("first partials are conditional CDFs") {
  for (const auto& [name, spec] : validating_specs()) {
    CAPTURE(name);
    const int n = 101;
    for (int i = 0; i < n; ++i) {
      double prev_du = -1.0;
      double prev_dv = -1.0;
      for (int j = 0; j < n; ++j) {
        const double a = i / (n - 1.0);
        const double b = j / (n - 1.0);
        const auto [du, dv] = smoothed_partials(spec, SquarePoint(a, b));  // du along v
        const auto [du2, dv2] = smoothed_partials(spec, SquarePoint(b, a));  // dv along u
        CHECK(du >= -1e-10);
        CHECK(du <= 1.0 + 1e-10);
        CHECK(dv2 >= -1e-10);
        CHECK(dv2 <= 1.0 + 1e-10);
        CHECK(du >= prev_du - 1e-10);
        CHECK(dv2 >= prev_dv - 1e-10);
        prev_du = du;
        prev_dv = dv2;
        (void)dv;
        (void)du2;
      }
    }
  }
}

TEST_CASE("analytic partials and density match finite differences") {
  for (const auto& [name, spec] : validating_specs()) {
    CAPTURE(name);
    int checked = 0;
    for (const DiamondPoint& d : diamond_points(400, 2e-2, 5)) {
      const SmoothedEvaluation e = evaluate_smoothed(spec, diamond_to_square(d));
      if (std::abs(e.rho) > 1.0 - 1e-3) continue;
      // Keep the difference stencils clear of the band edge, where g''' blows up.
      const double r = radius_jet(spec.model(), d).r;
      if ((1.0 - std::abs(e.rho)) * r < 2e-3) continue;
      const SquarePoint p = diamond_to_square(d);
      const double h1 = 1e-6;
      auto c = [&](double u, double v) { return smoothed_value(spec, SquarePoint(u, v)); };
      const double fd_du = (c(p.u() + h1, p.v()) - c(p.u() - h1, p.v())) / (2 * h1);
      const double fd_dv = (c(p.u(), p.v() + h1) - c(p.u(), p.v() - h1)) / (2 * h1);
      CHECK(close_rel(fd_du, e.du, 1e-6));
      CHECK(close_rel(fd_dv, e.dv, 1e-6));
      // Richardson step removes the O(h^2) term of the mixed difference.
      const double fd_c =
          (4.0 * mixed_fd(spec, p.u(), p.v(), 1e-4) - mixed_fd(spec, p.u(), p.v(), 2e-4)) / 3.0;
      CHECK(close_rel(fd_c, e.density, 1e-6 * std::max(1.0, e.density)));
      ++checked;
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("density integrates to one for the Gaussian band") {
  const auto spec = CopulaSpec::smoothed_upper(gaussian(1.0));
  const int n = 1001;
  const double h = 1.0 / n;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += smoothed_density(spec, SquarePoint((i + 0.5) * h, (j + 0.5) * h));
    total += row * h * h;
  }
  // The density grows like 1/distance at the (0,0) and (1,1) corners, where
  // the radius collapses, so the midpoint rule converges only at first order
  // (about 0.3/n here).
  CHECK(total >= 1.0);
  CHECK(total <= 1.0 + 0.5 / n);
  CHECK(smoothed_value(spec, SquarePoint(1.0, 1.0)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("C2 across the band edge but not C3") {
  // z-direction derivatives of M-bar at w = 0 for the Gaussian band; the kink
  // of the bound sits at z = 0 and the band edge at z = r.
  const auto spec = CopulaSpec::smoothed_upper(gaussian(1.0));
  const double r = radius_jet(gaussian(1.0), {0.0, 0.0}).r;
  auto m = [&](double z) { return smoothed_value(spec, diamond_to_square({0.0, z})); };
  auto d2 = [&](double z, double h) { return (m(z + h) - 2 * m(z) + m(z - h)) / (h * h); };
  for (double eps : {1e-4, 1e-6}) {
    CHECK(std::abs(m(r + eps) - m(r - eps)) <= 5 * eps);
    const double h = 1e-3 * eps;
    const double s_in = (m(r - eps + h) - m(r - eps - h)) / (2 * h);
    const double s_out = (m(r + eps + h) - m(r + eps - h)) / (2 * h);
    CHECK(std::abs(s_in - s_out) <= 5 * eps);
  }
  // Second derivative from the closed form: -g''(z/r)/(r sqrt2), which decays
  // like sqrt(distance) inside the band and is 0 outside.
  for (double delta : {1e-3, 1e-4, 1e-5}) {
    CHECK(std::abs(d2(r - delta, 1e-6)) <= 5.0 * std::sqrt(delta / r) / r);
    CHECK(std::abs(d2(r + delta, 1e-6)) <= 1e-3);
  }

  double previous = 0.0;
  for (double delta : {1e-2, 1e-3, 1e-4}) {
    const double third = (m(r + 2 * delta) - 2 * m(r + delta) + 2 * m(r - delta) - m(r - 2 * delta)) /
                         (2 * delta * delta * delta);
    CHECK(std::abs(third) > previous);
    previous = std::abs(third);
  }
  CHECK(previous > 1e2);
}

TEST_CASE("collapsed radius returns the bound at the Gaussian corners") {
  const auto spec = CopulaSpec::smoothed_upper(gaussian(1.0));
  const SmoothedEvaluation top = evaluate_smoothed(spec, SquarePoint(1.0, 1.0));
  CHECK(top.value == 1.0);
  CHECK(top.density == 0.0);
  const SmoothedEvaluation bottom = evaluate_smoothed(spec, SquarePoint(0.0, 0.0));
  CHECK(bottom.value == 0.0);
}

TEST_CASE("lower smoothing mirrors the upper one") {
  // W-bar with r(z) equals M-bar with r(w) reflected: C_W(u,v) = u - C_M(u, 1-v).
  const auto lower = CopulaSpec::smoothed_lower(tapered_lower());
  const auto upper = CopulaSpec::smoothed_upper(tapered_upper());
  for (const DiamondPoint& d : diamond_points(200, 1e-6, 3)) {
    const SquarePoint p = diamond_to_square(d);
    const double wl = smoothed_value(lower, p);
    const double mu = smoothed_value(upper, SquarePoint(p.u(), 1.0 - p.v()));
    CHECK(std::abs(wl - (p.u() - mu)) <= 1e-14);
    CHECK(std::abs(smoothed_density(lower, p) - smoothed_density(upper, SquarePoint(p.u(), 1.0 - p.v()))) <=
          1e-12 * std::max(1.0, smoothed_density(lower, p)));
  }
}

TEST_CASE("fh_value rejects smoothed families") {
  CHECK_THROWS_AS(fh_value(Family::smoothed_upper, SquarePoint(0.1, 0.2)), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_smoothed(CopulaSpec::fh_upper(), SquarePoint(0.1, 0.2)), std::invalid_argument);
}
