#include "fhcopula/checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"

namespace fhc {

namespace {

struct DensityRow {
  double min = std::numeric_limits<double>::infinity();
  double sum = 0.0;
};

}  // namespace

CopulaCheckReport check_copula(const CopulaSpec& spec, int grid_n, Execution exec) {
  if (grid_n < 32) throw std::invalid_argument("check_copula: grid_n must be >= 32");
  const int n = grid_n;
  const double h = 1.0 / (n - 1);
  auto node = [h, n](int i) { return i == n - 1 ? 1.0 : i * h; };

  // Node values, row-major in u.
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  std::vector<char> frechet_row(n, 1);
  detail::for_each_index(n, exec, [&](std::ptrdiff_t i) {
    for (int j = 0; j < n; ++j) {
      const SquarePoint p(node(static_cast<int>(i)), node(j));
      const double c = copula_value(spec, p);
      values[i * n + j] = c;
      const double lo = std::max(p.u() + p.v() - 1.0, 0.0);
      const double hi = std::min(p.u(), p.v());
      if (!(c >= lo - kFrechetSlack && c <= hi + kFrechetSlack)) frechet_row[i] = 0;
    }
  });

  CopulaCheckReport report;
  report.grid_n = n;
  report.frechet_ok = std::all_of(frechet_row.begin(), frechet_row.end(), [](char ok) { return ok; });

  auto at = [&](int i, int j) { return values[static_cast<std::size_t>(i) * n + j]; };
  report.boundary_max_err = -1.0;
  auto edge = [&](int i, int j, double required) {
    const double err = std::abs(at(i, j) - required);
    if (err > report.boundary_max_err || std::isnan(err)) {
      report.boundary_max_err = err;
      report.boundary_worst_point = SquarePoint(node(i), node(j));
    }
  };
  for (int k = 0; k < n; ++k) {
    edge(k, 0, 0.0);            // C(u,0) = 0
    edge(0, k, 0.0);            // C(0,v) = 0
    edge(k, n - 1, node(k));    // C(u,1) = u
    edge(n - 1, k, node(k));    // C(1,v) = v
  }

  double min_volume = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      const double vol = at(i + 1, j + 1) - at(i + 1, j) - at(i, j + 1) + at(i, j);
      min_volume = std::min(min_volume, vol);
    }
  }
  report.min_rectangle_volume = min_volume;

  bool density_ok = true;
  if (spec.smoothed()) {
    std::vector<DensityRow> rows(n - 1);
    detail::for_each_index(n - 1, exec, [&](std::ptrdiff_t i) {
      DensityRow& row = rows[i];
      const double u = (static_cast<double>(i) + 0.5) * h;
      for (int j = 0; j + 1 < n; ++j) {
        const double c = smoothed_density(spec, SquarePoint(u, (j + 0.5) * h));
        row.min = std::min(row.min, c);
        row.sum += c;
      }
    });
    double min_density = std::numeric_limits<double>::infinity();
    double integral = 0.0;
    for (const DensityRow& row : rows) {
      min_density = std::min(min_density, row.min);
      integral += row.sum * h * h;
    }
    report.min_density = min_density;
    report.density_integral = integral;
    density_ok = min_density >= -kDensityTolerance &&
                 std::abs(integral - 1.0) <= kIntegralTolerance;
  }

  report.verdict = report.boundary_max_err <= kBoundaryTolerance &&
                   report.min_rectangle_volume >= -kVolumeTolerance && density_ok &&
                   report.frechet_ok;
  return report;
}

double rectangle_volume(const CopulaSpec& spec, double u1, double u2, double v1, double v2) {
  if (!(u1 <= u2) || !(v1 <= v2)) {
    throw std::invalid_argument("rectangle_volume: need u1 <= u2 and v1 <= v2");
  }
  auto c = [&](double u, double v) { return copula_value(spec, SquarePoint(u, v)); };
  return c(u2, v2) - c(u2, v1) - c(u1, v2) + c(u1, v1);
}

nlohmann::json to_json(const CopulaCheckReport& report) {
  auto opt = [](const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(); };
  return nlohmann::json{
      {"boundary_max_err", report.boundary_max_err},
      {"boundary_worst_point",
       {{"u", report.boundary_worst_point.u()}, {"v", report.boundary_worst_point.v()}}},
      {"min_rectangle_volume", report.min_rectangle_volume},
      {"min_density", opt(report.min_density)},
      {"density_integral", opt(report.density_integral)},
      {"frechet_ok", report.frechet_ok},
      {"grid_n", report.grid_n},
      {"verdict", report.verdict},
  };
}

}  // namespace fhc
