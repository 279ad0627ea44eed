#pragma once

#include <optional>

#include <json.hpp>

#include "fhcopula/copulas.hpp"
#include "fhcopula/execution.hpp"

namespace fhc {

/// Result of sweeping the copula axioms over a grid of the unit square.
struct CopulaCheckReport {
  double boundary_max_err = 0.0;
  SquarePoint boundary_worst_point{0.0, 0.0};
  double min_rectangle_volume = 0.0;
  std::optional<double> min_density;       // empty for the singular bounds
  std::optional<double> density_integral;  // midpoint rule over the cells
  bool frechet_ok = false;
  int grid_n = 0;
  bool verdict = false;
};

inline constexpr double kBoundaryTolerance = 1e-8;
inline constexpr double kVolumeTolerance = 1e-10;
inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kIntegralTolerance = 1e-3;
inline constexpr double kFrechetSlack = 1e-12;

/// Nodes are u_i = i/(grid_n-1). Checks the four edges (C(u,0) = C(0,v) = 0,
/// C(u,1) = u, C(1,v) = v), every adjacent cell's rectangle volume,
/// W <= C <= M at the nodes, and for smoothed families the density at cell
/// midpoints. Requires grid_n >= 32.
CopulaCheckReport check_copula(const CopulaSpec& spec, int grid_n,
                               Execution exec = Execution::openmp);

/// C(u2,v2) - C(u2,v1) - C(u1,v2) + C(u1,v1). Throws std::invalid_argument
/// unless u1 <= u2 and v1 <= v2.
double rectangle_volume(const CopulaSpec& spec, double u1, double u2, double v1, double v2);

nlohmann::json to_json(const CopulaCheckReport& report);

}  // namespace fhc
