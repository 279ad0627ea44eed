#pragma once

#include <optional>

#include <json.hpp>

#include "fhcopula/execution.hpp"
#include "fhcopula/geometry.hpp"
#include "fhcopula/radius.hpp"

namespace fhc {

/// upper_M smooths min(u,v) across z = 0; lower_W smooths max(u+v-1,0) across w = 0.
enum class Orientation { upper_M, lower_W };

const char* to_string(Orientation o);

/// Pointwise legality certificate. Dividing the density by g''(rho) > 0 (and
/// multiplying by r) leaves p(rho) = a rho^2 + b rho + c; the smoothed copula
/// has nonnegative density at every rho in [-1,1] iff min p >= 0 there.
struct QuadraticCertificate {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double min_value_on_unit_interval = 0.0;
  bool pass = false;
  /// (r_w)^2 <= (1/2 - |r_z|)^2 + 3/4 and r_ww <= r_zz for upper_M (roles
  /// swapped for lower_W). Informational.
  bool paper_condition_pass = false;
  /// The sharper vertex condition c >= b'^2/(4a) with b' = -r_across, defined
  /// only when a > 0. Informational.
  std::optional<bool> exact_vertex_condition;
};

QuadraticCertificate certify_pointwise(const RadiusJet& jet, Orientation o);

/// Minimum of a x^2 + b x + c over [-1, 1].
double quadratic_min_on_unit_interval(double a, double b, double c);

inline constexpr double kQuadraticTolerance = 1e-12;
inline constexpr double kContainmentInset = 1e-9;

struct ContainmentResult {
  bool pass = false;
  double worst_margin = 0.0;
  DiamondPoint worst_point;
};

/// Samples n points per edge of the diamond, inset by 1e-9, and requires the
/// kink coordinate to clear the radius there (|z| >= r for upper_M,
/// |w| >= r for lower_W) so that averaging leaves the boundary values alone.
ContainmentResult containment_check(const RadiusModel& model, Orientation o, int n,
                                    Execution exec = Execution::openmp);

struct ValidationReport {
  bool positivity_pass = false;
  bool quadratic_pass = false;
  bool paper_sufficient_pass = false;
  bool containment_pass = false;
  DiamondPoint worst_point;  // lowest quadratic minimum on the grid
  double worst_margin = 0.0;
  DiamondPoint containment_worst_point;
  double containment_worst_margin = 0.0;
  int grid_n = 0;

  bool verdict() const { return positivity_pass && quadratic_pass && containment_pass; }
};

/// Sweeps a grid_n x grid_n lattice of the diamond (points with margin > 1e-6),
/// then runs containment_check with n = 4 grid_n.
ValidationReport validate_model(const RadiusModel& model, Orientation o, int grid_n,
                                Execution exec = Execution::openmp);

nlohmann::json to_json(const ValidationReport& report);

}  // namespace fhc
