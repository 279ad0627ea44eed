#pragma once

#include <optional>
#include <utility>

#include "fhcopula/geometry.hpp"
#include "fhcopula/kernel.hpp"
#include "fhcopula/radius.hpp"

namespace fhc {

enum class Family { fh_lower, fh_upper, smoothed_lower, smoothed_upper };

const char* to_string(Family f);

/// Which copula is evaluated. Smoothed families carry a radius model, the
/// Fréchet–Hoeffding bounds carry none.
class CopulaSpec {
 public:
  static CopulaSpec fh_lower() { return CopulaSpec(Family::fh_lower, std::nullopt); }
  static CopulaSpec fh_upper() { return CopulaSpec(Family::fh_upper, std::nullopt); }
  static CopulaSpec smoothed_lower(RadiusModel model) {
    return CopulaSpec(Family::smoothed_lower, std::move(model));
  }
  static CopulaSpec smoothed_upper(RadiusModel model) {
    return CopulaSpec(Family::smoothed_upper, std::move(model));
  }

  Family family() const { return family_; }
  bool smoothed() const { return model_.has_value(); }
  /// Precondition: smoothed().
  const RadiusModel& model() const { return *model_; }

 private:
  CopulaSpec(Family family, std::optional<RadiusModel> model)
      : family_(family), model_(std::move(model)) {}

  Family family_;
  std::optional<RadiusModel> model_;
};

/// Everything the closed forms give at one point of the square.
struct SmoothedEvaluation {
  double value = 0.0;
  double du = 0.0;  // dC/du, the conditional CDF of V given U = u
  double dv = 0.0;
  double density = 0.0;
  double band_average = 0.0;  // F (lower) or G (upper) at the point
  double rho = 0.0;           // w/r (lower) or z/r (upper)
};

/// max(u+v-1, 0) or min(u,v). Throws std::invalid_argument for smoothed families.
double fh_value(Family family, const SquarePoint& p);

/// Closed-form evaluation of W-bar = (w + r g(w/r))/sqrt2 or
/// M-bar = 1/2 + (w - r g(z/r))/sqrt2 with partials and density.
/// Boundary points use the continuous extension; where the radius has
/// collapsed to 0 (Gaussian band corners) the bound itself is returned.
SmoothedEvaluation evaluate_smoothed(const CopulaSpec& spec, const SquarePoint& p);

double smoothed_value(const CopulaSpec& spec, const SquarePoint& p);
std::pair<double, double> smoothed_partials(const CopulaSpec& spec, const SquarePoint& p);
double smoothed_density(const CopulaSpec& spec, const SquarePoint& p);

/// Value of any family: fh_value or smoothed_value.
double copula_value(const CopulaSpec& spec, const SquarePoint& p);

/// Second partials of the disc average A = r g(rho) in diamond coordinates,
/// where the kink runs along the axis named by `across` (z for the upper
/// bound, w for the lower one).
struct BandHessian {
  double along = 0.0;   // d2A / d(along)^2
  double across = 0.0;  // d2A / d(across)^2
};

/// Chain-rule second partials. For the upper bound (kink z = 0):
///   A_ww = g'' rho^2 r_w^2 / r + h r_ww,  A_zz = g'' (1 - rho r_z)^2 / r + h r_zz.
/// For the lower bound the roles of w and z swap.
BandHessian band_hessian(const RadiusJet& jet, double rho, Family family);

/// A_zz with a single cross term: g'' rho r_z (rho r_z - 1)/r + h r_zz + g''/r.
/// This expression circulates for the upper-bound average; it drops one
/// -rho r_z g''/r term and disagrees with finite differences when r_z != 0.
/// Kept only so tests can demonstrate the discrepancy.
double across_second_partial_single_cross_term(const RadiusJet& jet, double rho);

}  // namespace fhc
