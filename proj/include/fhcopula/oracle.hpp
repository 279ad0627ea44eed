#pragma once

#include <functional>

#include "fhcopula/geometry.hpp"

namespace fhc::oracle {

// Brute-force ground truth for the closed forms: disc averages by quadrature,
// second partials by finite differences. Nothing here calls the kernel or the
// copula closed forms.

/// Integrands, each extended to all of R^2 by its global formula.
enum class Integrand {
  abs_w,     // |w'|
  abs_z,     // |z'|
  fh_lower,  // (w' + |w'|)/sqrt2
  fh_upper,  // (w' - |z'|)/sqrt2 + 1/2
};

struct OracleRequest {
  Integrand integrand = Integrand::abs_z;
  DiamondPoint center;
  double radius = 0.0;
  double rel_tol = 1e-10;
};

/// Mean of the integrand over the disc of the given radius. The disc is cut
/// at the integrand's kink line and each piece integrated with tensor
/// Gauss–Legendre panels, doubling the panel count until two levels agree to
/// rel_tol/2. Throws std::invalid_argument on a bad request and
/// EvaluationError if the refinement cap is hit.
double disc_average(const OracleRequest& req);

using ScalarField = std::function<double(const DiamondPoint&)>;

struct SecondDifferences {
  double f_ww = 0.0;
  double f_zz = 0.0;
};

/// Central second differences (f(p+h e) - 2 f(p) + f(p-h e))/h^2 per axis;
/// step must lie in [1e-7, 1e-2].
SecondDifferences fd_second_partials(const ScalarField& f, const DiamondPoint& p,
                                     double step = 1e-4);

}  // namespace fhc::oracle
