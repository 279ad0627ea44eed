#pragma once

namespace fhc {

/// The disc-averaging kernel and its companions at band coordinate rho.
///
/// g(rho) is the mean of |rho + zeta| over the unit disc (zeta the coordinate
/// across the kink); it equals |rho| once the disc no longer meets the kink.
/// g is C^2 and convex, with g''' unbounded as |rho| -> 1.
struct KernelJet {
  double rho = 0.0;
  double g = 0.0;
  double g1 = 0.0;  // g'
  double g2 = 0.0;  // g''
  double h = 0.0;   // g - rho g' = (1 - rho^2) g'' / 3
};

KernelJet kernel_jet(double rho);

/// Standard normal density.
double std_normal_pdf(double x);

/// Standard normal CDF; absolute error well below 1e-15.
double std_normal_cdf(double x);

/// Inverse of std_normal_cdf. Throws DomainError unless 0 < p < 1.
double std_normal_quantile(double p);

}  // namespace fhc
