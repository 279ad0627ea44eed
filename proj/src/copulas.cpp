#include "fhcopula/copulas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fhc {

const char* to_string(Family f) {
  switch (f) {
    case Family::fh_lower:
      return "fh_lower";
    case Family::fh_upper:
      return "fh_upper";
    case Family::smoothed_lower:
      return "smoothed_lower";
    case Family::smoothed_upper:
      return "smoothed_upper";
  }
  return "unknown";
}

double fh_value(Family family, const SquarePoint& p) {
  switch (family) {
    case Family::fh_lower:
      return std::max(p.u() + p.v() - 1.0, 0.0);
    case Family::fh_upper:
      return std::min(p.u(), p.v());
    default:
      throw std::invalid_argument("fh_value: family is not a Fréchet–Hoeffding bound");
  }
}

namespace {

// Limit r -> 0: the smoothed copula coincides with its bound.
SmoothedEvaluation collapsed(Family family, const SquarePoint& p, const DiamondPoint& d) {
  SmoothedEvaluation e;
  const double inf = std::numeric_limits<double>::infinity();
  if (family == Family::smoothed_upper) {
    e.value = std::min(p.u(), p.v());
    e.band_average = std::abs(d.z);
    e.du = p.u() < p.v() ? 1.0 : (p.u() > p.v() ? 0.0 : 0.5);
    e.dv = 1.0 - e.du;
    e.rho = std::copysign(inf, d.z);
  } else {
    e.value = std::max(p.u() + p.v() - 1.0, 0.0);
    e.band_average = std::abs(d.w);
    e.du = d.w > 0.0 ? 1.0 : (d.w < 0.0 ? 0.0 : 0.5);
    e.dv = e.du;
    e.rho = std::copysign(inf, d.w);
  }
  return e;
}

}  // namespace

BandHessian band_hessian(const RadiusJet& jet, double rho, Family family) {
  const KernelJet k = kernel_jet(rho);
  const bool upper = family == Family::smoothed_upper || family == Family::fh_upper;
  const double r_along = upper ? jet.r_w : jet.r_z;
  const double r_across = upper ? jet.r_z : jet.r_w;
  const double r_along2 = upper ? jet.r_ww : jet.r_zz;
  const double r_across2 = upper ? jet.r_zz : jet.r_ww;
  const double t = rho * r_along;
  const double s = 1.0 - rho * r_across;
  return {k.g2 * t * t / jet.r + k.h * r_along2, k.g2 * s * s / jet.r + k.h * r_across2};
}

double across_second_partial_single_cross_term(const RadiusJet& jet, double rho) {
  const KernelJet k = kernel_jet(rho);
  const double t = rho * jet.r_z;
  return k.g2 * t * (t - 1.0) / jet.r + k.h * jet.r_zz + k.g2 / jet.r;
}

SmoothedEvaluation evaluate_smoothed(const CopulaSpec& spec, const SquarePoint& p) {
  if (!spec.smoothed()) throw std::invalid_argument("evaluate_smoothed: spec is not a smoothed family");
  const Family family = spec.family();
  const DiamondPoint d = square_to_diamond(p);
  const std::optional<RadiusJet> maybe_jet =
      diamond_margin(d) > 0.0 ? std::optional(radius_jet(spec.model(), d))
                              : radius_jet_closure(spec.model(), d);
  if (!maybe_jet || !(maybe_jet->r > 0.0)) return collapsed(family, p, d);
  const RadiusJet& jet = *maybe_jet;

  const bool upper = family == Family::smoothed_upper;
  const double across = upper ? d.z : d.w;
  const double rho = across / jet.r;
  const KernelJet k = kernel_jet(rho);

  SmoothedEvaluation e;
  e.rho = rho;
  e.band_average = jet.r * k.g;
  // First partials of the band average in (w,z).
  double a_w;
  double a_z;
  if (upper) {
    a_w = k.h * jet.r_w;
    a_z = k.h * jet.r_z + k.g1;
  } else {
    a_w = k.h * jet.r_w + k.g1;
    a_z = k.h * jet.r_z;
  }
  double c_w;
  double c_z;
  if (upper) {
    e.value = 0.5 + (d.w - e.band_average) * kInvSqrt2;
    c_w = (1.0 - a_w) * kInvSqrt2;
    c_z = -a_z * kInvSqrt2;
  } else {
    e.value = (d.w + e.band_average) * kInvSqrt2;
    c_w = (1.0 + a_w) * kInvSqrt2;
    c_z = a_z * kInvSqrt2;
  }
  e.du = (c_w - c_z) * kInvSqrt2;
  e.dv = (c_w + c_z) * kInvSqrt2;

  if (std::abs(rho) < 1.0) {
    // c = (C_ww - C_zz)/2, and C = const +- A/sqrt2 puts the across-kink
    // curvature of A on the positive side for both bounds.
    const BandHessian hess = band_hessian(jet, rho, family);
    e.density = (hess.across - hess.along) * kInvSqrt2 * 0.5;
  }
  return e;
}

double smoothed_value(const CopulaSpec& spec, const SquarePoint& p) {
  return evaluate_smoothed(spec, p).value;
}

std::pair<double, double> smoothed_partials(const CopulaSpec& spec, const SquarePoint& p) {
  const SmoothedEvaluation e = evaluate_smoothed(spec, p);
  return {e.du, e.dv};
}

double smoothed_density(const CopulaSpec& spec, const SquarePoint& p) {
  return evaluate_smoothed(spec, p).density;
}

double copula_value(const CopulaSpec& spec, const SquarePoint& p) {
  return spec.smoothed() ? smoothed_value(spec, p) : fh_value(spec.family(), p);
}

}  // namespace fhc
