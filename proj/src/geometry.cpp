#include "fhcopula/geometry.hpp"

#include <cmath>
#include <sstream>

#include "fhcopula/errors.hpp"

namespace fhc {

namespace {

double clamp_probability(double x, const char* name) {
  if (!(x >= -kDomainTolerance && x <= 1.0 + kDomainTolerance)) {
    std::ostringstream msg;
    msg << name << " = " << x << " is outside [0,1]";
    throw DomainError(msg.str());
  }
  return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
}

}  // namespace

SquarePoint::SquarePoint(double u, double v)
    : u_(clamp_probability(u, "u")), v_(clamp_probability(v, "v")) {}

DiamondPoint square_to_diamond(const SquarePoint& p) {
  return {(p.v() + p.u() - 1.0) * kInvSqrt2, (p.v() - p.u()) * kInvSqrt2};
}

SquarePoint diamond_to_square(const DiamondPoint& p) {
  if (diamond_margin(p) < -kDomainTolerance) {
    std::ostringstream msg;
    msg << "diamond point (" << p.w << ", " << p.z << ") lies outside |w|+|z| <= 1/sqrt2";
    throw DomainError(msg.str());
  }
  return SquarePoint((p.w - p.z) * kInvSqrt2 + 0.5, (p.w + p.z) * kInvSqrt2 + 0.5);
}

double diamond_margin(const DiamondPoint& p) {
  return kDiamondRadius - std::abs(p.w) - std::abs(p.z);
}

DomainLocation classify(const DiamondPoint& p, double tol) {
  const double margin = diamond_margin(p);
  if (margin > tol) return {DomainTag::interior, margin};
  if (margin >= -tol) return {DomainTag::boundary, margin};
  return {DomainTag::outside, margin};
}

const char* to_string(DomainTag tag) {
  switch (tag) {
    case DomainTag::interior:
      return "interior";
    case DomainTag::boundary:
      return "boundary";
    case DomainTag::outside:
      return "outside";
  }
  return "unknown";
}

}  // namespace fhc
