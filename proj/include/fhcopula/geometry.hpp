#pragma once

#include <numbers>

namespace fhc {

inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

/// Half-diagonal of the diamond; |w| + |z| <= kDiamondRadius is the image of
/// the unit square.
inline constexpr double kDiamondRadius = kInvSqrt2;

inline constexpr double kDomainTolerance = 1e-12;

/// A point of the unit square. Values within 1e-12 outside [0,1] are clamped;
/// anything further out throws DomainError.
class SquarePoint {
 public:
  SquarePoint(double u, double v);

  double u() const { return u_; }
  double v() const { return v_; }

 private:
  double u_;
  double v_;
};

/// A point in the rotated frame w = (v+u-1)/sqrt2, z = (v-u)/sqrt2.
struct DiamondPoint {
  double w = 0.0;
  double z = 0.0;
};

enum class DomainTag { interior, boundary, outside };

struct DomainLocation {
  DomainTag tag;
  double margin;  // 1/sqrt2 - |w| - |z|
};

DiamondPoint square_to_diamond(const SquarePoint& p);

/// Throws DomainError when p lies outside the diamond by more than 1e-12.
SquarePoint diamond_to_square(const DiamondPoint& p);

double diamond_margin(const DiamondPoint& p);

DomainLocation classify(const DiamondPoint& p, double tol = kDomainTolerance);

const char* to_string(DomainTag tag);

}  // namespace fhc
