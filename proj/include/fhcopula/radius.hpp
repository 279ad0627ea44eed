#pragma once

#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fhcopula/geometry.hpp"

namespace fhc {

/// Radius value and the partials the smoothing formulas consume. The mixed
/// partial r_wz never enters them and is not carried.
struct RadiusJet {
  double r = 0.0;
  double r_w = 0.0;
  double r_z = 0.0;
  double r_ww = 0.0;
  double r_zz = 0.0;
};

/// Dense polynomial, coefficients ordered from the constant term upwards.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);

  double value(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  const std::vector<double>& coefficients() const { return c_; }

 private:
  std::vector<double> c_;
};

struct ConstantRadius {
  double r0;
};

/// r(w,z) = p(w) q(z). `epsilon` is set when q was built as 1 + sqrt2*eps*z.
struct ProductRadius {
  Polynomial p;
  Polynomial q;
  std::optional<double> epsilon;
};

/// r(w) defined implicitly by Phi^-1((w+r)/sqrt2 + 1/2) - Phi^-1((w-r)/sqrt2 + 1/2) = d,
/// i.e. the Gaussian pair (Phi^-1(U), Phi^-1(V)) lives on |y - x| <= d.
struct GaussianBandRadius {
  double d;
};

enum class RadiusKind { constant, product, gaussian_band };

/// Immutable radius field r(w,z) > 0 on the open diamond.
class RadiusModel {
 public:
  static RadiusModel constant(double r0);
  /// Throws DomainError unless p > 0 and q > 0 on 1001-point sweeps of the
  /// open interval (-1/sqrt2, 1/sqrt2).
  static RadiusModel product(Polynomial p, Polynomial q);
  /// q(z) = 1 + sqrt2 * epsilon * z.
  static RadiusModel skewed_product(Polynomial p, double epsilon);
  static RadiusModel gaussian_band(double d);

  /// {"kind":"constant","r0":..} | {"kind":"product","p":[..],"epsilon":..}
  /// | {"kind":"product","p":[..],"q":[..]} | {"kind":"gaussian_band","d":..}
  static RadiusModel from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  RadiusKind kind() const;
  const std::variant<ConstantRadius, ProductRadius, GaussianBandRadius>& params() const {
    return params_;
  }

  /// True when r does not depend on z.
  bool z_independent() const;

 private:
  explicit RadiusModel(std::variant<ConstantRadius, ProductRadius, GaussianBandRadius> params)
      : params_(std::move(params)) {}

  std::variant<ConstantRadius, ProductRadius, GaussianBandRadius> params_;
};

/// Requires p strictly inside the diamond (margin > 0); throws DomainError
/// otherwise, EvaluationError if the Gaussian solve cannot bracket.
RadiusJet radius_jet(const RadiusModel& model, const DiamondPoint& p);

/// Jet on the closed diamond. Closed-form models evaluate their formula on the
/// boundary; the Gaussian band returns nullopt where r has shrunk to its limit
/// 0 (the corners w = +-1/sqrt2).
std::optional<RadiusJet> radius_jet_closure(const RadiusModel& model, const DiamondPoint& p);

/// Band of z carrying the mass of the smoothed upper bound at abscissa w.
struct SupportBand {
  double w = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double kappa = 1.0;          // upper / |lower|
  bool kappa_unbounded = false;  // set when lower == 0; kappa is then +inf
};

/// Supported for constant, Gaussian band and affine-skew product models.
/// Throws DomainError when 1 -+ sqrt2*eps*p(w) <= 0 (unbounded band).
SupportBand support_band(const RadiusModel& model, double w);

}  // namespace fhc
