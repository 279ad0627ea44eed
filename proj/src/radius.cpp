#include "fhcopula/radius.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>

#include "fhcopula/errors.hpp"
#include "fhcopula/kernel.hpp"

namespace fhc {

Polynomial::Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {
  for (double x : c_) {
    if (!std::isfinite(x)) throw DomainError("polynomial coefficient is not finite");
  }
}

double Polynomial::value(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::derivative(double x) const {
  double acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c_[k];
  return acc;
}

double Polynomial::second_derivative(double x) const {
  double acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 2;) {
    acc = acc * x + static_cast<double>(k * (k - 1)) * c_[k];
  }
  return acc;
}

namespace {

constexpr int kPositivitySweep = 1001;

void require_positive_on_axis(const Polynomial& poly, const char* name) {
  for (int i = 0; i < kPositivitySweep; ++i) {
    const double x = kDiamondRadius * (-1.0 + 2.0 * (i + 1) / (kPositivitySweep + 1.0));
    const double y = poly.value(x);
    if (!(y > 0.0)) {
      std::ostringstream msg;
      msg << "product radius: " << name << "(" << x << ") = " << y << " is not positive";
      throw DomainError(msg.str());
    }
  }
}

// ---- Gaussian band ---------------------------------------------------------
//
// Everything is computed at |w| >= 0 through the tail probabilities
// 1 - v_band = (e - r)/sqrt2 and 1 - u_band = (e + r)/sqrt2 with
// e = 1/sqrt2 - |w|; r is even in w, so r_w flips sign for w < 0.

struct GaussianState {
  double r;
  double x;  // Phi^-1(u_band)
  double y;  // Phi^-1(v_band)
};

GaussianState solve_gaussian_band(double d, double w) {
  const double e = kDiamondRadius - std::abs(w);
  if (!(e > 0.0)) {
    std::ostringstream msg;
    msg << "gaussian_band radius: no bracket at w = " << w << " (|w| >= 1/sqrt2)";
    throw EvaluationError(msg.str());
  }
  // residual(r) = Phi^-1((e+r)/sqrt2) - Phi^-1((e-r)/sqrt2) - d, increasing on (0, e).
  auto quantiles = [e](double r) {
    return std::pair{std_normal_quantile((e + r) * kInvSqrt2),
                     std_normal_quantile((e - r) * kInvSqrt2)};
  };
  double lo = 0.0;
  double hi = e;
  double r = 0.5 * e;
  auto [qp, qm] = quantiles(r);
  bool polished = false;
  for (int it = 0; it < 200; ++it) {
    const double f = qp - qm - d;
    if (f == 0.0) break;
    (f > 0.0 ? hi : lo) = r;
    const double slope = kInvSqrt2 * (1.0 / std_normal_pdf(qp) + 1.0 / std_normal_pdf(qm));
    double next = r - f / slope;
    if (next == r) break;  // the Newton correction is below one ulp
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
    r = next;
    std::tie(qp, qm) = quantiles(r);
    // One polishing step past the 1e-12 residual; Newton is quadratic here.
    if (std::abs(f) <= 1e-12) {
      if (polished) break;
      polished = true;
    }
  }
  return {r, -qp, -qm};
}

RadiusJet gaussian_jet(double d, double w) {
  const GaussianState s = solve_gaussian_band(d, w);
  const double t = std::tanh(-d * (s.x + s.y) / 4.0);
  const double xp = (1.0 - t) / (std::numbers::sqrt2 * std_normal_pdf(s.x));
  const double yp = (1.0 + t) / (std::numbers::sqrt2 * std_normal_pdf(s.y));
  RadiusJet jet;
  jet.r = s.r;
  jet.r_w = w < 0.0 ? -t : t;
  jet.r_ww = -d * (1.0 - t * t) * (xp + yp) / 4.0;
  return jet;
}

RadiusJet product_jet(const ProductRadius& m, const DiamondPoint& p) {
  const double pv = m.p.value(p.w);
  const double qv = m.q.value(p.z);
  RadiusJet jet;
  jet.r = pv * qv;
  jet.r_w = m.p.derivative(p.w) * qv;
  jet.r_z = pv * m.q.derivative(p.z);
  jet.r_ww = m.p.second_derivative(p.w) * qv;
  jet.r_zz = pv * m.q.second_derivative(p.z);
  return jet;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double required_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw DomainError(std::string("radius json: missing numeric field \"") + key + "\"");
  }
  return j.at(key).get<double>();
}

Polynomial required_polynomial(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).empty()) {
    throw DomainError(std::string("radius json: field \"") + key +
                      "\" must be a non-empty coefficient array");
  }
  std::vector<double> c;
  for (const auto& x : j.at(key)) {
    if (!x.is_number()) throw DomainError("radius json: non-numeric coefficient");
    c.push_back(x.get<double>());
  }
  return Polynomial(std::move(c));
}

}  // namespace

RadiusModel RadiusModel::constant(double r0) {
  if (!(r0 > 0.0) || !std::isfinite(r0)) throw DomainError("constant radius: r0 must be > 0");
  return RadiusModel(ConstantRadius{r0});
}

RadiusModel RadiusModel::product(Polynomial p, Polynomial q) {
  require_positive_on_axis(p, "p");
  require_positive_on_axis(q, "q");
  return RadiusModel(ProductRadius{std::move(p), std::move(q), std::nullopt});
}

RadiusModel RadiusModel::skewed_product(Polynomial p, double epsilon) {
  if (!std::isfinite(epsilon)) throw DomainError("product radius: epsilon must be finite");
  Polynomial q({1.0, std::numbers::sqrt2 * epsilon});
  require_positive_on_axis(p, "p");
  require_positive_on_axis(q, "q");
  return RadiusModel(ProductRadius{std::move(p), std::move(q), epsilon});
}

RadiusModel RadiusModel::gaussian_band(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("gaussian_band radius: d must be > 0");
  return RadiusModel(GaussianBandRadius{d});
}

RadiusModel RadiusModel::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw DomainError("radius json: expected an object with a string \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return constant(required_number(j, "r0"));
  if (kind == "gaussian_band") return gaussian_band(required_number(j, "d"));
  if (kind == "product") {
    Polynomial p = required_polynomial(j, "p");
    const bool has_eps = j.contains("epsilon");
    const bool has_q = j.contains("q");
    if (has_eps && has_q) throw DomainError("radius json: give either \"epsilon\" or \"q\", not both");
    if (has_q) return product(std::move(p), required_polynomial(j, "q"));
    return skewed_product(std::move(p), has_eps ? required_number(j, "epsilon") : 0.0);
  }
  throw DomainError("radius json: unknown kind \"" + kind + "\"");
}

nlohmann::json RadiusModel::to_json() const {
  return std::visit(
      overloaded{
          [](const ConstantRadius& m) { return nlohmann::json{{"kind", "constant"}, {"r0", m.r0}}; },
          [](const GaussianBandRadius& m) {
            return nlohmann::json{{"kind", "gaussian_band"}, {"d", m.d}};
          },
          [](const ProductRadius& m) {
            nlohmann::json j{{"kind", "product"}, {"p", m.p.coefficients()}};
            if (m.epsilon) {
              j["epsilon"] = *m.epsilon;
            } else {
              j["q"] = m.q.coefficients();
            }
            return j;
          }},
      params_);
}

RadiusKind RadiusModel::kind() const {
  return static_cast<RadiusKind>(params_.index());
}

bool RadiusModel::z_independent() const {
  if (const auto* m = std::get_if<ProductRadius>(&params_)) {
    const auto& q = m->q.coefficients();
    for (std::size_t k = 1; k < q.size(); ++k) {
      if (q[k] != 0.0) return false;
    }
  }
  return true;
}

RadiusJet radius_jet(const RadiusModel& model, const DiamondPoint& p) {
  if (!(diamond_margin(p) > 0.0)) {
    std::ostringstream msg;
    msg << "radius_jet: point (" << p.w << ", " << p.z << ") is not strictly interior";
    throw DomainError(msg.str());
  }
  return std::visit(overloaded{[](const ConstantRadius& m) { return RadiusJet{m.r0}; },
                               [&](const ProductRadius& m) { return product_jet(m, p); },
                               [&](const GaussianBandRadius& m) { return gaussian_jet(m.d, p.w); }},
                    model.params());
}

std::optional<RadiusJet> radius_jet_closure(const RadiusModel& model, const DiamondPoint& p) {
  if (diamond_margin(p) < -kDomainTolerance) {
    std::ostringstream msg;
    msg << "radius_jet_closure: point (" << p.w << ", " << p.z << ") is outside the diamond";
    throw DomainError(msg.str());
  }
  return std::visit(
      overloaded{[](const ConstantRadius& m) -> std::optional<RadiusJet> { return RadiusJet{m.r0}; },
                 [&](const ProductRadius& m) -> std::optional<RadiusJet> { return product_jet(m, p); },
                 [&](const GaussianBandRadius& m) -> std::optional<RadiusJet> {
                   if (!(kDiamondRadius - std::abs(p.w) > 0.0)) return std::nullopt;
                   return gaussian_jet(m.d, p.w);
                 }},
      model.params());
}

SupportBand support_band(const RadiusModel& model, double w) {
  if (!(std::abs(w) < kDiamondRadius)) {
    throw DomainError("support_band: w must satisfy |w| < 1/sqrt2");
  }
  SupportBand band;
  band.w = w;
  std::visit(overloaded{[&](const ConstantRadius& m) {
                          band.lower = -m.r0;
                          band.upper = m.r0;
                        },
                        [&](const GaussianBandRadius& m) {
                          const double r = solve_gaussian_band(m.d, w).r;
                          band.lower = -r;
                          band.upper = r;
                        },
                        [&](const ProductRadius& m) {
                          if (!m.epsilon) {
                            throw DomainError("support_band: product radius needs an affine-skew q");
                          }
                          const double pw = m.p.value(w);
                          const double skew = std::numbers::sqrt2 * *m.epsilon * pw;
                          if (!(1.0 - skew > 0.0) || !(1.0 + skew > 0.0)) {
                            std::ostringstream msg;
                            msg << "support_band: unbounded band at w = " << w
                                << " (sqrt2*epsilon*p(w) = " << skew << ")";
                            throw DomainError(msg.str());
                          }
                          band.lower = -pw / (1.0 + skew);
                          band.upper = pw / (1.0 - skew);
                        }},
             model.params());
  if (band.lower < 0.0) {
    band.kappa = band.upper / -band.lower;
  } else {
    band.kappa = std::numeric_limits<double>::infinity();
    band.kappa_unbounded = true;
  }
  return band;
}

}  // namespace fhc
