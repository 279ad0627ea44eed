#include "fhcopula/oracle.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "fhcopula/errors.hpp"

namespace fhc::oracle {

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

constexpr int kMaxLevel = 10;  // up to 1024 panels per piece

// Integrand in (normal, tangent) coordinates: `normal` crosses the kink.
struct Frame {
  bool kink_on_z;
  double center_n;
  double center_t;
};

double integrand_value(Integrand f, double w, double z) {
  switch (f) {
    case Integrand::abs_w:
      return std::abs(w);
    case Integrand::abs_z:
      return std::abs(z);
    case Integrand::fh_lower:
      return (w + std::abs(w)) / std::numbers::sqrt2;
    case Integrand::fh_upper:
      return (w - std::abs(z)) / std::numbers::sqrt2 + 0.5;
  }
  return 0.0;
}

template <class F>
double gauss_legendre(F&& f, double a, double b, int panels) {
  const double width = (b - a) / panels;
  double total = 0.0;
  const auto& x = Rule::abscissa();
  const auto& wt = Rule::weights();
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * width;
    const double half = 0.5 * width;
    // boost stores the non-negative half of a symmetric rule; x[0] == 0 for odd sizes.
    double panel = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        panel += wt[i] * f(mid);
      } else {
        panel += wt[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
      }
    }
    total += panel * half;
  }
  return total;
}

struct Level {
  double signed_integral;
  double abs_integral;
};

// (1/pi) * int_{theta} int_{x in [-1,1]} f cos^2(theta) dx dtheta, with the
// normal coordinate n = c_n + r sin(theta) and tangent t = c_t + r cos(theta) x.
Level integrate(Integrand f, const Frame& frame, double r, int panels) {
  auto at = [&](double theta, double x) {
    const double n = frame.center_n + r * std::sin(theta);
    const double t = frame.center_t + r * std::cos(theta) * x;
    return frame.kink_on_z ? integrand_value(f, t, n) : integrand_value(f, n, t);
  };
  const double half_pi = 0.5 * std::numbers::pi;
  double cuts[3] = {-half_pi, half_pi, half_pi};
  int pieces = 1;
  if (std::abs(frame.center_n) < r) {
    cuts[1] = std::asin(-frame.center_n / r);
    pieces = 2;
  }
  Level level{0.0, 0.0};
  for (int piece = 0; piece < pieces; ++piece) {
    auto outer = [&](double theta, bool absolute) {
      const double c = std::cos(theta);
      const double inner = gauss_legendre(
          [&](double x) {
            const double v = at(theta, x);
            return absolute ? std::abs(v) : v;
          },
          -1.0, 1.0, panels);
      return inner * c * c;
    };
    level.signed_integral += gauss_legendre([&](double th) { return outer(th, false); },
                                            cuts[piece], cuts[piece + 1], panels);
    level.abs_integral += gauss_legendre([&](double th) { return outer(th, true); },
                                         cuts[piece], cuts[piece + 1], panels);
  }
  level.signed_integral /= std::numbers::pi;
  level.abs_integral /= std::numbers::pi;
  return level;
}

}  // namespace

double disc_average(const OracleRequest& req) {
  if (!(req.radius > 0.0) || !std::isfinite(req.radius)) {
    throw std::invalid_argument("disc_average: radius must be > 0");
  }
  if (!(req.rel_tol >= 1e-12)) throw std::invalid_argument("disc_average: rel_tol must be >= 1e-12");
  const bool kink_on_z = req.integrand == Integrand::abs_z || req.integrand == Integrand::fh_upper;
  const Frame frame{kink_on_z, kink_on_z ? req.center.z : req.center.w,
                    kink_on_z ? req.center.w : req.center.z};

  Level prev = integrate(req.integrand, frame, req.radius, 1);
  for (int level = 1; level <= kMaxLevel; ++level) {
    const Level cur = integrate(req.integrand, frame, req.radius, 1 << level);
    const double scale = std::max(cur.abs_integral, std::numeric_limits<double>::min());
    if (std::abs(cur.signed_integral - prev.signed_integral) <= 0.5 * req.rel_tol * scale) {
      return cur.signed_integral;
    }
    prev = cur;
  }
  std::ostringstream msg;
  msg << "disc_average: no convergence at center (" << req.center.w << ", " << req.center.z
      << "), radius " << req.radius;
  throw EvaluationError(msg.str());
}

SecondDifferences fd_second_partials(const ScalarField& f, const DiamondPoint& p, double step) {
  if (!(step >= 1e-7 && step <= 1e-2)) {
    throw std::invalid_argument("fd_second_partials: step must lie in [1e-7, 1e-2]");
  }
  const double f0 = f(p);
  const double h2 = step * step;
  return {(f({p.w + step, p.z}) - 2.0 * f0 + f({p.w - step, p.z})) / h2,
          (f({p.w, p.z + step}) - 2.0 * f0 + f({p.w, p.z - step})) / h2};
}

}  // namespace fhc::oracle
