#include "fhcopula/validator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"

namespace fhc {

const char* to_string(Orientation o) {
  return o == Orientation::upper_M ? "upper_M" : "lower_W";
}

double quadratic_min_on_unit_interval(double a, double b, double c) {
  double m = std::min(a - b + c, a + b + c);
  if (a > 0.0 && std::abs(b) <= 2.0 * a) m = std::min(m, c - b * b / (4.0 * a));
  return m;
}

QuadraticCertificate certify_pointwise(const RadiusJet& jet, Orientation o) {
  const bool upper = o == Orientation::upper_M;
  const double r_along = upper ? jet.r_w : jet.r_z;
  const double r_across = upper ? jet.r_z : jet.r_w;
  const double r_along2 = upper ? jet.r_ww : jet.r_zz;
  const double r_across2 = upper ? jet.r_zz : jet.r_ww;

  const double dd = jet.r * (r_across2 - r_along2) / 3.0;
  QuadraticCertificate cert;
  cert.a = r_across * r_across - r_along * r_along - dd;
  cert.b = -2.0 * r_across;
  cert.c = 1.0 + dd;
  cert.min_value_on_unit_interval = quadratic_min_on_unit_interval(cert.a, cert.b, cert.c);
  cert.pass = cert.min_value_on_unit_interval >= -kQuadraticTolerance;

  const double slack = 0.5 - std::abs(r_across);
  cert.paper_condition_pass = r_along * r_along <= slack * slack + 0.75 && r_along2 <= r_across2;
  if (cert.a > 0.0) {
    cert.exact_vertex_condition = cert.c >= r_across * r_across / (4.0 * cert.a);
  }
  return cert;
}

ContainmentResult containment_check(const RadiusModel& model, Orientation o, int n,
                                    Execution exec) {
  if (n < 16) throw std::invalid_argument("containment_check: n must be >= 16");
  const double R = kDiamondRadius;
  const std::array<DiamondPoint, 5> vertices{{{R, 0.0}, {0.0, R}, {-R, 0.0}, {0.0, -R}, {R, 0.0}}};
  const double shrink = (R - kContainmentInset) / R;
  const bool upper = o == Orientation::upper_M;

  const std::ptrdiff_t total = 4 * static_cast<std::ptrdiff_t>(n);
  std::vector<DiamondPoint> points(total);
  std::vector<double> margins(total);
  detail::for_each_index(total, exec, [&](std::ptrdiff_t idx) {
    const auto edge = static_cast<std::size_t>(idx / n);
    const double t = static_cast<double>(idx % n) / (n - 1);
    const DiamondPoint& a = vertices[edge];
    const DiamondPoint& b = vertices[edge + 1];
    const DiamondPoint p{shrink * (a.w + t * (b.w - a.w)), shrink * (a.z + t * (b.z - a.z))};
    const double r = radius_jet(model, p).r;
    points[idx] = p;
    margins[idx] = (upper ? std::abs(p.z) : std::abs(p.w)) - r;
  });

  ContainmentResult result;
  const auto worst = std::min_element(margins.begin(), margins.end());
  result.worst_margin = *worst;
  result.worst_point = points[worst - margins.begin()];
  result.pass = result.worst_margin >= -kContainmentInset;
  return result;
}

namespace {

struct RowSummary {
  bool positive = true;
  bool sufficient = true;
  double worst = std::numeric_limits<double>::infinity();
  DiamondPoint worst_point;
};

}  // namespace

ValidationReport validate_model(const RadiusModel& model, Orientation o, int grid_n,
                                Execution exec) {
  if (grid_n < 8) throw std::invalid_argument("validate_model: grid_n must be >= 8");
  const double R = kDiamondRadius;
  const double step = 2.0 * R / grid_n;
  std::vector<RowSummary> rows(grid_n);

  detail::for_each_index(grid_n, exec, [&](std::ptrdiff_t i) {
    RowSummary& row = rows[i];
    const double w = -R + (static_cast<double>(i) + 0.5) * step;
    for (int j = 0; j < grid_n; ++j) {
      const DiamondPoint p{w, -R + (j + 0.5) * step};
      if (!(diamond_margin(p) > 1e-6)) continue;
      const RadiusJet jet = radius_jet(model, p);
      if (!(jet.r > 0.0) || !std::isfinite(jet.r)) {
        row.positive = false;
        continue;
      }
      const QuadraticCertificate cert = certify_pointwise(jet, o);
      row.sufficient = row.sufficient && cert.paper_condition_pass;
      if (cert.min_value_on_unit_interval < row.worst) {
        row.worst = cert.min_value_on_unit_interval;
        row.worst_point = p;
      }
    }
  });

  ValidationReport report;
  report.grid_n = grid_n;
  report.positivity_pass = true;
  report.paper_sufficient_pass = true;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (const RowSummary& row : rows) {
    report.positivity_pass = report.positivity_pass && row.positive;
    report.paper_sufficient_pass = report.paper_sufficient_pass && row.sufficient;
    if (row.worst < report.worst_margin) {
      report.worst_margin = row.worst;
      report.worst_point = row.worst_point;
    }
  }
  report.quadratic_pass = report.worst_margin >= -kQuadraticTolerance;

  const ContainmentResult contain = containment_check(model, o, 4 * grid_n, exec);
  report.containment_pass = contain.pass;
  report.containment_worst_margin = contain.worst_margin;
  report.containment_worst_point = contain.worst_point;
  return report;
}

nlohmann::json to_json(const ValidationReport& report) {
  return nlohmann::json{
      {"positivity_pass", report.positivity_pass},
      {"quadratic_pass", report.quadratic_pass},
      {"paper_sufficient_pass", report.paper_sufficient_pass},
      {"containment_pass", report.containment_pass},
      {"worst_point", {{"w", report.worst_point.w}, {"z", report.worst_point.z}}},
      {"worst_margin", report.worst_margin},
      {"containment_worst_point",
       {{"w", report.containment_worst_point.w}, {"z", report.containment_worst_point.z}}},
      {"containment_worst_margin", report.containment_worst_margin},
      {"grid_n", report.grid_n},
      {"verdict", report.verdict()},
  };
}

}  // namespace fhc
