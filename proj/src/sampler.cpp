#include "fhcopula/sampler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fhcopula/errors.hpp"
#include "fhcopula/kernel.hpp"
#include "fhcopula/philox.hpp"
#include "parallel.hpp"

namespace fhc {

Orientation orientation_for(Family family) {
  switch (family) {
    case Family::smoothed_upper:
      return Orientation::upper_M;
    case Family::smoothed_lower:
      return Orientation::lower_W;
    default:
      throw std::invalid_argument("orientation_for: not a smoothed family");
  }
}

double conditional_inverse(const CopulaSpec& spec, double u, double t) {
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (smoothed_partials(spec, SquarePoint(u, mid)).first < t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SampleBatch sample_batch_unchecked(const CopulaSpec& spec, std::size_t n, std::uint64_t seed,
                                   Execution exec) {
  if (!spec.smoothed()) throw std::invalid_argument("sample_batch: spec must be a smoothed family");
  if (n < 1) throw std::invalid_argument("sample_batch: n must be >= 1");
  const Philox4x32 gen(seed);
  std::vector<SquarePoint> pairs(n, SquarePoint(0.0, 0.0));
  detail::for_each_index(static_cast<std::ptrdiff_t>(n), exec, [&](std::ptrdiff_t i) {
    const Philox4x32::Block bits = gen.at(static_cast<std::uint64_t>(i));
    const double u = open_unit_double(bits[0], bits[1]);
    const double t = open_unit_double(bits[2], bits[3]);
    pairs[i] = SquarePoint(u, conditional_inverse(spec, u, t));
  });
  return SampleBatch{std::move(pairs), seed, spec};
}

SampleBatch sample_batch(const CopulaSpec& spec, std::size_t n, std::uint64_t seed,
                         Execution exec) {
  if (!spec.smoothed()) throw std::invalid_argument("sample_batch: spec must be a smoothed family");
  const ValidationReport report =
      validate_model(spec.model(), orientation_for(spec.family()), 64, exec);
  if (!report.verdict()) {
    std::ostringstream msg;
    msg << "sample_batch: radius model fails validation (positivity " << report.positivity_pass
        << ", quadratic " << report.quadratic_pass << ", containment " << report.containment_pass
        << ")";
    throw ValidationError(msg.str());
  }
  return sample_batch_unchecked(spec, n, seed, exec);
}

std::vector<GaussianPair> to_gaussian(const SampleBatch& batch) {
  constexpr double lo = 1e-15;
  constexpr double hi = 1.0 - 1e-15;
  std::vector<GaussianPair> out;
  out.reserve(batch.pairs.size());
  for (const SquarePoint& p : batch.pairs) {
    out.push_back({std_normal_quantile(std::clamp(p.u(), lo, hi)),
                   std_normal_quantile(std::clamp(p.v(), lo, hi))});
  }
  return out;
}

}  // namespace fhc
