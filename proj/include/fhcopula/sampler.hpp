#pragma once

#include <cstdint>
#include <vector>

#include "fhcopula/copulas.hpp"
#include "fhcopula/execution.hpp"
#include "fhcopula/validator.hpp"

namespace fhc {

struct SampleBatch {
  std::vector<SquarePoint> pairs;
  std::uint64_t seed = 0;
  CopulaSpec spec;
};

struct GaussianPair {
  double x = 0.0;
  double y = 0.0;
};

/// Orientation matching a smoothed family (upper_M for smoothed_upper).
Orientation orientation_for(Family family);

/// Solves dC/du(u, v) = t for v by bisection on [0, 1] (at most 80 halvings,
/// stopping once the bracket cannot shrink further).
double conditional_inverse(const CopulaSpec& spec, double u, double t);

/// Pair i uses Philox block i under key `seed`: u from words 0-1, the
/// conditional level t from words 2-3, v = conditional_inverse(u, t).
/// Throws ValidationError unless the model passes validate_model (grid 64).
SampleBatch sample_batch(const CopulaSpec& spec, std::size_t n, std::uint64_t seed,
                         Execution exec = Execution::openmp);

/// Same draws without the up-front validation; for callers that already hold
/// a passing ValidationReport.
SampleBatch sample_batch_unchecked(const CopulaSpec& spec, std::size_t n, std::uint64_t seed,
                                   Execution exec = Execution::openmp);

/// (Phi^-1(u), Phi^-1(v)) after clamping to [1e-15, 1 - 1e-15].
std::vector<GaussianPair> to_gaussian(const SampleBatch& batch);

}  // namespace fhc
