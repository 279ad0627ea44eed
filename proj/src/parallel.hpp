#pragma once

#include <cstddef>

#include "fhcopula/execution.hpp"

namespace fhc::detail {

/// Runs body(i) for i in [0, n). Bodies must write only to slot i of their
/// outputs so that both paths give identical results; reductions happen after.
template <class Body>
void for_each_index(std::ptrdiff_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

}  // namespace fhc::detail
