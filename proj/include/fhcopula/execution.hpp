#pragma once

namespace fhc {

/// Selects how grid and batch sweeps are executed. `serial` is the plain
/// reference loop; `openmp` distributes rows/items over OpenMP threads. Both
/// produce bit-identical results.
enum class Execution { serial, openmp };

}  // namespace fhc
