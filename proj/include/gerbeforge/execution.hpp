#pragma once

#include <cstddef>

namespace gf {

// Selects the serial reference loop or the OpenMP kernel for facewise and
// exhaustive sweeps. Both must produce identical results.
enum class Execution { serial, parallel };

int hardware_threads();

}  // namespace gf
