#include "gerbeforge/execution.hpp"

#include <omp.h>

namespace gf {

int hardware_threads() { return omp_get_max_threads(); }

}  // namespace gf
