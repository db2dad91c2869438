#include "sparsecert/execution.hpp"

namespace sparsecert {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace sparsecert
