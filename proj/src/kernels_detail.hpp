#pragma once
// Internal glue between the kernel dispatcher and the ISA-specific TUs.

#include "rotlab/kernels.hpp"

namespace rotlab::kernels::detail {

// Returns the AVX2 dispatch table, or nullptr when the TU was built without
// AVX2 support.  Callers must still check CPU support at runtime.
const Dispatch* avx2_dispatch();

}  // namespace rotlab::kernels::detail
