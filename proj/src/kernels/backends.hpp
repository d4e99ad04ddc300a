#pragma once

#include "dea/kernels.hpp"

// Internal: per-backend dispatch tables. Each table is defined in its own
// translation unit so that vector ISAs are only emitted where the target
// architecture allows them.

namespace dea::kernels {

const Ops& scalar_ops();

#if defined(__x86_64__) || defined(__amd64__)
const Ops& avx2_ops();
bool avx2_available();
#endif

#if defined(__aarch64__)
const Ops& neon_ops();
#endif

} // namespace dea::kernels
