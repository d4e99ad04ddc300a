#if defined(__aarch64__)

#include <arm_neon.h>

#include "backends.hpp"

// NEON backend (baseline on aarch64). Two float64x2 accumulators emulate the
// 4-lane blocked dot: acc01 holds lanes 0/1, acc23 holds lanes 2/3, and the
// final combine (l0 + l2) + (l1 + l3) matches the scalar reference exactly.
// vmulq/vaddq are kept separate so no fused multiply-add sneaks in.

namespace dea::kernels {
namespace {

void axpy_minus_impl(double* y, const double* x, double a, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float64x2_t y01 = vld1q_f64(y + i);
        float64x2_t y23 = vld1q_f64(y + i + 2);
        y01 = vsubq_f64(y01, vmulq_f64(av, vld1q_f64(x + i)));
        y23 = vsubq_f64(y23, vmulq_f64(av, vld1q_f64(x + i + 2)));
        vst1q_f64(y + i, y01);
        vst1q_f64(y + i + 2, y23);
    }
    for (; i < n; ++i) {
        y[i] = y[i] - a * x[i];
    }
}

double dot_impl(const double* x, const double* y, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
        acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
    }
    float64x2_t pair = vaddq_f64(acc01, acc23); // {l0+l2, l1+l3}
    double s = vgetq_lane_f64(pair, 0) + vgetq_lane_f64(pair, 1);
    for (; i < n; ++i) {
        s += x[i] * y[i];
    }
    return s;
}

void scale_impl(double* x, double a, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), av));
    }
    for (; i < n; ++i) {
        x[i] = x[i] * a;
    }
}

} // namespace

const Ops& neon_ops() {
    static constexpr Ops ops{"neon", &axpy_minus_impl, &dot_impl, &scale_impl};
    return ops;
}

} // namespace dea::kernels

#endif // aarch64
