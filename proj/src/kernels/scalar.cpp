#include "backends.hpp"

// Scalar reference backend. The dot product uses the same 4-lane blocked
// accumulation as the vector backends so results match them bit for bit.
// This file must be compiled with FP contraction off.

namespace dea::kernels {
namespace {

void axpy_minus_impl(double* y, const double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = y[i] - a * x[i];
    }
}

double dot_impl(const double* x, const double* y, std::size_t n) {
    double l0 = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        l0 += x[i] * y[i];
        l1 += x[i + 1] * y[i + 1];
        l2 += x[i + 2] * y[i + 2];
        l3 += x[i + 3] * y[i + 3];
    }
    double s = (l0 + l2) + (l1 + l3);
    for (; i < n; ++i) {
        s += x[i] * y[i];
    }
    return s;
}

void scale_impl(double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = x[i] * a;
    }
}

} // namespace

const Ops& scalar_ops() {
    static constexpr Ops ops{"scalar", &axpy_minus_impl, &dot_impl, &scale_impl};
    return ops;
}

} // namespace dea::kernels
