#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Dense double-precision kernels behind the simplex pivot loops and the
// panel scoring dots. A scalar reference implementation always exists;
// AVX2 (x86-64) and NEON (aarch64) variants are selected at runtime.
//
// All backends are bit-exact equivalents by contract:
//   - axpy_minus and scale are elementwise, no FMA contraction.
//   - dot is defined as a 4-lane blocked sum: lane k accumulates the
//     products at indices congruent to k mod 4 over all full blocks, the
//     lanes combine as (l0 + l2) + (l1 + l3), and the tail elements are
//     added one by one in index order.
// Every backend, including the scalar reference, implements exactly this
// arithmetic, so runtime backend selection never changes solver output.

namespace dea::kernels {

enum class Backend { scalar, avx2, neon };

struct Ops {
    const char* name;
    // y[i] = y[i] - a * x[i]
    void (*axpy_minus)(double* y, const double* x, double a, std::size_t n);
    // blocked dot product, see contract above
    double (*dot)(const double* x, const double* y, std::size_t n);
    // x[i] = x[i] * a
    void (*scale)(double* x, double a, std::size_t n);
};

// Active dispatch table. The default is the widest backend the CPU supports,
// overridable with the DEA_KERNELS environment variable (scalar|avx2|neon).
const Ops& active();
Backend active_backend();

// Explicit selection; returns false (and leaves the selection unchanged)
// if the backend is not available on this CPU/build.
bool select(Backend b);
bool supported(Backend b);
std::vector<Backend> supported_backends();
std::string_view name(Backend b);

inline void axpy_minus(std::span<double> y, std::span<const double> x, double a) {
    active().axpy_minus(y.data(), x.data(), a, y.size());
}

inline double dot(std::span<const double> x, std::span<const double> y) {
    return active().dot(x.data(), y.data(), x.size());
}

inline void scale(std::span<double> x, double a) {
    active().scale(x.data(), a, x.size());
}

} // namespace dea::kernels
