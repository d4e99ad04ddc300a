#if defined(__x86_64__) || defined(__amd64__)

#include <immintrin.h>

#include "backends.hpp"

// AVX2 backend. Uses separate mul/add (no FMA) so each lane performs the
// identical IEEE operations as the scalar reference.

namespace dea::kernels {
namespace {

void axpy_minus_impl(double* y, const double* x, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yv = _mm256_loadu_pd(y + i);
        __m256d xv = _mm256_loadu_pd(x + i);
        yv = _mm256_sub_pd(yv, _mm256_mul_pd(av, xv));
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) {
        y[i] = y[i] - a * x[i];
    }
}

double dot_impl(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d yv = _mm256_loadu_pd(y + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(xv, yv));
    }
    // (l0 + l2) + (l1 + l3), matching the scalar combine order
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d pair = _mm_add_pd(lo, hi);
    double s = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
    for (; i < n; ++i) {
        s += x[i] * y[i];
    }
    return s;
}

void scale_impl(double* x, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), av));
    }
    for (; i < n; ++i) {
        x[i] = x[i] * a;
    }
}

} // namespace

const Ops& avx2_ops() {
    static constexpr Ops ops{"avx2", &axpy_minus_impl, &dot_impl, &scale_impl};
    return ops;
}

bool avx2_available() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

} // namespace dea::kernels

#endif // x86-64
