// AVX2 kernels. Compiled with -mavx2 in its own translation unit; only
// reached after runtime CPU detection. Rows are padded to a multiple of 4
// doubles with zeros, so whole-row vector loops need no tail handling.
#include "specgraph/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace specgraph::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

}  // namespace

void matvec_avx2(const double* a, int rows, int stride, const double* x, double* y) {
    for (int i = 0; i < rows; ++i) {
        const double* row = a + static_cast<std::size_t>(i) * stride;
        __m256d acc = _mm256_setzero_pd();
        for (int j = 0; j < stride; j += 4) {
            __m256d av = _mm256_loadu_pd(row + j);
            __m256d xv = _mm256_loadu_pd(x + j);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(av, xv));
        }
        y[i] = hsum(acc);
    }
}

double dot_avx2(const double* x, const double* y, int len) {
    __m256d acc = _mm256_setzero_pd();
    for (int i = 0; i < len; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d yv = _mm256_loadu_pd(y + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(xv, yv));
    }
    return hsum(acc);
}

void scale_avx2(double* x, double s, int len) {
    __m256d sv = _mm256_set1_pd(s);
    for (int i = 0; i < len; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), sv));
}

double residual_inf_avx2(const double* y, const double* x, double t, int len) {
    const __m256d tv = _mm256_set1_pd(t);
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d worst = _mm256_setzero_pd();
    for (int i = 0; i < len; i += 4) {
        __m256d r = _mm256_sub_pd(_mm256_loadu_pd(y + i),
                                  _mm256_mul_pd(tv, _mm256_loadu_pd(x + i)));
        worst = _mm256_max_pd(worst, _mm256_andnot_pd(signmask, r));
    }
    __m128d lo = _mm256_castpd256_pd128(worst);
    __m128d hi = _mm256_extractf128_pd(worst, 1);
    lo = _mm_max_pd(lo, hi);
    return std::fmax(_mm_cvtsd_f64(lo), _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo)));
}

}  // namespace specgraph::kernels::detail

#endif  // x86_64
