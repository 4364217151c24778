// kernels.hpp — dense arithmetic inner loops for the spectral module.
//
// Scalar reference kernels plus an AVX2 variant, selected once at startup by
// runtime CPU detection. All buffers are row-major with rows padded to a
// multiple of 4 doubles; padding lanes must be zero and are preserved by
// every kernel, so dot products and norms over the padded width are exact.
#pragma once

#include <cstddef>

namespace specgraph::kernels {

enum class Backend { Scalar, Avx2 };

constexpr int kLaneWidth = 4;  // doubles per vector lane (AVX2)

constexpr int padded_size(int n) { return (n + kLaneWidth - 1) / kLaneWidth * kLaneWidth; }

bool backend_supported(Backend b);
Backend active_backend();
/// Force a backend (tests, reproducibility across machines). Throws
/// std::invalid_argument if unsupported on this CPU.
void set_backend(Backend b);

struct KernelTable {
    // y = A x; A is rows x stride, stride a multiple of kLaneWidth.
    void (*matvec)(const double* a, int rows, int stride, const double* x, double* y);
    // sum_i x[i] * y[i] over len (len a multiple of kLaneWidth).
    double (*dot)(const double* x, const double* y, int len);
    // x *= s over len.
    void (*scale)(double* x, double s, int len);
    // max_i |y[i] - t * x[i]| over len.
    double (*residual_inf)(const double* y, const double* x, double t, int len);
};

/// Kernel table of the active backend.
const KernelTable& table();
const KernelTable& table_for(Backend b);

}  // namespace specgraph::kernels
