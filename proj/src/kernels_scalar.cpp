// Scalar reference kernels. Kept free of intrinsics; the AVX2 variants are
// equivalence-tested against these.
#include <cmath>

#include "specgraph/kernels.hpp"

namespace specgraph::kernels::detail {

void matvec_scalar(const double* a, int rows, int stride, const double* x, double* y) {
    for (int i = 0; i < rows; ++i) {
        const double* row = a + static_cast<std::size_t>(i) * stride;
        double acc = 0.0;
        for (int j = 0; j < stride; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

double dot_scalar(const double* x, const double* y, int len) {
    double acc = 0.0;
    for (int i = 0; i < len; ++i) acc += x[i] * y[i];
    return acc;
}

void scale_scalar(double* x, double s, int len) {
    for (int i = 0; i < len; ++i) x[i] *= s;
}

double residual_inf_scalar(const double* y, const double* x, double t, int len) {
    double worst = 0.0;
    for (int i = 0; i < len; ++i) {
        double r = std::fabs(y[i] - t * x[i]);
        if (r > worst) worst = r;
    }
    return worst;
}

}  // namespace specgraph::kernels::detail
