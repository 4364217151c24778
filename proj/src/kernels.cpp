// Backend detection and dispatch.
#include "specgraph/kernels.hpp"

#include <stdexcept>

namespace specgraph::kernels {

namespace detail {

void matvec_scalar(const double* a, int rows, int stride, const double* x, double* y);
double dot_scalar(const double* x, const double* y, int len);
void scale_scalar(double* x, double s, int len);
double residual_inf_scalar(const double* y, const double* x, double t, int len);

#if defined(__x86_64__) || defined(_M_X64)
void matvec_avx2(const double* a, int rows, int stride, const double* x, double* y);
double dot_avx2(const double* x, const double* y, int len);
void scale_avx2(double* x, double s, int len);
double residual_inf_avx2(const double* y, const double* x, double t, int len);
#endif

}  // namespace detail

namespace {

constexpr KernelTable kScalarTable{detail::matvec_scalar, detail::dot_scalar,
                                   detail::scale_scalar, detail::residual_inf_scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2Table{detail::matvec_avx2, detail::dot_avx2, detail::scale_avx2,
                                 detail::residual_inf_avx2};
#endif

Backend detect_backend() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
    return Backend::Scalar;
}

Backend& current_backend() {
    static Backend backend = detect_backend();
    return backend;
}

}  // namespace

bool backend_supported(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return current_backend(); }

void set_backend(Backend b) {
    if (!backend_supported(b)) throw std::invalid_argument("kernels: backend not supported on this CPU");
    current_backend() = b;
}

const KernelTable& table_for(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::Avx2) return kAvx2Table;
#endif
    (void)b;
    return kScalarTable;
}

const KernelTable& table() { return table_for(current_backend()); }

}  // namespace specgraph::kernels
