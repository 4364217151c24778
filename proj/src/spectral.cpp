#include "specgraph/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "specgraph/kernels.hpp"

namespace specgraph {

namespace {

constexpr double kStartPerturbation = 1e-4;  // component i gets +i*eps0

// Stationarity floor: successive Rayleigh deltas at roundoff scale for this
// many iterations count as converged (the iterate sits on an eigenvector).
constexpr int kStationaryRuns = 5;

}  // namespace

SpectralEstimate spectral_radius(const Graph& g, const SpectralOptions& options) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("spectral_radius: need n >= 1");
    if (!(options.tol > 0)) throw std::invalid_argument("spectral_radius: need tol > 0");
    const long long cap = options.max_iterations > 0
                              ? options.max_iterations
                              : 100LL * n * n;

    const auto& kt = kernels::table();
    const int stride = kernels::padded_size(n);
    const double shift = n;

    std::vector<double> m(static_cast<std::size_t>(n) * stride, 0.0);
    for (int u = 0; u < n; ++u) {
        double* row = m.data() + static_cast<std::size_t>(u) * stride;
        const std::uint64_t* bits = g.row(u);
        for (int w = 0; w < g.words_per_row(); ++w) {
            std::uint64_t word = bits[w];
            while (word) {
                int v = w * 64 + std::countr_zero(word);
                word &= word - 1;
                row[v] = 1.0;
            }
        }
        row[u] = shift;
    }

    std::vector<double> x(stride, 0.0), y(stride, 0.0);
    for (int i = 0; i < n; ++i) x[i] = 1.0 + i * kStartPerturbation;
    kt.scale(x.data(), 1.0 / std::sqrt(kt.dot(x.data(), x.data(), stride)), stride);

    double theta = 0.0;
    double prev_delta = std::numeric_limits<double>::infinity();
    double rho1 = 2.0, rho2 = 2.0;  // recent delta ratios (>= 1 means unknown)
    int stationary = 0;
    long long iter = 0;
    bool converged = false;
    double residual = std::numeric_limits<double>::infinity();

    while (iter < cap) {
        ++iter;
        kt.matvec(m.data(), n, stride, x.data(), y.data());
        const double next_theta = kt.dot(x.data(), y.data(), stride);
        const double delta = (iter == 1) ? std::numeric_limits<double>::infinity()
                                         : next_theta - theta;
        theta = next_theta;
        residual = kt.residual_inf(y.data(), x.data(), theta, stride);

        if (iter > 1) {
            // The Rayleigh quotient is nondecreasing for the positive definite
            // shifted matrix; deltas decay geometrically, so the remaining
            // error is estimated by extrapolating the tail.
            if (delta <= 64.0 * std::numeric_limits<double>::epsilon() * theta) {
                if (++stationary >= kStationaryRuns) {
                    converged = true;
                    break;
                }
            } else {
                stationary = 0;
            }
            if (std::isfinite(prev_delta) && prev_delta > 0.0) {
                rho2 = rho1;
                rho1 = delta / prev_delta;
            }
            const double rho = std::min(std::max(rho1, rho2), 0.9999999);
            const double tail = delta * rho / (1.0 - rho);
            if (delta >= 0.0 && delta <= options.tol && tail <= options.tol &&
                std::max(rho1, rho2) < 1.0) {
                converged = true;
                break;
            }
            prev_delta = std::max(delta, 0.0);
        }

        const double nrm = std::sqrt(kt.dot(y.data(), y.data(), stride));
        kt.scale(y.data(), 1.0 / nrm, stride);
        x.swap(y);
    }

    SpectralEstimate est;
    est.value = std::clamp(theta - shift, 0.0, static_cast<double>(n - 1));
    est.residual = residual;
    est.iterations = iter;
    est.shift = shift;
    if (!converged)
        throw ConvergenceError("spectral_radius: no convergence within iteration cap", est);
    return est;
}

SpectralEstimate spectral_radius(const Graph& g, double tol) {
    SpectralOptions opt;
    opt.tol = tol;
    return spectral_radius(g, opt);
}

double min_edge_geometric_degree(const Graph& g) {
    long long best = -1;
    for (int u = 0; u < g.order(); ++u) {
        const long long du = g.degree(u);
        if (du == 0) continue;
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) continue;
            const long long p = du * g.degree(v);
            if (best < 0 || p < best) best = p;
        }
    }
    if (best < 0) throw std::invalid_argument("min_edge_geometric_degree: edgeless graph");
    return std::sqrt(static_cast<double>(best));
}

BoundComparison compare_to_bound(const SpectralEstimate& est, long long radicand, double band) {
    if (radicand < 0) throw std::invalid_argument("compare_to_bound: negative radicand");
    if (!(band >= 0)) throw std::invalid_argument("compare_to_bound: negative band");
    const double mu2 = est.value * est.value;
    BoundVerdict v;
    if (std::fabs(mu2 - static_cast<double>(radicand)) <= band) v = BoundVerdict::Equal;
    else if (mu2 < static_cast<double>(radicand) - band) v = BoundVerdict::Below;
    else v = BoundVerdict::Above;
    return BoundComparison{v, mu2, radicand};
}

}  // namespace specgraph
