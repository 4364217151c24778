#include "specgraph/closure.hpp"

#include <deque>

namespace specgraph {

namespace {

ClosureResult close_with_order(const Graph& g, int k, std::vector<Edge> scan) {
    const int n = g.order();
    Graph h = g;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = h.degree(v);

    std::deque<Edge> pending(scan.begin(), scan.end());
    std::vector<Edge> added;
    while (!pending.empty()) {
        auto [u, v] = pending.front();
        pending.pop_front();
        if (h.has_edge(u, v) || deg[u] + deg[v] < k) continue;
        h.add_edge(u, v);
        ++deg[u];
        ++deg[v];
        added.emplace_back(u, v);
        // Degrees of u and v rose: their nonadjacent pairs may now qualify.
        for (int w = 0; w < n; ++w) {
            if (w != u && !h.has_edge(u, w)) pending.emplace_back(std::min(u, w), std::max(u, w));
            if (w != v && !h.has_edge(v, w)) pending.emplace_back(std::min(v, w), std::max(v, w));
        }
    }
    return ClosureResult{std::move(h), std::move(added), k};
}

}  // namespace

ClosureResult k_closure(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_closure: need k >= 0");
    std::vector<Edge> scan;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) scan.emplace_back(u, v);
    return close_with_order(g, k, std::move(scan));
}

ClosureResult k_closure_scrambled(const Graph& g, int k, std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("k_closure: need k >= 0");
    std::vector<Edge> scan;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) scan.emplace_back(u, v);
    // splitmix64-driven Fisher-Yates; hand-rolled so the order is stable
    // across standard libraries.
    std::uint64_t state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    for (std::size_t i = scan.size(); i > 1; --i)
        std::swap(scan[i - 1], scan[next() % i]);
    return close_with_order(g, k, std::move(scan));
}

int closure_parameter(const TheoremParams& params, int n) {
    switch (params.theorem) {
        case Theorem::SConnected:
        case Theorem::SEdgeConnected:
            return n + params.s - 2;
        case Theorem::Deficient:
            return n - params.beta - 1;
        case Theorem::PathCoverable:
            return n - params.s;
        case Theorem::SHamiltonian:
        case Theorem::SEdgeHamiltonian:
            return n + params.s;
    }
    throw std::invalid_argument("closure_parameter: unknown theorem");
}

}  // namespace specgraph
