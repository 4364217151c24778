// closure.hpp — the k-closure operator and its stability parameters.
#pragma once

#include <cstdint>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/theorem.hpp"

namespace specgraph {

/// Result of closing a graph: the fixpoint, the insertion log (audit only;
/// the scan order is arbitrary because the closure is unique), and k.
struct ClosureResult {
    Graph closed;
    std::vector<Edge> added_edges;
    int k = 0;

    // Equality deliberately ignores the insertion log: the closure is unique,
    // the log is not canonical.
    friend bool operator==(const ClosureResult& a, const ClosureResult& b) {
        return a.k == b.k && a.closed == b.closed;
    }
};

/// k-closure: repeatedly join nonadjacent pairs with degree sum >= k until
/// none remains. Requires k >= 0. k = 0 completes the graph; k > 2(n-1)
/// returns it unchanged.
ClosureResult k_closure(const Graph& g, int k);

/// Same fixpoint computed with a seeded shuffle of the candidate scan order;
/// exists to exercise order independence.
ClosureResult k_closure_scrambled(const Graph& g, int k, std::uint64_t seed);

/// Closure parameter of Lemma-style stability for each property on an
/// n-vertex graph: n+s-2 (connectivity forms), n-beta-1 (deficiency),
/// n-s (path cover), n+s (hamiltonicity forms).
int closure_parameter(const TheoremParams& params, int n);

}  // namespace specgraph
