// oracles.hpp — exact, witness-producing deciders for the six properties.
//
// These are the ground truth the certifiers are validated against. All of
// them are exponential-time exact algorithms bounded by desk-scale caps.
#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

inline constexpr int kExactSolverCap = 18;      // subset DP / backtracking ceiling
inline constexpr int kEdgeHamForestCap = 4;     // max total forest edges searched
inline constexpr int kCutEnumerationLimit = 12; // exhaustive cuts up to here, max-flow beyond

// --- witness payloads ------------------------------------------------------

struct VertexCutWitness { std::vector<int> vertices; };     // removal disconnects
struct EdgeCutWitness { std::vector<Edge> edges; };         // removal disconnects
struct TooFewVerticesWitness {};                            // the "more than s vertices" clause failed
struct MatchingWitness {                                    // a maximum matching and its exposed vertices
    std::vector<Edge> matching;
    std::vector<int> unmatched;
};
struct PathCoverWitness { std::vector<std::vector<int>> paths; };  // vertex-disjoint cover
struct DeletionSetWitness { std::vector<int> vertices; };   // G - X has no Hamiltonian cycle
struct LinearForestWitness { std::vector<Edge> edges; };    // lies on no Hamiltonian cycle
struct HamCycleWitness { std::vector<int> order; };         // the cycle, as a vertex sequence

using OracleWitness =
    std::variant<std::monostate, VertexCutWitness, EdgeCutWitness, TooFewVerticesWitness,
                 MatchingWitness, PathCoverWitness, DeletionSetWitness, LinearForestWitness,
                 HamCycleWitness>;

struct OracleVerdict {
    bool holds;
    OracleWitness witness;
};

// --- connectivity ----------------------------------------------------------

// Exhaustive small-cut enumeration up to kCutEnumerationLimit vertices,
// max-flow (unit capacities, vertex splitting) beyond. The *_flow variants
// force the flow route at any size; the two routes cross-check in tests.
// Convention: complete graphs have vertex connectivity n-1.
int vertex_connectivity(const Graph& g);       // n >= 1
int vertex_connectivity_flow(const Graph& g);  // n >= 1
int edge_connectivity(const Graph& g);         // n >= 2
int edge_connectivity_flow(const Graph& g);    // n >= 2

OracleVerdict is_s_connected(const Graph& g, int s);       // n >= 1
OracleVerdict is_s_edge_connected(const Graph& g, int s);  // n >= 2

// --- matching --------------------------------------------------------------

/// Vertices left unmatched by a maximum matching (exact subset DP).
int deficiency(const Graph& g);
OracleVerdict is_beta_deficient(const Graph& g, int beta);

// --- path cover ------------------------------------------------------------

/// Minimum number of vertex-disjoint paths covering V(G); single vertices
/// count as trivial paths. Exact subset DP, n >= 1.
int min_path_cover(const Graph& g);
OracleVerdict is_s_path_coverable(const Graph& g, int s);

// --- hamiltonicity ---------------------------------------------------------

/// Backtracking with degree/connectivity pruning. Graphs on fewer than 3
/// vertices are not Hamiltonian (no cycle exists).
OracleVerdict is_hamiltonian(const Graph& g);

/// True iff G - X is Hamiltonian for every X with |X| <= s (all sizes 0..s).
/// Consequently false whenever n - s < 3. A failing X is reported in
/// canonical order (by size, then by subset rank).
OracleVerdict is_s_hamiltonian(const Graph& g, int s);

/// True iff every linear forest of G with at most s edges in total lies on
/// some Hamiltonian cycle of G. The empty forest is a valid linear forest,
/// so the check subsumes plain Hamiltonicity. s capped at kEdgeHamForestCap.
OracleVerdict is_s_edge_hamiltonian(const Graph& g, int s);

/// Closure-stable form: every linear forest of `g` with at most s edges lies
/// on some Hamiltonian cycle of `host` (a supergraph of g on the same
/// vertices). The per-forest extension property is what the degree-sum
/// closure preserves; quantifying over the host's own forests instead is not
/// stable, because an added closure edge enlarges the forest universe.
/// is_s_edge_hamiltonian(g, s) is the host == g case.
OracleVerdict is_s_edge_hamiltonian_within(const Graph& g, const Graph& host, int s);

/// A Hamiltonian cycle containing every edge of `required` (which must be a
/// linear forest of g), if one exists.
std::optional<std::vector<int>> hamiltonian_cycle_through(const Graph& g,
                                                          std::span<const Edge> required);

// --- witness re-validation -------------------------------------------------

enum class Property {
    SConnected,
    SEdgeConnected,
    BetaDeficient,
    SPathCoverable,
    SHamiltonian,
    SEdgeHamiltonian,
};

/// Re-validate a verdict's witness by direct simulation: cuts are removed and
/// connectivity rechecked, matchings are checked edge-by-edge plus an
/// alternating-path maximality search, covers are walked, deletion sets and
/// forests are re-searched. Returns false if the witness does not support the
/// verdict. Positive verdicts with no payload validate trivially.
bool revalidate_witness(const Graph& g, Property property, int parameter,
                        const OracleVerdict& verdict);

}  // namespace specgraph
