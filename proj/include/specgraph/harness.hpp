// harness.hpp — desk-scale validation: graph enumeration and sampling,
// theorem soundness sweeps, closure/spectral-bound property sweeps, and
// equality-case (tightness) searches.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specgraph/certify.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/oracles.hpp"

namespace specgraph {

/// Pull-based graph stream; nullopt ends the stream.
using GraphStream = std::function<std::optional<Graph>()>;

/// Every labeled simple graph on n vertices exactly once, in lexicographic
/// edge-mask order. Exhaustive mode is capped at n = 7 (2^21 graphs).
GraphStream enumerate_labeled(int n);

/// Deterministic Erdos-Renyi samples; the same seed yields the same stream on
/// every platform.
GraphStream sample_gnp(int n, double p, std::uint64_t seed, long long count);

/// Every (k, s) or (k, beta) satisfying the theorem's stated inequalities for
/// order n (parameter ranges, order bound, parity). Finite by construction.
std::vector<TheoremParams> valid_params(Theorem theorem, int n);

/// The property a theorem certifies, for oracle dispatch.
Property theorem_property(Theorem theorem);

struct SweepViolation {
    std::string graph6;
    TheoremParams params;
    CertStatus status;
    bool oracle_holds = false;
};

struct ExceptionalEntry {
    std::string graph6;
    TheoremParams params;
    std::optional<bool> oracle_holds;  // logged for tightness analysis; nullopt = oracle cap hit
};

struct SweepReport {
    long long graphs_examined = 0;
    long long parameterizations_examined = 0;
    long long certified = 0;
    long long exceptional = 0;
    long long inconclusive = 0;
    long long hypothesis_unmet = 0;
    long long boundary_unknown = 0;
    long long oracle_cap_skipped = 0;  // certified entries whose oracle overflowed its cap
    std::vector<SweepViolation> violations;
    std::vector<ExceptionalEntry> exceptional_entries;
    double wall_seconds = 0.0;
};

struct SweepOptions {
    std::vector<Theorem> theorems{Theorem::SConnected,    Theorem::SEdgeConnected,
                                  Theorem::Deficient,     Theorem::PathCoverable,
                                  Theorem::SHamiltonian,  Theorem::SEdgeHamiltonian};
    CertifyOptions certify;  // strict connectivity by default
    int max_k = 0;           // 0 = every valid k
};

/// For each graph and every valid parameterization: certify, and when the
/// verdict is Certified, confirm it against the exact oracle. A disagreement
/// is a violation. Exceptional entries log the oracle's actual verdict.
SweepReport soundness_sweep(const GraphStream& source, const SweepOptions& options = {});

struct EquivalenceMismatch {
    std::string graph6;
    Theorem theorem;
    int parameter = 0;
    bool oracle_graph = false;
    bool oracle_closed = false;
};

struct EquivalenceReport {
    long long graphs_examined = 0;
    long long checks = 0;
    std::vector<EquivalenceMismatch> mismatches;
    double wall_seconds = 0.0;
};

/// oracle(G) == oracle(C_k(G)) with k the property's closure parameter, for
/// every property and every parameter value meaningful at order n.
EquivalenceReport closure_equivalence_sweep(const GraphStream& source);

struct SpectralLemmaReport {
    long long graphs_examined = 0;
    long long connected_checked = 0;
    std::vector<std::string> violations;  // graph6 plus reason
    double wall_seconds = 0.0;
};

/// Over all connected labeled graphs with 2 <= n <= max_n: the spectral
/// radius dominates the minimum edge geometric degree within tolerance, and
/// the equality set is exactly {regular} union {semi-regular bipartite}.
SpectralLemmaReport spectral_bound_sweep(int max_n, double tolerance = 1e-7);

struct TightnessInstance {
    Graph graph;
    Family family;
    double mu = 0.0;
    long long radicand = 0;
};

struct TightnessResult {
    std::vector<TightnessInstance> instances;
    std::vector<std::string> infeasible;  // generator parameter notes
};

/// Family instances for the theorem's parameters whose complement spectral
/// radius meets the bound with equality (within band), each re-verified
/// spectrally.
TightnessResult tightness_search(const TheoremParams& params, int n, double band = 1e-6);

}  // namespace specgraph
