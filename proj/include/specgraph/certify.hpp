// certify.hpp — the six spectral certifiers: hypothesis validation, bound
// comparison on the complement's spectral radius, and exceptional-family
// dispatch.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "specgraph/families.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/spectral.hpp"
#include "specgraph/theorem.hpp"

namespace specgraph {

struct CertifyOptions {
    double spectral_tol = 1e-10;
    long long spectral_max_iterations = 0;  // 0 selects the 100*n^2 default
    double band = 1e-6;                     // Equal-detection band on mu^2
    bool relax_connectivity = false;        // drops only the connectivity check
    int membership_cap = kMembershipCap;
};

enum class CertStatus { HypothesisUnmet, Certified, Exceptional, Inconclusive, BoundaryUnknown };

std::string_view cert_status_name(CertStatus s);

struct HypothesisCheck {
    const char* name = "";
    long long required = 0;
    long long observed = 0;
    bool pass = true;
};

struct HypothesisReport {
    std::array<HypothesisCheck, 6> checks{};
    int count = 0;
    bool pass = true;

    void add(const char* name, long long required, long long observed, bool ok) {
        checks[count++] = {name, required, observed, ok};
        pass = pass && ok;
    }
};

struct CertOutcome {
    CertStatus status = CertStatus::HypothesisUnmet;
    std::optional<SpectralEstimate> mu;  // spectral radius of the complement
    long long radicand = 0;
    std::optional<FamilyWitness> witness;
    HypothesisReport report;
};

/// Integer radicand of the theorem's bound sqrt(...) for an n-vertex graph.
long long radicand(const TheoremParams& params, int n);

/// Evaluate every hypothesis of the selected theorem: parameter ranges, the
/// order bound, parity (deficiency only), connectivity, minimum degree.
HypothesisReport check_hypotheses(const Graph& g, const TheoremParams& params,
                                  bool relax_connectivity = false);

/// Full pipeline: hypotheses -> mu(complement) -> bound comparison -> on
/// equality, exceptional-family search. The second overload takes a
/// precomputed complement estimate (batch sweeps reuse one estimate across
/// parameterizations).
CertOutcome certify(const Graph& g, const TheoremParams& params,
                    const CertifyOptions& options = {});
CertOutcome certify(const Graph& g, const TheoremParams& params, const CertifyOptions& options,
                    const SpectralEstimate& complement_mu);

/// Flat key-value record, one line: status, mu, mu_residual, radicand,
/// theorem, k, s_or_beta, witness_family, witness_partition.
std::string to_record(const CertOutcome& outcome, const TheoremParams& params);

}  // namespace specgraph
