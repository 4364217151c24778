#include "specgraph/certify.hpp"

#include <cstdio>

namespace specgraph {

std::string_view cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::HypothesisUnmet: return "HypothesisUnmet";
        case CertStatus::Certified: return "Certified";
        case CertStatus::Exceptional: return "Exceptional";
        case CertStatus::Inconclusive: return "Inconclusive";
        case CertStatus::BoundaryUnknown: return "BoundaryUnknown";
    }
    return "?";
}

long long radicand(const TheoremParams& p, int n) {
    const long long rest = n - p.k - 1;
    switch (p.theorem) {
        case Theorem::SConnected:
        case Theorem::SEdgeConnected:
            return (p.k - p.s + 2) * rest;
        case Theorem::Deficient:
            return (p.beta + p.k + 1) * rest;
        case Theorem::PathCoverable:
            return (p.k + p.s) * rest;
        case Theorem::SHamiltonian:
        case Theorem::SEdgeHamiltonian:
            return (p.k - p.s) * rest;
    }
    throw std::invalid_argument("radicand: unknown theorem");
}

HypothesisReport check_hypotheses(const Graph& g, const TheoremParams& p,
                                  bool relax_connectivity) {
    const int n = g.order();
    HypothesisReport report;
    report.add("param-range", 1, p.ranges_valid() ? 1 : 0, p.ranges_valid());

    long long order_bound = 0;
    switch (p.theorem) {
        case Theorem::SConnected:
        case Theorem::SEdgeConnected:
        case Theorem::SHamiltonian:
        case Theorem::SEdgeHamiltonian:
            order_bound = 2LL * p.k + 1;
            break;
        case Theorem::Deficient:
            order_bound = 2LL * p.k + p.beta + 2;
            break;
        case Theorem::PathCoverable:
            order_bound = 2LL * p.k + p.s + 1;
            break;
    }
    report.add("order", order_bound, n, n >= order_bound);

    if (p.theorem == Theorem::Deficient) {
        report.add("beta-range", n, p.beta, p.beta >= 0 && p.beta <= n);
        report.add("parity", p.beta & 1, n & 1, (n - p.beta) % 2 == 0);
    }

    const bool connected = n >= 1 && is_connected(g);
    report.add("connectivity", 1, connected ? 1 : 0, relax_connectivity || connected);

    const int delta = n >= 1 ? min_degree(g) : -1;
    report.add("min-degree", p.k, delta, delta >= p.k);
    return report;
}

namespace {

CertOutcome run_pipeline(const Graph& g, const TheoremParams& p, const CertifyOptions& options,
                         const SpectralEstimate* precomputed) {
    CertOutcome outcome;
    outcome.radicand = radicand(p, g.order());
    outcome.report = check_hypotheses(g, p, options.relax_connectivity);
    if (!outcome.report.pass) {
        outcome.status = CertStatus::HypothesisUnmet;
        return outcome;
    }

    if (precomputed) {
        outcome.mu = *precomputed;
    } else {
        SpectralOptions sopt;
        sopt.tol = options.spectral_tol;
        sopt.max_iterations = options.spectral_max_iterations;
        outcome.mu = spectral_radius(complement(g), sopt);
    }

    const BoundComparison cmp = compare_to_bound(*outcome.mu, outcome.radicand, options.band);
    if (cmp.verdict == BoundVerdict::Above) {
        outcome.status = CertStatus::Inconclusive;
        return outcome;
    }
    if (cmp.verdict == BoundVerdict::Below) {
        outcome.status = CertStatus::Certified;
        return outcome;
    }

    // Equality: the theorem guarantees the property unless the graph sits in
    // one of its exceptional families, so membership decides. The two-clique
    // union is tried before EP where both apply (a k-regular union of cliques
    // is in both, and the sharper description wins).
    std::array<Family, 2> order{};
    int nfamilies = 0;
    switch (p.theorem) {
        case Theorem::SConnected:
        case Theorem::SEdgeConnected:
            order = {Family::EP, Family::EC};
            nfamilies = 2;
            break;
        case Theorem::Deficient:
            if (p.beta == 0) order[nfamilies++] = Family::UnionCliques;
            order[nfamilies++] = Family::EP;
            break;
        case Theorem::PathCoverable:
            if (p.s == 1) order[nfamilies++] = Family::UnionCliques;
            order[nfamilies++] = Family::EP;
            break;
        case Theorem::SHamiltonian:
        case Theorem::SEdgeHamiltonian:
            order = {Family::EP, Family::ES};
            nfamilies = 2;
            break;
    }
    try {
        for (int i = 0; i < nfamilies; ++i) {
            if (auto witness = membership(g, order[i], p, options.membership_cap)) {
                outcome.status = CertStatus::Exceptional;
                outcome.witness = std::move(witness);
                return outcome;
            }
        }
    } catch (const CapExceededError&) {
        outcome.status = CertStatus::BoundaryUnknown;
        return outcome;
    }
    // Equality with no family membership: the theorem still applies.
    outcome.status = CertStatus::Certified;
    return outcome;
}

}  // namespace

CertOutcome certify(const Graph& g, const TheoremParams& params, const CertifyOptions& options) {
    return run_pipeline(g, params, options, nullptr);
}

CertOutcome certify(const Graph& g, const TheoremParams& params, const CertifyOptions& options,
                    const SpectralEstimate& complement_mu) {
    return run_pipeline(g, params, options, &complement_mu);
}

std::string to_record(const CertOutcome& outcome, const TheoremParams& params) {
    char buf[64];
    std::string rec = "status=";
    rec += cert_status_name(outcome.status);
    if (outcome.mu) {
        std::snprintf(buf, sizeof buf, " mu=%.12g mu_residual=%.6g", outcome.mu->value,
                      outcome.mu->residual);
        rec += buf;
    } else {
        rec += " mu=- mu_residual=-";
    }
    std::snprintf(buf, sizeof buf, " radicand=%lld theorem=", outcome.radicand);
    rec += buf;
    rec += theorem_name(params.theorem);
    std::snprintf(buf, sizeof buf, " k=%d s_or_beta=%d", params.k, params.property_parameter());
    rec += buf;
    rec += " witness_family=";
    if (outcome.witness) {
        rec += family_name(outcome.witness->family);
        rec += " witness_partition=";
        for (std::size_t i = 0; i < outcome.witness->core_part.size(); ++i) {
            if (i) rec += ',';
            rec += std::to_string(outcome.witness->core_part[i]);
        }
        rec += '|';
        for (std::size_t i = 0; i < outcome.witness->join_part.size(); ++i) {
            if (i) rec += ',';
            rec += std::to_string(outcome.witness->join_part[i]);
        }
    } else {
        rec += "- witness_partition=-";
    }
    return rec;
}

}  // namespace specgraph
