#include "specgraph/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "specgraph/closure.hpp"
#include "specgraph/graph_io.hpp"
#include "specgraph/harness.hpp"

namespace specgraph::cli {

namespace {

struct GraphInput {
    std::string source = "-";  // "-" stdin, else path or inline graph6
    std::string format = "auto";
};

GraphFormat parse_format(const std::string& name) {
    if (name == "auto") return GraphFormat::Auto;
    if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
    if (name == "edgelist") return GraphFormat::EdgeList;
    throw CLI::ValidationError("--format", "unknown format: " + name);
}

std::string slurp(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const GraphInput& input, std::istream& in) {
    std::string text;
    if (input.source == "-") {
        text = slurp(in);
    } else if (std::ifstream file(input.source); file) {
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    } else {
        text = input.source;  // inline graph6
    }
    return parse_graph(text, parse_format(input.format));
}

TheoremParams make_params(const std::string& theorem, int k, int s, int beta) {
    TheoremParams p;
    p.theorem = theorem_from_name(theorem);
    p.k = k;
    if (p.theorem == Theorem::Deficient) p.beta = beta;
    else p.s = s;
    return p;
}

std::string render_witness(const OracleWitness& w) {
    struct Renderer {
        std::string operator()(std::monostate) const { return "-"; }
        std::string operator()(const TooFewVerticesWitness&) const { return "too-few-vertices"; }
        std::string operator()(const VertexCutWitness& c) const {
            return "vertex-cut:" + join_ints(c.vertices);
        }
        std::string operator()(const EdgeCutWitness& c) const {
            return "edge-cut:" + join_edges(c.edges);
        }
        std::string operator()(const MatchingWitness& m) const {
            return "matching:" + join_edges(m.matching) + ";unmatched:" + join_ints(m.unmatched);
        }
        std::string operator()(const PathCoverWitness& p) const {
            std::string out = "paths:";
            for (std::size_t i = 0; i < p.paths.size(); ++i) {
                if (i) out += ';';
                out += join_ints(p.paths[i]);
            }
            return out;
        }
        std::string operator()(const DeletionSetWitness& d) const {
            return "deletion-set:" + join_ints(d.vertices);
        }
        std::string operator()(const LinearForestWitness& f) const {
            return "forest:" + join_edges(f.edges);
        }
        std::string operator()(const HamCycleWitness& h) const {
            return "cycle:" + join_ints(h.order);
        }
        static std::string join_ints(const std::vector<int>& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(v[i]);
            }
            return out;
        }
        static std::string join_edges(const std::vector<Edge>& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(v[i].first) + "-" + std::to_string(v[i].second);
            }
            return out;
        }
    };
    return std::visit(Renderer{}, w);
}

void for_each_batch_line(const GraphInput& input, std::istream& in,
                         const std::function<void(const Graph&)>& fn) {
    std::ifstream file;
    std::istream* stream = &in;
    if (input.source != "-") {
        file.open(input.source);
        if (!file) throw std::invalid_argument("cannot open input file: " + input.source);
        stream = &file;
    }
    std::string line;
    long long lineno = 0;
    while (std::getline(*stream, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            fn(from_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
        }
    }
}

int run_impl(std::vector<std::string> args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"spectral certification toolkit for graph properties"};
    app.require_subcommand(1);

    // ---- certify ----
    GraphInput cert_in;
    std::string cert_theorem;
    int cert_k = 0, cert_s = 0, cert_beta = 0;
    bool cert_relax = false, cert_batch = false;
    double cert_tol = 1e-10, cert_band = 1e-6;
    int cert_cap = kMembershipCap;
    auto* certify_cmd = app.add_subcommand("certify", "run a spectral certifier on a graph");
    certify_cmd->add_option("input", cert_in.source, "path, inline graph6, or - for stdin");
    certify_cmd->add_option("--format", cert_in.format, "auto|graph6|edgelist");
    certify_cmd->add_option("--theorem", cert_theorem, "s-conn|s-edge-conn|deficient|path-cover|s-ham|s-edge-ham")
        ->required();
    certify_cmd->add_option("--k", cert_k, "minimum-degree parameter")->required();
    certify_cmd->add_option("--s", cert_s, "property parameter");
    certify_cmd->add_option("--beta", cert_beta, "deficiency parameter");
    certify_cmd->add_flag("--relax-connectivity", cert_relax, "drop only the connectivity check");
    certify_cmd->add_option("--tol", cert_tol, "spectral tolerance");
    certify_cmd->add_option("--band", cert_band, "equality band on mu^2");
    certify_cmd->add_option("--membership-cap", cert_cap, "family search size cap");
    certify_cmd->add_flag("--batch", cert_batch, "one graph6 per line, one record per line");

    // ---- oracle ----
    GraphInput oracle_in;
    std::string oracle_property;
    int oracle_s = 0, oracle_beta = 0;
    bool oracle_batch = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact property decision / measure");
    oracle_cmd->add_option("input", oracle_in.source, "path, inline graph6, or - for stdin");
    oracle_cmd->add_option("--format", oracle_in.format, "auto|graph6|edgelist");
    oracle_cmd
        ->add_option("--property", oracle_property,
                     "vertex-connectivity|edge-connectivity|deficiency|min-path-cover|"
                     "hamiltonian|s-conn|s-edge-conn|deficient|path-cover|s-ham|s-edge-ham")
        ->required();
    oracle_cmd->add_option("--s", oracle_s, "property parameter");
    oracle_cmd->add_option("--beta", oracle_beta, "deficiency parameter");
    oracle_cmd->add_flag("--batch", oracle_batch, "one graph6 per line");

    // ---- closure ----
    GraphInput closure_in;
    int closure_k = 0;
    std::string closure_out_format = "graph6";
    bool closure_log = false;
    auto* closure_cmd = app.add_subcommand("closure", "k-closure of a graph");
    closure_cmd->add_option("input", closure_in.source, "path, inline graph6, or - for stdin");
    closure_cmd->add_option("--format", closure_in.format, "auto|graph6|edgelist");
    closure_cmd->add_option("--k", closure_k, "closure parameter")->required();
    closure_cmd->add_option("--output-format", closure_out_format, "graph6|edgelist");
    closure_cmd->add_flag("--log-added", closure_log, "also print the added-edge log");

    // ---- spectrum ----
    GraphInput spectrum_in;
    double spectrum_tol = 1e-10;
    bool spectrum_complement = false;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "adjacency spectral radius");
    spectrum_cmd->add_option("input", spectrum_in.source, "path, inline graph6, or - for stdin");
    spectrum_cmd->add_option("--format", spectrum_in.format, "auto|graph6|edgelist");
    spectrum_cmd->add_option("--tol", spectrum_tol, "Rayleigh tolerance");
    spectrum_cmd->add_flag("--complement", spectrum_complement, "measure the complement instead");

    // ---- family-gen ----
    std::string fg_family;
    int fg_n = 0, fg_k = 0, fg_s = 0, fg_r = 0, fg_m = 0, fg_t = 0;
    auto* family_gen_cmd = app.add_subcommand("family-gen", "generate an exceptional family instance");
    family_gen_cmd->add_option("--family", fg_family, "ep|ec|es|union-cliques")->required();
    family_gen_cmd->add_option("--n", fg_n, "order")->required();
    family_gen_cmd->add_option("--k", fg_k, "minimum-degree parameter")->required();
    family_gen_cmd->add_option("--s", fg_s, "property parameter (ec/es)");
    family_gen_cmd->add_option("--r", fg_r, "core regularity (ep)");
    family_gen_cmd->add_option("--m", fg_m, "X side offset (ec/es)");
    family_gen_cmd->add_option("--t", fg_t, "Y side offset (ec/es)");

    // ---- family-test ----
    GraphInput ft_in;
    std::string ft_family;
    int ft_k = 0, ft_s = 0, ft_cap = kMembershipCap;
    auto* family_test_cmd = app.add_subcommand("family-test", "decide family membership");
    family_test_cmd->add_option("input", ft_in.source, "path, inline graph6, or - for stdin");
    family_test_cmd->add_option("--format", ft_in.format, "auto|graph6|edgelist");
    family_test_cmd->add_option("--family", ft_family, "ep|ec|es|union-cliques")->required();
    family_test_cmd->add_option("--k", ft_k, "minimum-degree parameter")->required();
    family_test_cmd->add_option("--s", ft_s, "property parameter (ec/es)");
    family_test_cmd->add_option("--cap", ft_cap, "membership size cap");

    // ---- sweep ----
    std::string sweep_mode = "soundness";
    int sweep_n = 5, sweep_max_k = 0;
    double sweep_p = 0.5;
    std::uint64_t sweep_seed = 1;
    long long sweep_count = 0;  // 0 = exhaustive
    bool sweep_relax = false;
    std::vector<std::string> sweep_theorems;
    auto* sweep_cmd = app.add_subcommand("sweep", "validation sweeps over graph families");
    sweep_cmd->add_option("--mode", sweep_mode, "soundness|closure-equiv|spectral-bound");
    sweep_cmd->add_option("--n", sweep_n, "graph order (max order for spectral-bound)");
    sweep_cmd->add_option("--count", sweep_count, "sample count (0 = exhaustive enumeration)");
    sweep_cmd->add_option("--p", sweep_p, "edge probability for sampling");
    sweep_cmd->add_option("--seed", sweep_seed, "sampling seed");
    sweep_cmd->add_option("--max-k", sweep_max_k, "restrict k (soundness mode)");
    sweep_cmd->add_option("--theorems", sweep_theorems, "theorem subset (soundness mode)");
    sweep_cmd->add_flag("--relax-connectivity", sweep_relax, "relaxed-hypothesis sweep");

    // ---- tightness ----
    std::string tight_theorem;
    int tight_n = 0, tight_k = 0, tight_s = 0, tight_beta = 0;
    double tight_band = 1e-6;
    auto* tight_cmd = app.add_subcommand("tightness", "equality-case family instances");
    tight_cmd->add_option("--theorem", tight_theorem, "theorem name")->required();
    tight_cmd->add_option("--n", tight_n, "order")->required();
    tight_cmd->add_option("--k", tight_k, "minimum-degree parameter")->required();
    tight_cmd->add_option("--s", tight_s, "property parameter");
    tight_cmd->add_option("--beta", tight_beta, "deficiency parameter");
    tight_cmd->add_option("--band", tight_band, "equality band on mu^2");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }

    if (certify_cmd->parsed()) {
        const TheoremParams params = make_params(cert_theorem, cert_k, cert_s, cert_beta);
        CertifyOptions options;
        options.spectral_tol = cert_tol;
        options.band = cert_band;
        options.relax_connectivity = cert_relax;
        options.membership_cap = cert_cap;
        auto emit = [&](const Graph& g) { out << to_record(certify(g, params, options), params) << '\n'; };
        if (cert_batch) for_each_batch_line(cert_in, in, emit);
        else emit(load_graph(cert_in, in));
        return 0;
    }

    if (oracle_cmd->parsed()) {
        int negatives = 0;
        auto emit = [&](const Graph& g) {
            const std::string& p = oracle_property;
            if (p == "vertex-connectivity") { out << "vertex-connectivity=" << vertex_connectivity(g) << '\n'; return; }
            if (p == "edge-connectivity") { out << "edge-connectivity=" << edge_connectivity(g) << '\n'; return; }
            if (p == "deficiency") { out << "deficiency=" << deficiency(g) << '\n'; return; }
            if (p == "min-path-cover") { out << "min-path-cover=" << min_path_cover(g) << '\n'; return; }
            OracleVerdict v;
            int parameter = oracle_s;
            if (p == "hamiltonian") v = is_hamiltonian(g);
            else if (p == "s-conn") v = is_s_connected(g, oracle_s);
            else if (p == "s-edge-conn") v = is_s_edge_connected(g, oracle_s);
            else if (p == "deficient") { v = is_beta_deficient(g, oracle_beta); parameter = oracle_beta; }
            else if (p == "path-cover") v = is_s_path_coverable(g, oracle_s);
            else if (p == "s-ham") v = is_s_hamiltonian(g, oracle_s);
            else if (p == "s-edge-ham") v = is_s_edge_hamiltonian(g, oracle_s);
            else throw CLI::ValidationError("--property", "unknown property: " + p);
            out << "property=" << p << " parameter=" << parameter
                << " holds=" << (v.holds ? "true" : "false")
                << " witness=" << render_witness(v.witness) << '\n';
            if (!v.holds) ++negatives;
        };
        if (oracle_batch) for_each_batch_line(oracle_in, in, emit);
        else emit(load_graph(oracle_in, in));
        return negatives > 0 ? 1 : 0;
    }

    if (closure_cmd->parsed()) {
        const Graph g = load_graph(closure_in, in);
        const ClosureResult result = k_closure(g, closure_k);
        if (closure_out_format == "edgelist") out << to_edge_list(result.closed);
        else out << to_graph6(result.closed) << '\n';
        if (closure_log)
            for (const auto& [u, v] : result.added_edges) out << "added " << u << ' ' << v << '\n';
        return 0;
    }

    if (spectrum_cmd->parsed()) {
        Graph g = load_graph(spectrum_in, in);
        if (spectrum_complement) g = complement(g);
        const SpectralEstimate est = spectral_radius(g, spectrum_tol);
        char buf[96];
        std::snprintf(buf, sizeof buf, "mu=%.12g residual=%.6g iterations=%lld\n", est.value,
                      est.residual, est.iterations);
        out << buf;
        return 0;
    }

    if (family_gen_cmd->parsed()) {
        const Family family = family_from_name(fg_family);
        Graph g;
        switch (family) {
            case Family::EP: g = gen_ep(fg_n, fg_k, fg_r); break;
            case Family::EC: g = gen_ec(fg_n, fg_k, fg_s, fg_m, fg_t); break;
            case Family::ES: g = gen_es(fg_n, fg_k, fg_s, fg_m, fg_t); break;
            case Family::UnionCliques: g = gen_union_cliques(fg_n, fg_k); break;
        }
        out << to_graph6(g) << '\n';
        return 0;
    }

    if (family_test_cmd->parsed()) {
        const Graph g = load_graph(ft_in, in);
        TheoremParams params;
        params.k = ft_k;
        params.s = ft_s;
        const auto witness = membership(g, family_from_name(ft_family), params, ft_cap);
        if (!witness) {
            out << "member=false\n";
            return 0;
        }
        out << "member=true family=" << family_name(witness->family) << " r=" << witness->r
            << " m=" << witness->m << " t=" << witness->t << " core=";
        for (std::size_t i = 0; i < witness->core_part.size(); ++i)
            out << (i ? "," : "") << witness->core_part[i];
        out << " join=";
        for (std::size_t i = 0; i < witness->join_part.size(); ++i)
            out << (i ? "," : "") << witness->join_part[i];
        out << '\n';
        return 0;
    }

    if (sweep_cmd->parsed()) {
        auto make_source = [&]() {
            return sweep_count > 0 ? sample_gnp(sweep_n, sweep_p, sweep_seed, sweep_count)
                                   : enumerate_labeled(sweep_n);
        };
        if (sweep_mode == "soundness") {
            SweepOptions options;
            options.certify.relax_connectivity = sweep_relax;
            options.max_k = sweep_max_k;
            if (!sweep_theorems.empty()) {
                options.theorems.clear();
                for (const auto& name : sweep_theorems)
                    options.theorems.push_back(theorem_from_name(name));
            }
            const SweepReport report = soundness_sweep(make_source(), options);
            out << "graphs=" << report.graphs_examined
                << " params=" << report.parameterizations_examined
                << " certified=" << report.certified << " exceptional=" << report.exceptional
                << " inconclusive=" << report.inconclusive
                << " hypothesis-unmet=" << report.hypothesis_unmet
                << " boundary-unknown=" << report.boundary_unknown
                << " oracle-cap-skipped=" << report.oracle_cap_skipped
                << " wall-seconds=" << report.wall_seconds << '\n';
            for (const auto& entry : report.exceptional_entries) {
                out << "exceptional graph=" << entry.graph6
                    << " theorem=" << theorem_name(entry.params.theorem) << " k=" << entry.params.k
                    << " s_or_beta=" << entry.params.property_parameter() << " oracle=";
                if (entry.oracle_holds) out << (*entry.oracle_holds ? "true" : "false");
                else out << "cap-exceeded";
                out << '\n';
            }
            for (const auto& v : report.violations)
                out << "violation graph=" << v.graph6 << " theorem=" << theorem_name(v.params.theorem)
                    << " k=" << v.params.k << " s_or_beta=" << v.params.property_parameter()
                    << " status=" << cert_status_name(v.status)
                    << " oracle=" << (v.oracle_holds ? "true" : "false") << '\n';
            out << "violations=" << report.violations.size() << '\n';
            return report.violations.empty() ? 0 : 1;
        }
        if (sweep_mode == "closure-equiv") {
            const EquivalenceReport report = closure_equivalence_sweep(make_source());
            out << "graphs=" << report.graphs_examined << " checks=" << report.checks
                << " wall-seconds=" << report.wall_seconds << '\n';
            for (const auto& m : report.mismatches)
                out << "mismatch graph=" << m.graph6 << " property=" << theorem_name(m.theorem)
                    << " parameter=" << m.parameter << " graph-verdict=" << m.oracle_graph
                    << " closure-verdict=" << m.oracle_closed << '\n';
            out << "mismatches=" << report.mismatches.size() << '\n';
            return report.mismatches.empty() ? 0 : 1;
        }
        if (sweep_mode == "spectral-bound") {
            const SpectralLemmaReport report = spectral_bound_sweep(sweep_n);
            out << "graphs=" << report.graphs_examined
                << " connected-checked=" << report.connected_checked
                << " wall-seconds=" << report.wall_seconds << '\n';
            for (const auto& v : report.violations) out << "violation " << v << '\n';
            out << "violations=" << report.violations.size() << '\n';
            return report.violations.empty() ? 0 : 1;
        }
        throw CLI::ValidationError("--mode", "unknown sweep mode: " + sweep_mode);
    }

    if (tight_cmd->parsed()) {
        const TheoremParams params = make_params(tight_theorem, tight_k, tight_s, tight_beta);
        const TightnessResult result = tightness_search(params, tight_n, tight_band);
        for (const auto& note : result.infeasible) err << "infeasible " << note << '\n';
        char buf[64];
        for (const auto& inst : result.instances) {
            std::snprintf(buf, sizeof buf, " mu=%.12g radicand=%lld\n", inst.mu, inst.radicand);
            out << to_graph6(inst.graph) << " family=" << family_name(inst.family) << buf;
        }
        out << "instances=" << result.instances.size() << '\n';
        return 0;
    }

    return 2;  // unreachable with require_subcommand
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(std::move(args), in, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error at byte " << e.position() << ": " << e.what() << '\n';
        return 2;
    } catch (const CapExceededError& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return 2;
    } catch (const ConvergenceError& e) {
        err << "spectral non-convergence: " << e.what()
            << " (best estimate " << e.best_estimate().value << ")\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace specgraph::cli
