#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "specgraph/cli.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/graph_io.hpp"

using namespace specgraph;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("certify on inline graph6") {
    const auto r = run_cli({"certify", "--theorem", "s-conn", "--k", "4", "--s", "1", "H~~~~~~"});
    CHECK(r.code == 0);
    CHECK(r.out.find("status=Certified mu=0 mu_residual=") == 0);
    CHECK(r.out.find("radicand=20 theorem=s-conn k=4 s_or_beta=1 witness_family=- "
                     "witness_partition=-\n") != std::string::npos);
}

TEST_CASE("certify reads stdin by default") {
    const auto r = run_cli({"certify", "--theorem", "s-conn", "--k", "4", "--s", "1"}, "H~~~~~~\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("status=Certified") == 0);
}

TEST_CASE("certify batch mode emits one record per line") {
    const std::string two = to_graph6(complete_graph(9)) + "\n" + to_graph6(complete_graph(9)) + "\n";
    const auto r =
        run_cli({"certify", "--batch", "--theorem", "s-conn", "--k", "4", "--s", "1"}, two);
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("oracle measures and decisions") {
    const std::string uc = to_graph6(disjoint_union(complete_graph(5), complete_graph(5)));
    const auto r = run_cli({"oracle", "--property", "deficiency", uc});
    CHECK(r.code == 0);
    CHECK(r.out == "deficiency=2\n");

    const auto neg = run_cli({"oracle", "--property", "s-ham", "--s", "1", to_graph6(cycle_graph(6))});
    CHECK(neg.code == 1);  // negative verdict
    CHECK(neg.out.find("holds=false") != std::string::npos);
    CHECK(neg.out.find("deletion-set:") != std::string::npos);

    const auto pos = run_cli({"oracle", "--property", "hamiltonian", to_graph6(cycle_graph(6))});
    CHECK(pos.code == 0);
    CHECK(pos.out.find("holds=true") != std::string::npos);
}

TEST_CASE("closure subcommand on an edge list") {
    const auto r = run_cli({"closure", "--k", "3", "--output-format", "edgelist"},
                           "4 3\n0 1\n1 2\n2 3\n");
    CHECK(r.code == 0);
    CHECK(r.out == to_edge_list(complete_graph(4)));
}

TEST_CASE("closure emits graph6 by default and the CLI round-trips it") {
    const auto r = run_cli({"closure", "--k", "3"}, "4 3\n0 1\n1 2\n2 3\n");
    CHECK(r.code == 0);
    std::string line = r.out.substr(0, r.out.find('\n'));
    CHECK(from_graph6(line) == complete_graph(4));
}

TEST_CASE("spectrum subcommand") {
    const auto r = run_cli({"spectrum", "--complement", to_graph6(cycle_graph(6))});
    CHECK(r.code == 0);
    REQUIRE(r.out.find("mu=") == 0);
    const double mu = std::stod(r.out.substr(3));
    CHECK(std::fabs(mu - 3.0) < 1e-9);  // prism
    CHECK(r.out.find("iterations=") != std::string::npos);
}

TEST_CASE("family generate and test") {
    const auto gen = run_cli({"family-gen", "--family", "union-cliques", "--n", "10", "--k", "4"});
    CHECK(gen.code == 0);
    const std::string g6 = gen.out.substr(0, gen.out.find('\n'));
    CHECK(from_graph6(g6) == disjoint_union(complete_graph(5), complete_graph(5)));

    const auto test = run_cli({"family-test", "--family", "union-cliques", "--k", "4", g6});
    CHECK(test.code == 0);
    CHECK(test.out.find("member=true") == 0);

    const auto miss = run_cli({"family-test", "--family", "ep", "--k", "3", to_graph6(cycle_graph(7))});
    CHECK(miss.code == 0);
    CHECK(miss.out == "member=false\n");

    const auto infeasible = run_cli({"family-gen", "--family", "ec", "--n", "10", "--k", "4", "--s", "2", "--m", "1"});
    CHECK(infeasible.code == 2);
}

TEST_CASE("sweep subcommand") {
    const auto r = run_cli({"sweep", "--mode", "soundness", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("graphs=64") == 0);
    CHECK(r.out.find("violations=0") != std::string::npos);

    const auto equiv = run_cli({"sweep", "--mode", "closure-equiv", "--n", "4"});
    CHECK(equiv.code == 0);
    CHECK(equiv.out.find("mismatches=0") != std::string::npos);

    const auto spectralb = run_cli({"sweep", "--mode", "spectral-bound", "--n", "4"});
    CHECK(spectralb.code == 0);
    CHECK(spectralb.out.find("violations=0") != std::string::npos);

    const auto sampled =
        run_cli({"sweep", "--mode", "soundness", "--n", "8", "--count", "5", "--seed", "3"});
    CHECK(sampled.code == 0);
    CHECK(sampled.out.find("graphs=5") == 0);
}

TEST_CASE("tightness subcommand") {
    const auto r = run_cli({"tightness", "--theorem", "deficient", "--n", "10", "--k", "4",
                            "--beta", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("family=union-cliques") != std::string::npos);
    CHECK(r.out.find("radicand=25") != std::string::npos);
}

TEST_CASE("malformed graph6 exits 2 with a byte position") {
    const auto r = run_cli({"oracle", "--property", "deficiency"}, "H~~\x19~~~\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("parse error at byte 3") != std::string::npos);
}

TEST_CASE("cap overflow exits 2 naming the cap") {
    const auto r = run_cli({"oracle", "--property", "deficiency", to_graph6(empty_graph(19))});
    CHECK(r.code == 2);
    CHECK(r.err.find("cap exceeded") != std::string::npos);
    CHECK(r.err.find("deficiency exact solver") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"certify"}).code == 2);                       // missing required flags
    CHECK(run_cli({"certify", "--theorem", "bogus", "--k", "1"}).code == 2);
    CHECK(run_cli({"sweep", "--mode", "bogus"}).code == 2);
}

TEST_CASE("help exits 0") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
}
