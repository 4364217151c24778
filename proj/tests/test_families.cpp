#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "specgraph/families.hpp"
#include "specgraph/spectral.hpp"
#include "support/jacobi.hpp"

using namespace specgraph;

TEST_CASE("circulant cores") {
    CHECK(circulant_graph(5, 0) == empty_graph(5));
    CHECK(circulant_graph(6, 2) == cycle_graph(6));
    CHECK(is_regular(circulant_graph(8, 3)) == 3);
    CHECK(is_regular(circulant_graph(7, 4)) == 4);
    CHECK(circulant_graph(5, 4) == complete_graph(5));
    CHECK_THROWS_AS(circulant_graph(7, 3), std::invalid_argument);  // odd degree, odd order
    CHECK_THROWS_AS(circulant_graph(4, 4), std::invalid_argument);  // degree >= order
}

TEST_CASE("biregular bipartite construction") {
    const Graph g = biregular_bipartite(4, 6, 3);
    CHECK(g.order() == 10);
    for (int x = 0; x < 4; ++x) CHECK(g.degree(x) == 3);
    for (int y = 4; y < 10; ++y) CHECK(g.degree(y) == 2);
    const auto w = is_semiregular_bipartite(g);
    REQUIRE(w.has_value());
    CHECK_THROWS_AS(biregular_bipartite(3, 2, 1), std::invalid_argument);  // 3 not divisible by 2
    CHECK_THROWS_AS(biregular_bipartite(2, 3, 4), std::invalid_argument);  // degree above side
}

TEST_CASE("gen_ep constructs the join of a regular core with a clique part") {
    const Graph g = gen_ep(6, 2, 0, empty_graph(4), complete_graph(2));
    CHECK(g == join(empty_graph(4), complete_graph(2)));
    CHECK(min_degree(g) == 2);
    // complement is K_4 + O_2 with mu = 3 = sqrt((k-s+2)(n-k-1)) at s=1
    const double mu = spectral_radius(complement(g), SpectralOptions{}).value;
    CHECK(std::fabs(mu - 3.0) < 1e-9);

    const Graph h = gen_ep(7, 3, 0);  // default core O_4, default g2 K_3
    CHECK(h == join(empty_graph(4), complete_graph(3)));
    CHECK(min_degree(h) == 3);
}

TEST_CASE("gen_ep validates its inputs") {
    // C_4 is 2-regular, not 1-regular (and the order is off as well)
    CHECK_THROWS_AS(gen_ep(6, 2, 1, cycle_graph(4), complete_graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(gen_ep(6, 2, 1, cycle_graph(5), complete_graph(1)), std::invalid_argument);
    CHECK_THROWS_AS(gen_ep(6, 2, 3, empty_graph(7), complete_graph(0)), std::invalid_argument);
    CHECK_THROWS_AS(gen_ep(6, 2, 0, empty_graph(3), complete_graph(2)), std::invalid_argument);
}

TEST_CASE("every EP instance has minimum degree k") {
    for (int n = 5; n <= 9; ++n)
        for (int k = 1; 2 * k + 1 <= n; ++k)
            for (int r = 0; r <= k; ++r) {
                Graph g;
                try {
                    g = gen_ep(n, k, r);
                } catch (const std::invalid_argument&) {
                    continue;  // infeasible circulant (odd r, odd order)
                }
                CHECK(min_degree(g) == k);
            }
}

TEST_CASE("gen_ec default instance") {
    // n=9, k=4, s=1: f = K_{4,5}, join part empty -> complement(K_{4,5}) = K_4 + K_5
    const Graph g = gen_ec(9, 4, 1);
    CHECK(g == disjoint_union(complete_graph(4), complete_graph(5)));
    // boundary: mu(complement) = sqrt((k-s+2)(n-k-1)) = sqrt(20)
    const auto est = spectral_radius(complement(g), SpectralOptions{});
    CHECK(compare_to_bound(est, 20).verdict == BoundVerdict::Equal);
    CHECK(std::fabs(est.value - std::sqrt(20.0)) < 1e-9);
}

TEST_CASE("gen_ec rejects infeasible parameters") {
    CHECK_THROWS_AS(gen_ec(9, 4, 1, 1, 0), std::invalid_argument);  // join size s-1-m-t < 0
    CHECK_THROWS_AS(gen_ec(10, 4, 2, 1, 0), std::invalid_argument); // handshake infeasible
}

TEST_CASE("gen_es default instance") {
    // n=7, k=3, s=0: f = K_{3,3}, join part K_1 -> (K_3 + K_3) v K_1
    const Graph g = gen_es(7, 3, 0);
    const Graph expected = join(disjoint_union(complete_graph(3), complete_graph(3)), complete_graph(1));
    CHECK(g == expected);
    CHECK(min_degree(g) == 3);
    const auto est = spectral_radius(complement(g), SpectralOptions{});
    CHECK(std::fabs(est.value - 3.0) < 1e-9);
    CHECK(compare_to_bound(est, 9).verdict == BoundVerdict::Equal);
}

TEST_CASE("gen_es rejects infeasible parameters") {
    CHECK_THROWS_AS(gen_es(7, 3, 0, 1, 1), std::invalid_argument);  // join size s+1-m-t < 0
    CHECK_THROWS_AS(gen_es(8, 3, 1, 1, 0), std::invalid_argument);  // handshake infeasible
}

TEST_CASE("gen_union_cliques") {
    const Graph g = gen_union_cliques(10, 4);
    CHECK(g == disjoint_union(complete_graph(5), complete_graph(5)));
    const double mu = spectral_radius(complement(g), SpectralOptions{}).value;
    CHECK(std::fabs(mu - 5.0) < 1e-9);
    CHECK(std::fabs(testsupport::jacobi_spectral_radius(complement(g)) - 5.0) < 1e-8);

    CHECK(gen_union_cliques(3, 0) == disjoint_union(complete_graph(1), complete_graph(2)));
    const Graph h = gen_union_cliques(7, 2);
    CHECK(h == disjoint_union(complete_graph(3), complete_graph(4)));
    CHECK_FALSE(is_connected(h));
    CHECK_THROWS_AS(gen_union_cliques(5, 5), std::invalid_argument);
}

TEST_CASE("membership examples") {
    const Graph ep = join(empty_graph(4), complete_graph(2));
    const auto w = membership(ep, Family::EP, TheoremParams::s_connected(2, 1));
    REQUIRE(w.has_value());
    CHECK(w->r == 0);
    CHECK(w->core_part == std::vector<int>{0, 1, 2, 3});
    CHECK(w->join_part == std::vector<int>{4, 5});
    CHECK(validate_family_witness(ep, TheoremParams::s_connected(2, 1), *w));

    const Graph uc = disjoint_union(complete_graph(5), complete_graph(5));
    const auto wu = membership(uc, Family::UnionCliques, TheoremParams::deficient(4, 0));
    REQUIRE(wu.has_value());
    CHECK(wu->core_part.size() == 5);
    CHECK(validate_family_witness(uc, TheoremParams::deficient(4, 0), *wu));

    // a k-regular graph is itself an EP instance with r = k and no join part
    const auto wc = membership(cycle_graph(7), Family::EP, TheoremParams::s_connected(2, 1));
    REQUIRE(wc.has_value());
    CHECK(wc->r == 2);
    CHECK(wc->join_part.empty());
    // whereas at k=3 the cycle is neither 3-regular nor joined over a
    // dominating part
    CHECK_FALSE(membership(cycle_graph(7), Family::EP, TheoremParams::s_connected(3, 1)).has_value());
    CHECK_FALSE(
        membership(path_graph(4), Family::EP, TheoremParams::s_connected(1, 1)).has_value());
}

TEST_CASE("membership cap is a distinct outcome") {
    CHECK_THROWS_AS(membership(empty_graph(17), Family::EP, TheoremParams::s_connected(2, 1)),
                    CapExceededError);
    // an explicit higher cap decides it
    CHECK_FALSE(
        membership(empty_graph(17), Family::EP, TheoremParams::s_connected(2, 1), 20).has_value());
}

TEST_CASE("generator outputs re-enter membership (round trip)") {
    struct EpCase { int n, k, r; };
    for (const auto& c : {EpCase{6, 2, 0}, EpCase{7, 3, 1}, EpCase{8, 3, 0}, EpCase{9, 4, 4}}) {
        Graph g;
        try {
            g = gen_ep(c.n, c.k, c.r);
        } catch (const std::invalid_argument&) {
            continue;
        }
        const auto w = membership(g, Family::EP, TheoremParams::s_connected(c.k, 1));
        REQUIRE(w.has_value());
        CHECK(validate_family_witness(g, TheoremParams::s_connected(c.k, 1), *w));
    }

    const Graph ec = gen_ec(9, 4, 1);
    const auto wec = membership(ec, Family::EC, TheoremParams::s_connected(4, 1));
    REQUIRE(wec.has_value());
    CHECK(wec->m == 0);
    CHECK(wec->t == 0);
    CHECK(validate_family_witness(ec, TheoremParams::s_connected(4, 1), *wec));

    const Graph es = gen_es(7, 3, 0);
    const auto wes = membership(es, Family::ES, TheoremParams::s_hamiltonian(3, 0));
    REQUIRE(wes.has_value());
    CHECK(validate_family_witness(es, TheoremParams::s_hamiltonian(3, 0), *wes));

    const Graph uc = gen_union_cliques(8, 3);
    const auto wuc = membership(uc, Family::UnionCliques, TheoremParams::deficient(3, 0));
    REQUIRE(wuc.has_value());
    CHECK(validate_family_witness(uc, TheoremParams::deficient(3, 0), *wuc));
}

TEST_CASE("witness validation rejects broken witnesses") {
    const Graph ep = join(empty_graph(4), complete_graph(2));
    const TheoremParams params = TheoremParams::s_connected(2, 1);
    auto w = *membership(ep, Family::EP, params);
    FamilyWitness bad = w;
    bad.r = 1;
    CHECK_FALSE(validate_family_witness(ep, params, bad));
    bad = w;
    bad.join_part.pop_back();
    CHECK_FALSE(validate_family_witness(ep, params, bad));
    bad = w;
    std::swap(bad.core_part, bad.join_part);
    CHECK_FALSE(validate_family_witness(ep, params, bad));
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::EP, Family::EC, Family::ES, Family::UnionCliques})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
}
