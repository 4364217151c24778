// families.hpp — the exceptional families attaining equality in the spectral
// bounds: join-of-regular (EP), join-of-complemented-biregular-bipartite
// (EC, ES), and the two-clique union.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/theorem.hpp"

namespace specgraph {

enum class Family { EP, EC, ES, UnionCliques };

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

/// Evidence of family membership: the partition (core, join) plus the family
/// parameters. For EP, r is the core regularity; for EC/ES, r = m + t where
/// m and t are the bipartite side-size offsets; UnionCliques uses core/join
/// as the two cliques and no parameters.
struct FamilyWitness {
    Family family = Family::EP;
    std::vector<int> core_part;
    std::vector<int> join_part;
    int r = 0;
    int m = 0;
    int t = 0;
};

inline constexpr int kMembershipCap = 16;

/// Canonical degree-regular graph: circulant with connection offsets
/// {1..degree/2} plus the antipodal vertex when degree is odd (then the order
/// must be even). Throws on infeasible (degree, order).
Graph circulant_graph(int order, int degree);

/// Biregular bipartite instance by the cyclic rule: X vertex i is joined to Y
/// indices (i*deg_x + j) mod size_y for j < deg_x; Y vertices follow X in the
/// numbering. Validated after construction; throws when the Y side does not
/// come out uniform or the degree arithmetic is infeasible.
Graph biregular_bipartite(int size_x, int size_y, int deg_x);

// G = regular_core v g2, with regular_core r-regular of order n-k+r and g2 an
// arbitrary graph on k-r vertices. The no-core overload uses the canonical
// circulant core and a complete g2.
Graph gen_ep(int n, int k, int r, const Graph& regular_core, const Graph& g2);
Graph gen_ep(int n, int k, int r);

// G = complement(f) v g2 where f is biregular bipartite with |X| = n-k-1+m,
// |Y| = k-s+2+t, X-degree k-s+2, Y-degree n-k-1, and g2 has s-1-m-t vertices
// with edges selected by a bitmask over the lexicographic pairs of K_{s-1-m-t}
// (all bits set = complete).
Graph gen_ec(int n, int k, int s, int m, int t, const Graph& f, std::uint64_t g2_edge_mask);
Graph gen_ec(int n, int k, int s, int m = 0, int t = 0);

// Same shape with X-degree k-s, |Y| = k-s+t, and s+1-m-t join vertices.
Graph gen_es(int n, int k, int s, int m, int t, const Graph& f, std::uint64_t g2_edge_mask);
Graph gen_es(int n, int k, int s, int m = 0, int t = 0);

/// Disjoint union K_{k+1} + K_{n-k-1}; its complement is K_{k+1,n-k-1}.
Graph gen_union_cliques(int n, int k);

/// Exhaustive membership decision (all candidate join parts are vertex sets
/// adjacent to everything outside them). Returns the first witness in
/// canonical subset order, or nullopt. Throws CapExceededError beyond `cap`
/// vertices — distinctly from a negative answer.
std::optional<FamilyWitness> membership(const Graph& g, Family family,
                                        const TheoremParams& params, int cap = kMembershipCap);

/// Direct structural re-check of a witness against the family invariants.
bool validate_family_witness(const Graph& g, const TheoremParams& params,
                             const FamilyWitness& witness);

}  // namespace specgraph
