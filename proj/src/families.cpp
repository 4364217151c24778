#include "specgraph/families.hpp"

#include <algorithm>
#include <bit>

namespace specgraph {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::EP: return "ep";
        case Family::EC: return "ec";
        case Family::ES: return "es";
        case Family::UnionCliques: return "union-cliques";
    }
    return "?";
}

Family family_from_name(std::string_view name) {
    if (name == "ep") return Family::EP;
    if (name == "ec") return Family::EC;
    if (name == "es") return Family::ES;
    if (name == "union-cliques") return Family::UnionCliques;
    throw std::invalid_argument("unknown family name: " + std::string(name));
}

Graph circulant_graph(int order, int degree) {
    if (order < 0 || degree < 0 || (order == 0 && degree > 0) || (order > 0 && degree >= order))
        throw std::invalid_argument("circulant_graph: infeasible degree for order");
    if (degree % 2 == 1 && order % 2 == 1)
        throw std::invalid_argument("circulant_graph: odd degree needs even order");
    Graph g(order);
    for (int v = 0; v < order; ++v) {
        for (int j = 1; j <= degree / 2; ++j) g.add_edge(v, (v + j) % order);
        if (degree % 2 == 1 && v < order / 2) g.add_edge(v, v + order / 2);
    }
    if (order > 0 && is_regular(g) != degree)
        throw std::logic_error("circulant_graph: construction not regular");
    return g;
}

Graph biregular_bipartite(int size_x, int size_y, int deg_x) {
    if (size_x < 1 || size_y < 1 || deg_x < 1 || deg_x > size_y)
        throw std::invalid_argument("biregular_bipartite: infeasible sizes");
    const long long handshake = static_cast<long long>(size_x) * deg_x;
    if (handshake % size_y != 0)
        throw std::invalid_argument("biregular_bipartite: no uniform Y degree exists");
    const int deg_y = static_cast<int>(handshake / size_y);
    if (deg_y > size_x)
        throw std::invalid_argument("biregular_bipartite: Y degree exceeds X side");
    Graph g(size_x + size_y);
    for (int i = 0; i < size_x; ++i)
        for (int j = 0; j < deg_x; ++j)
            g.add_edge(i, size_x + static_cast<int>((static_cast<long long>(i) * deg_x + j) % size_y));
    for (int y = 0; y < size_y; ++y)
        if (g.degree(size_x + y) != deg_y)
            throw std::invalid_argument("biregular_bipartite: cyclic rule left Y side nonuniform");
    return g;
}

namespace {

Graph graph_from_pair_mask(int order, std::uint64_t edge_mask) {
    Graph g(order);
    int bit = 0;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v, ++bit)
            if (bit < 64 && ((edge_mask >> bit) & 1)) g.add_edge(u, v);
    return g;
}

// Shared body of gen_ec / gen_es. deg_x and size_y differ between the two;
// join_size is s-1-m-t (EC) or s+1-m-t (ES).
Graph gen_bipartite_family(const char* what, int n, int k, int m, int t, int size_x, int size_y,
                           int deg_x, int deg_y, int join_size, const Graph* f,
                           std::uint64_t g2_edge_mask) {
    if (m < 0 || t < 0) throw std::invalid_argument(std::string(what) + ": need m, t >= 0");
    if (join_size < 0)
        throw std::invalid_argument(std::string(what) + ": join part size is negative");
    if (size_x < 1 || size_y < 1 || deg_x < 1 || deg_y < 1)
        throw std::invalid_argument(std::string(what) + ": degenerate bipartite shape");
    if (static_cast<long long>(size_x) * deg_x != static_cast<long long>(size_y) * deg_y)
        throw std::invalid_argument(std::string(what) + ": handshake count infeasible");
    (void)k;

    Graph bip = f ? *f : biregular_bipartite(size_x, size_y, deg_x);
    if (f) {
        // A supplied bipartite graph is validated against the intended shape:
        // X = first size_x vertices, Y the rest, all edges crossing.
        if (bip.order() != size_x + size_y)
            throw std::invalid_argument(std::string(what) + ": supplied graph has wrong order");
        for (int u = 0; u < size_x; ++u)
            for (int v = u + 1; v < size_x; ++v)
                if (bip.has_edge(u, v))
                    throw std::invalid_argument(std::string(what) + ": X side not independent");
        for (int u = size_x; u < size_x + size_y; ++u)
            for (int v = u + 1; v < size_x + size_y; ++v)
                if (bip.has_edge(u, v))
                    throw std::invalid_argument(std::string(what) + ": Y side not independent");
        for (int u = 0; u < size_x; ++u)
            if (bip.degree(u) != deg_x)
                throw std::invalid_argument(std::string(what) + ": X degree mismatch");
        for (int y = 0; y < size_y; ++y)
            if (bip.degree(size_x + y) != deg_y)
                throw std::invalid_argument(std::string(what) + ": Y degree mismatch");
    }
    Graph result = join(complement(bip), graph_from_pair_mask(join_size, g2_edge_mask));
    if (result.order() != n) throw std::logic_error(std::string(what) + ": order mismatch");
    return result;
}

}  // namespace

Graph gen_ep(int n, int k, int r, const Graph& regular_core, const Graph& g2) {
    if (r < 0 || r > k) throw std::invalid_argument("gen_ep: need 0 <= r <= k");
    if (regular_core.order() != n - k + r)
        throw std::invalid_argument("gen_ep: core must have n-k+r vertices");
    if (g2.order() != k - r) throw std::invalid_argument("gen_ep: g2 must have k-r vertices");
    if (is_regular(regular_core) != r)
        throw std::invalid_argument("gen_ep: core is not r-regular");
    return join(regular_core, g2);
}

Graph gen_ep(int n, int k, int r) {
    return gen_ep(n, k, r, circulant_graph(n - k + r, r), complete_graph(k - r));
}

Graph gen_ec(int n, int k, int s, int m, int t, const Graph& f, std::uint64_t g2_edge_mask) {
    return gen_bipartite_family("gen_ec", n, k, m, t, n - k - 1 + m, k - s + 2 + t, k - s + 2,
                                n - k - 1, s - 1 - m - t, &f, g2_edge_mask);
}

Graph gen_ec(int n, int k, int s, int m, int t) {
    return gen_bipartite_family("gen_ec", n, k, m, t, n - k - 1 + m, k - s + 2 + t, k - s + 2,
                                n - k - 1, s - 1 - m - t, nullptr, ~std::uint64_t{0});
}

Graph gen_es(int n, int k, int s, int m, int t, const Graph& f, std::uint64_t g2_edge_mask) {
    return gen_bipartite_family("gen_es", n, k, m, t, n - k - 1 + m, k - s + t, k - s, n - k - 1,
                                s + 1 - m - t, &f, g2_edge_mask);
}

Graph gen_es(int n, int k, int s, int m, int t) {
    return gen_bipartite_family("gen_es", n, k, m, t, n - k - 1 + m, k - s + t, k - s, n - k - 1,
                                s + 1 - m - t, nullptr, ~std::uint64_t{0});
}

Graph gen_union_cliques(int n, int k) {
    if (k < 0 || k > n - 1) throw std::invalid_argument("gen_union_cliques: need 0 <= k <= n-1");
    return disjoint_union(complete_graph(k + 1), complete_graph(n - k - 1));
}

namespace {

std::vector<int> mask_vertices(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Match a semi-regular-bipartite witness of the complement of the core
// against required side degrees, producing (m, t) offsets when consistent.
struct BipShape {
    int m;
    int t;
};

std::optional<BipShape> match_bipartite_shape(const BipartitionWitness& w, int want_deg_x,
                                              int want_deg_y, int base_size_x, int base_size_y) {
    for (int flip = 0; flip < 2; ++flip) {
        const auto& sx = flip ? w.side_y : w.side_x;
        const auto& sy = flip ? w.side_x : w.side_y;
        const int dx = flip ? w.deg_y : w.deg_x;
        const int dy = flip ? w.deg_x : w.deg_y;
        if (dx != want_deg_x || dy != want_deg_y) continue;
        const int m = static_cast<int>(sx.size()) - base_size_x;
        const int t = static_cast<int>(sy.size()) - base_size_y;
        if (m >= 0 && t >= 0) return BipShape{m, t};
    }
    return std::nullopt;
}

}  // namespace

std::optional<FamilyWitness> membership(const Graph& g, Family family,
                                        const TheoremParams& params, int cap) {
    const int n = g.order();
    if (n > cap) throw CapExceededError("family membership search", cap, n);
    const int k = params.k;

    if (family == Family::UnionCliques) {
        // G = K_{k+1} + K_{n-k-1}: component sizes must match and both sides
        // must induce cliques, with no cross edges (checked by componenthood).
        if (k < 0 || k > n - 1) return std::nullopt;
        const auto labels = component_labels(g);
        const int comps = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
        auto side_of = [&](int label) {
            std::vector<int> side;
            for (int v = 0; v < n; ++v)
                if (labels[v] == label) side.push_back(v);
            return side;
        };
        auto clique = [&](const std::vector<int>& side) {
            for (std::size_t i = 0; i < side.size(); ++i)
                for (std::size_t j = i + 1; j < side.size(); ++j)
                    if (!g.has_edge(side[i], side[j])) return false;
            return true;
        };
        if (n - k - 1 == 0) {
            if (comps == 1 && clique(side_of(0)))
                return FamilyWitness{Family::UnionCliques, side_of(0), {}, 0, 0, 0};
            return std::nullopt;
        }
        if (comps != 2) return std::nullopt;
        auto a = side_of(0), b = side_of(1);
        if (!clique(a) || !clique(b)) return std::nullopt;
        if (static_cast<int>(a.size()) == k + 1)
            return FamilyWitness{Family::UnionCliques, std::move(a), std::move(b), 0, 0, 0};
        if (static_cast<int>(b.size()) == k + 1)
            return FamilyWitness{Family::UnionCliques, std::move(b), std::move(a), 0, 0, 0};
        return std::nullopt;
    }

    // Candidate join parts: sets whose members are adjacent to all outside
    // vertices, scanned in ascending mask order.
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint32_t> adj(n, 0), nonadj(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_edge(u, v)) adj[u] |= 1u << v;
        nonadj[u] = full & ~adj[u] & ~(1u << u);
    }

    const int s = params.s;
    int max_join = 0;
    switch (family) {
        case Family::EP: max_join = k; break;
        case Family::EC: max_join = s - 1; break;
        case Family::ES: max_join = s + 1; break;
        case Family::UnionCliques: break;
    }
    if (max_join < 0) return std::nullopt;

    for (std::uint32_t jmask = 0; jmask <= full; ++jmask) {
        if (std::popcount(jmask) > max_join) continue;
        bool valid_join = true;
        for (std::uint32_t rest = jmask; rest && valid_join;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (nonadj[v] & ~jmask) valid_join = false;
        }
        if (!valid_join) continue;
        const std::uint32_t cmask = full & ~jmask;
        const int join_size = std::popcount(jmask);

        if (family == Family::EP) {
            const int r = k - join_size;
            bool regular = cmask != 0 || r == 0;  // the empty core is 0-regular only
            for (std::uint32_t rest = cmask; rest && regular;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (std::popcount(adj[v] & cmask) != r) regular = false;
            }
            if (!regular) continue;
            return FamilyWitness{Family::EP, mask_vertices(cmask), mask_vertices(jmask), r, 0, 0};
        }

        // EC / ES: the complement of the core must be semi-regular bipartite
        // with the theorem's side degrees.
        const auto core = mask_vertices(cmask);
        if (core.empty()) continue;
        const Graph b = complement(induced_subgraph(g, core));
        const auto srb = is_semiregular_bipartite(b);
        if (!srb) continue;
        const int want_deg_x = family == Family::EC ? k - s + 2 : k - s;
        const int want_deg_y = n - k - 1;
        const int base_y = family == Family::EC ? k - s + 2 : k - s;
        const auto shape = match_bipartite_shape(*srb, want_deg_x, want_deg_y, n - k - 1, base_y);
        if (!shape) continue;
        const int expect_join = (family == Family::EC ? s - 1 : s + 1) - shape->m - shape->t;
        if (expect_join != join_size) continue;
        return FamilyWitness{family, core, mask_vertices(jmask), shape->m + shape->t, shape->m,
                             shape->t};
    }
    return std::nullopt;
}

bool validate_family_witness(const Graph& g, const TheoremParams& params,
                             const FamilyWitness& w) {
    const int n = g.order();
    const int k = params.k;
    const int s = params.s;

    // The two parts must partition the vertex set.
    std::vector<char> part(n, 0);
    for (int v : w.core_part) {
        if (v < 0 || v >= n || part[v]) return false;
        part[v] = 1;
    }
    for (int v : w.join_part) {
        if (v < 0 || v >= n || part[v]) return false;
        part[v] = 2;
    }
    for (int v = 0; v < n; ++v)
        if (!part[v]) return false;

    if (w.family == Family::UnionCliques) {
        if (static_cast<int>(w.core_part.size()) != k + 1) return false;
        if (static_cast<int>(w.join_part.size()) != n - k - 1) return false;
        for (int u : w.core_part)
            for (int v : w.join_part)
                if (g.has_edge(u, v)) return false;
        auto clique = [&](const std::vector<int>& side) {
            for (std::size_t i = 0; i < side.size(); ++i)
                for (std::size_t j = i + 1; j < side.size(); ++j)
                    if (!g.has_edge(side[i], side[j])) return false;
            return true;
        };
        return clique(w.core_part) && clique(w.join_part);
    }

    // Join structure: every join vertex adjacent to every core vertex.
    for (int u : w.join_part)
        for (int v : w.core_part)
            if (!g.has_edge(u, v)) return false;

    const Graph core = induced_subgraph(g, w.core_part);
    if (w.family == Family::EP) {
        if (w.r < 0 || w.r > k) return false;
        if (static_cast<int>(w.core_part.size()) != n - k + w.r) return false;
        if (static_cast<int>(w.join_part.size()) != k - w.r) return false;
        if (core.order() == 0) return w.r == 0;
        return is_regular(core) == w.r;
    }

    // EC / ES bipartite shapes.
    if (w.m < 0 || w.t < 0 || w.r != w.m + w.t) return false;
    const int expect_join = (w.family == Family::EC ? s - 1 : s + 1) - w.m - w.t;
    if (expect_join < 0 || static_cast<int>(w.join_part.size()) != expect_join) return false;
    const auto srb = is_semiregular_bipartite(complement(core));
    if (!srb) return false;
    const int want_deg_x = w.family == Family::EC ? k - s + 2 : k - s;
    const int base_y = w.family == Family::EC ? k - s + 2 : k - s;
    const auto shape = match_bipartite_shape(*srb, want_deg_x, n - k - 1, n - k - 1, base_y);
    return shape && shape->m == w.m && shape->t == w.t;
}

}  // namespace specgraph
