#include "specgraph/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

namespace specgraph {

namespace {

// Mask-based view for the exponential solvers (n <= 31).
struct SmallGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;
};

SmallGraph to_small(const Graph& g) {
    SmallGraph s;
    s.n = g.order();
    s.adj.assign(s.n, 0);
    for (int u = 0; u < s.n; ++u)
        for (int v = 0; v < s.n; ++v)
            if (u != v && g.has_edge(u, v)) s.adj[u] |= 1u << v;
    return s;
}

void require_cap(const char* what, int n) {
    if (n > kExactSolverCap) throw CapExceededError(what, kExactSolverCap, n);
}

bool connected_within(const SmallGraph& g, std::uint32_t mask) {
    if (mask == 0) return true;
    std::uint32_t seen = mask & (~mask + 1);  // lowest bit
    std::uint32_t frontier = seen;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t nbrs = g.adj[v] & mask & ~seen;
        seen |= nbrs;
        frontier |= nbrs;
    }
    return seen == mask;
}

std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// --- unit-capacity max flow -------------------------------------------------

struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int nodes) : adj(nodes) {}

    void add_arc(int u, int v, int cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    // Undirected unit edge: both directions share residual slots.
    void add_undirected_unit(int u, int v) {
        adj[u].push_back({v, 1, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 1, static_cast<int>(adj[u].size()) - 1});
    }

    int max_flow(int s, int t) {
        int flow = 0;
        const int n = static_cast<int>(adj.size());
        std::vector<int> prev_node(n), prev_arc(n);
        while (true) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            std::deque<int> queue{s};
            prev_node[s] = s;
            while (!queue.empty() && prev_node[t] == -1) {
                int u = queue.front();
                queue.pop_front();
                for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
                    const Arc& a = adj[u][i];
                    if (a.cap > 0 && prev_node[a.to] == -1) {
                        prev_node[a.to] = u;
                        prev_arc[a.to] = i;
                        queue.push_back(a.to);
                    }
                }
            }
            if (prev_node[t] == -1) return flow;
            int bottleneck = std::numeric_limits<int>::max();
            for (int v = t; v != s; v = prev_node[v])
                bottleneck = std::min(bottleneck, adj[prev_node[v]][prev_arc[v]].cap);
            for (int v = t; v != s; v = prev_node[v]) {
                Arc& a = adj[prev_node[v]][prev_arc[v]];
                a.cap -= bottleneck;
                adj[a.to][a.rev].cap += bottleneck;
            }
            flow += bottleneck;
        }
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(adj.size(), 0);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const Arc& a : adj[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    queue.push_back(a.to);
                }
        }
        return seen;
    }
};

// Vertex-split flow between nonadjacent s, t; returns (value, min vertex cut).
std::pair<int, std::vector<int>> vertex_flow_cut(const Graph& g, int s, int t) {
    const int n = g.order();
    const int big = n + 1;
    FlowNet net(2 * n);
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < n; ++v) net.add_arc(in(v), out(v), (v == s || v == t) ? big : 1);
    for (const auto& [u, v] : g.edges()) {
        net.add_arc(out(u), in(v), big);
        net.add_arc(out(v), in(u), big);
    }
    int value = net.max_flow(out(s), in(t));
    auto seen = net.residual_reachable(out(s));
    std::vector<int> cut;
    for (int v = 0; v < n; ++v)
        if (seen[in(v)] && !seen[out(v)]) cut.push_back(v);
    return {value, cut};
}

// Edge flow between s, t; returns (value, min edge cut).
std::pair<int, std::vector<Edge>> edge_flow_cut(const Graph& g, int s, int t) {
    FlowNet net(g.order());
    for (const auto& [u, v] : g.edges()) net.add_undirected_unit(u, v);
    int value = net.max_flow(s, t);
    auto seen = net.residual_reachable(s);
    std::vector<Edge> cut;
    for (const auto& [u, v] : g.edges())
        if (seen[u] != seen[v]) cut.emplace_back(u, v);
    return {value, cut};
}

// Exhaustive route: smallest vertex set whose removal disconnects, preferring
// canonical (size, then subset rank) order. Assumes g is connected and not
// complete.
std::pair<int, std::vector<int>> vertex_cut_enumerate(const Graph& g) {
    const SmallGraph sg = to_small(g);
    const int n = sg.n;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    const int limit = std::min(min_degree(g), n - 2);
    for (int c = 1; c <= limit; ++c) {
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != c) continue;
            if (!connected_within(sg, full & ~mask))
                return {c, mask_to_vertices(mask)};
        }
    }
    throw std::logic_error("vertex_cut_enumerate: no cut found below min degree");
}

std::pair<int, std::vector<int>> vertex_cut_flow(const Graph& g) {
    const int n = g.order();
    int best = n;  // above any possible cut
    std::vector<int> best_cut;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            auto [value, cut] = vertex_flow_cut(g, u, v);
            if (value < best) {
                best = value;
                best_cut = std::move(cut);
            }
        }
    return {best, best_cut};
}

bool is_complete(const Graph& g) {
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n - 1) return false;
    return true;
}

// kappa plus a minimum cut (empty when complete).
std::pair<int, std::vector<int>> vertex_connectivity_with_cut(const Graph& g, bool force_flow) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("vertex_connectivity: need n >= 1");
    if (is_complete(g)) return {n - 1, {}};
    if (!is_connected(g)) return {0, {}};
    if (!force_flow && n <= kCutEnumerationLimit) return vertex_cut_enumerate(g);
    return vertex_cut_flow(g);
}

std::pair<int, std::vector<Edge>> edge_cut_enumerate(const Graph& g) {
    const SmallGraph sg = to_small(g);
    const int n = sg.n;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    int best = std::numeric_limits<int>::max();
    std::uint32_t best_side = 0;
    for (std::uint32_t side = 1; side < full; side += 2) {  // keep vertex 0 on this side
        int cut = 0;
        for (std::uint32_t rest = side; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cut += std::popcount(sg.adj[v] & ~side);
        }
        if (cut < best) {
            best = cut;
            best_side = side;
        }
    }
    std::vector<Edge> cut_edges;
    for (const auto& [u, v] : g.edges())
        if (((best_side >> u) & 1) != ((best_side >> v) & 1)) cut_edges.emplace_back(u, v);
    return {best, cut_edges};
}

std::pair<int, std::vector<Edge>> edge_connectivity_with_cut(const Graph& g, bool force_flow) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("edge_connectivity: need n >= 2");
    if (!is_connected(g)) return {0, {}};
    if (!force_flow && n <= kCutEnumerationLimit) return edge_cut_enumerate(g);
    int best = std::numeric_limits<int>::max();
    std::vector<Edge> best_cut;
    for (int t = 1; t < n; ++t) {
        auto [value, cut] = edge_flow_cut(g, 0, t);
        if (value < best) {
            best = value;
            best_cut = std::move(cut);
        }
    }
    return {best, best_cut};
}

// --- maximum matching (subset DP) -------------------------------------------

struct MatchingResult {
    int size = 0;
    std::vector<Edge> edges;
    std::vector<int> unmatched;
};

MatchingResult maximum_matching(const Graph& g) {
    require_cap("deficiency exact solver", g.order());
    const SmallGraph sg = to_small(g);
    const int n = sg.n;
    MatchingResult result;
    if (n == 0) return result;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::int8_t> f(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int v = std::countr_zero(mask);
        std::int8_t best = f[mask & (mask - 1)];  // leave v unmatched
        std::uint32_t partners = sg.adj[v] & mask;
        while (partners) {
            const int u = std::countr_zero(partners);
            partners &= partners - 1;
            best = std::max<std::int8_t>(best, 1 + f[mask & ~(1u << v) & ~(1u << u)]);
        }
        f[mask] = best;
    }
    result.size = f[full];
    std::uint32_t mask = full;
    while (mask) {
        const int v = std::countr_zero(mask);
        if (f[mask] == f[mask & (mask - 1)]) {
            result.unmatched.push_back(v);
            mask &= mask - 1;
            continue;
        }
        std::uint32_t partners = sg.adj[v] & mask;
        while (partners) {
            const int u = std::countr_zero(partners);
            partners &= partners - 1;
            if (f[mask] == 1 + f[mask & ~(1u << v) & ~(1u << u)]) {
                result.edges.emplace_back(v, u);
                mask &= ~(1u << v) & ~(1u << u);
                break;
            }
        }
    }
    return result;
}

// --- minimum path cover (subset DP) ------------------------------------------

struct PathCoverResult {
    int count = 0;
    std::vector<std::vector<int>> paths;
};

PathCoverResult minimum_path_cover_impl(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("min_path_cover: need n >= 1");
    require_cap("path cover exact solver", g.order());
    const SmallGraph sg = to_small(g);
    const int n = sg.n;
    const std::uint32_t full = (1u << n) - 1;

    // reach[S] = endpoints v such that S is coverable by one path ending at v.
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if ((mask & (mask - 1)) == 0) {
            reach[mask] = mask;
            continue;
        }
        std::uint32_t rest = mask;
        std::uint32_t r = 0;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (reach[mask & ~(1u << v)] & sg.adj[v]) r |= 1u << v;
        }
        reach[mask] = r;
    }

    std::vector<std::int8_t> dp(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> choice(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t pivot = mask & (~mask + 1);
        std::int8_t best = std::numeric_limits<std::int8_t>::max();
        std::uint32_t best_part = 0;
        for (std::uint32_t part = mask; part; part = (part - 1) & mask) {
            if (!(part & pivot) || reach[part] == 0) continue;
            const std::int8_t cand = static_cast<std::int8_t>(1 + dp[mask & ~part]);
            if (cand < best) {
                best = cand;
                best_part = part;
            }
        }
        dp[mask] = best;
        choice[mask] = best_part;
    }

    PathCoverResult result;
    result.count = dp[full];
    std::uint32_t mask = full;
    while (mask) {
        const std::uint32_t part = choice[mask];
        // Reconstruct one path through `part`, walking reach backwards.
        std::vector<int> path;
        std::uint32_t left = part;
        int v = std::countr_zero(reach[part]);
        path.push_back(v);
        left &= ~(1u << v);
        while (left) {
            const std::uint32_t prev = reach[left] & sg.adj[v];
            v = std::countr_zero(prev);
            path.push_back(v);
            left &= ~(1u << v);
        }
        result.paths.push_back(std::move(path));
        mask &= ~part;
    }
    std::reverse(result.paths.begin(), result.paths.end());
    return result;
}

// --- hamiltonian cycle search -------------------------------------------------

struct HamSearch {
    const SmallGraph& g;
    std::uint32_t full;
    std::vector<std::uint32_t> fadj;  // unused forced edges, symmetric
    std::vector<int> path;
    std::uint32_t visited = 0;

    explicit HamSearch(const SmallGraph& graph) : g(graph) {
        full = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
        fadj.assign(g.n, 0);
    }

    // Every unvisited vertex needs two usable cycle slots among the unvisited
    // set, the current vertex, and the start; and its unused forced edges must
    // stay reachable. A cheap necessary condition checked at every node.
    bool feasible(int cur) const {
        const std::uint32_t avail = (full & ~visited) | (1u << cur) | 1u;
        std::uint32_t rest = full & ~visited;
        while (rest) {
            const int w = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(g.adj[w] & avail) < 2) return false;
            if (fadj[w] & ~avail) return false;
        }
        return true;
    }

    bool extend(int cur, int count) {
        if (count == g.n) {
            if (fadj[cur] == 1u && fadj[0] == (1u << cur)) return true;  // forced closing edge
            return fadj[cur] == 0 && fadj[0] == 0 && ((g.adj[cur] >> 0) & 1);
        }
        if (!feasible(cur)) return false;
        std::uint32_t cands =
            fadj[cur] ? (fadj[cur] & ~visited) : (g.adj[cur] & ~visited);
        while (cands) {
            const int w = std::countr_zero(cands);
            cands &= cands - 1;
            const bool forced = (fadj[cur] >> w) & 1;
            if (!forced && std::popcount(fadj[w]) == 2) continue;  // both slots pre-committed
            visited |= 1u << w;
            if (forced) {
                fadj[cur] &= ~(1u << w);
                fadj[w] &= ~(1u << cur);
            }
            path.push_back(w);
            if (extend(w, count + 1)) return true;
            path.pop_back();
            if (forced) {
                fadj[cur] |= 1u << w;
                fadj[w] |= 1u << cur;
            }
            visited &= ~(1u << w);
        }
        return false;
    }
};

std::optional<std::vector<int>> ham_search(const SmallGraph& g, std::span<const Edge> required) {
    if (g.n < 3) return std::nullopt;
    for (int v = 0; v < g.n; ++v)
        if (std::popcount(g.adj[v]) < 2) return std::nullopt;
    HamSearch search(g);
    if (!connected_within(g, search.full)) return std::nullopt;
    for (const auto& [a, b] : required) {
        search.fadj[a] |= 1u << b;
        search.fadj[b] |= 1u << a;
    }
    for (int v = 0; v < g.n; ++v)
        if (std::popcount(search.fadj[v]) > 2) return std::nullopt;
    search.visited = 1u;
    search.path.push_back(0);
    if (search.extend(0, 1)) return search.path;
    return std::nullopt;
}

SmallGraph induced_small(const SmallGraph& g, std::uint32_t keep) {
    SmallGraph h;
    h.n = std::popcount(keep);
    h.adj.assign(h.n, 0);
    std::array<int, 32> newindex{};
    int idx = 0;
    for (std::uint32_t rest = keep; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        newindex[v] = idx++;
    }
    for (std::uint32_t rest = keep; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint32_t nbrs = g.adj[v] & keep;
        while (nbrs) {
            const int w = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            h.adj[newindex[v]] |= 1u << newindex[w];
        }
    }
    return h;
}

bool forest_has_cycle(std::span<const Edge> edges, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : edges) {
        const int ru = find(u), rv = find(v);
        if (ru == rv) return true;
        parent[ru] = rv;
    }
    return false;
}

bool valid_linear_forest(const Graph& g, std::span<const Edge> edges) {
    std::vector<int> deg(g.order(), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
        if (!g.has_edge(u, v)) return false;
        if (++deg[u] > 2 || ++deg[v] > 2) return false;
    }
    return !forest_has_cycle(edges, g.order());
}

}  // namespace

// --- public connectivity ------------------------------------------------------

int vertex_connectivity(const Graph& g) { return vertex_connectivity_with_cut(g, false).first; }
int vertex_connectivity_flow(const Graph& g) { return vertex_connectivity_with_cut(g, true).first; }
int edge_connectivity(const Graph& g) { return edge_connectivity_with_cut(g, false).first; }
int edge_connectivity_flow(const Graph& g) { return edge_connectivity_with_cut(g, true).first; }

OracleVerdict is_s_connected(const Graph& g, int s) {
    if (g.order() < 1) throw std::invalid_argument("is_s_connected: need n >= 1");
    if (s < 0) throw std::invalid_argument("is_s_connected: need s >= 0");
    if (g.order() <= s) return {false, TooFewVerticesWitness{}};
    if (s == 0) return {true, std::monostate{}};
    auto [kappa, cut] = vertex_connectivity_with_cut(g, false);
    if (kappa >= s) return {true, std::monostate{}};
    return {false, VertexCutWitness{std::move(cut)}};
}

OracleVerdict is_s_edge_connected(const Graph& g, int s) {
    if (g.order() < 2) throw std::invalid_argument("is_s_edge_connected: need n >= 2");
    if (s < 0) throw std::invalid_argument("is_s_edge_connected: need s >= 0");
    if (s == 0) return {true, std::monostate{}};
    auto [lambda, cut] = edge_connectivity_with_cut(g, false);
    if (lambda >= s) return {true, std::monostate{}};
    return {false, EdgeCutWitness{std::move(cut)}};
}

// --- public matching ------------------------------------------------------------

int deficiency(const Graph& g) {
    return g.order() - 2 * maximum_matching(g).size;
}

OracleVerdict is_beta_deficient(const Graph& g, int beta) {
    if (beta < 0) throw std::invalid_argument("is_beta_deficient: need beta >= 0");
    MatchingResult m = maximum_matching(g);
    const int def = g.order() - 2 * m.size;
    return {def <= beta, MatchingWitness{std::move(m.edges), std::move(m.unmatched)}};
}

// --- public path cover ------------------------------------------------------------

int min_path_cover(const Graph& g) { return minimum_path_cover_impl(g).count; }

OracleVerdict is_s_path_coverable(const Graph& g, int s) {
    if (s < 0) throw std::invalid_argument("is_s_path_coverable: need s >= 0");
    PathCoverResult cover = minimum_path_cover_impl(g);
    return {cover.count <= s, PathCoverWitness{std::move(cover.paths)}};
}

// --- public hamiltonicity -----------------------------------------------------------

OracleVerdict is_hamiltonian(const Graph& g) {
    require_cap("hamiltonicity exact solver", g.order());
    auto cycle = ham_search(to_small(g), {});
    if (cycle) return {true, HamCycleWitness{std::move(*cycle)}};
    return {false, std::monostate{}};
}

OracleVerdict is_s_hamiltonian(const Graph& g, int s) {
    if (s < 0) throw std::invalid_argument("is_s_hamiltonian: need s >= 0");
    require_cap("hamiltonicity exact solver", g.order());
    if (is_complete(g)) {
        // Every induced subgraph of K_n on >= 3 vertices is Hamiltonian, so
        // the first failing deletion set has max(0, n-2) vertices.
        if (g.order() - s >= 3) return {true, std::monostate{}};
        std::vector<int> x(std::max(0, g.order() - 2));
        std::iota(x.begin(), x.end(), 0);
        return {false, DeletionSetWitness{std::move(x)}};
    }
    const SmallGraph sg = to_small(g);
    const int n = sg.n;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (int size = 0; size <= std::min(s, n); ++size) {
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (std::popcount(mask) != size) continue;
            if (!ham_search(induced_small(sg, full & ~mask), {}))
                return {false, DeletionSetWitness{mask_to_vertices(mask)}};
        }
    }
    return {true, std::monostate{}};
}

OracleVerdict is_s_edge_hamiltonian(const Graph& g, int s) {
    return is_s_edge_hamiltonian_within(g, g, s);
}

OracleVerdict is_s_edge_hamiltonian_within(const Graph& g, const Graph& host, int s) {
    if (s < 0) throw std::invalid_argument("is_s_edge_hamiltonian: need s >= 0");
    if (s > kEdgeHamForestCap)
        throw CapExceededError("edge-hamiltonian forest cap", kEdgeHamForestCap, s);
    require_cap("hamiltonicity exact solver", g.order());
    if (host.order() != g.order())
        throw std::invalid_argument("is_s_edge_hamiltonian_within: order mismatch");
    if (&host != &g)
        for (const auto& [u, v] : g.edges())
            if (!host.has_edge(u, v))
                throw std::invalid_argument("is_s_edge_hamiltonian_within: host must contain g");
    // In K_n (n >= 3) every linear forest closes into a Hamiltonian cycle.
    if (host.order() >= 3 && is_complete(host)) return {true, std::monostate{}};
    const SmallGraph sg = to_small(host);
    const auto all_edges = g.edges();
    const int m = static_cast<int>(all_edges.size());

    // Pool of host Hamiltonian cycles already found, as edge-index masks over
    // g's edges (host-only edges carry no bit); a forest contained in a
    // pooled cycle is extendable without another search.
    const bool pool_enabled = m <= 64;
    std::vector<std::uint64_t> pool;
    std::vector<std::vector<int>> edge_index(g.order(), std::vector<int>(g.order(), -1));
    if (pool_enabled)
        for (int e = 0; e < m; ++e) {
            edge_index[all_edges[e].first][all_edges[e].second] = e;
            edge_index[all_edges[e].second][all_edges[e].first] = e;
        }

    std::vector<Edge> forest;
    std::vector<int> deg(g.order(), 0);

    auto extendable = [&](std::uint64_t forest_mask) -> bool {
        if (pool_enabled)
            for (auto it = pool.rbegin(); it != pool.rend(); ++it)
                if ((forest_mask & ~*it) == 0) return true;
        auto cycle = ham_search(sg, forest);
        if (!cycle) return false;
        if (pool_enabled) {
            std::uint64_t cmask = 0;
            for (std::size_t i = 0; i < cycle->size(); ++i) {
                const int u = (*cycle)[i];
                const int v = (*cycle)[(i + 1) % cycle->size()];
                if (edge_index[u][v] >= 0) cmask |= std::uint64_t{1} << edge_index[u][v];
            }
            pool.push_back(cmask);
        }
        return true;
    };

    // DFS over forests in lexicographic edge-index order; the first
    // non-extendable forest (checked at every prefix, the empty forest
    // included) is the witness.
    std::optional<std::vector<Edge>> failure;
    auto rec = [&](auto&& self, int start, std::uint64_t forest_mask) -> bool {
        if (!extendable(forest_mask)) {
            failure = forest;
            return false;
        }
        if (static_cast<int>(forest.size()) == s) return true;
        for (int e = start; e < m; ++e) {
            const auto& [u, v] = all_edges[e];
            if (deg[u] >= 2 || deg[v] >= 2) continue;
            forest.emplace_back(u, v);
            if (forest_has_cycle(forest, g.order())) {
                forest.pop_back();
                continue;
            }
            ++deg[u];
            ++deg[v];
            const bool ok = self(self, e + 1, forest_mask | (pool_enabled ? std::uint64_t{1} << e : 0));
            --deg[u];
            --deg[v];
            forest.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    if (rec(rec, 0, 0)) return {true, std::monostate{}};
    return {false, LinearForestWitness{std::move(*failure)}};
}

std::optional<std::vector<int>> hamiltonian_cycle_through(const Graph& g,
                                                          std::span<const Edge> required) {
    require_cap("hamiltonicity exact solver", g.order());
    if (!valid_linear_forest(g, required))
        throw std::invalid_argument("hamiltonian_cycle_through: required edges are not a linear forest of g");
    std::vector<Edge> req(required.begin(), required.end());
    return ham_search(to_small(g), req);
}

// --- witness re-validation -----------------------------------------------------------

namespace {

bool vertices_valid(const Graph& g, std::span<const int> verts) {
    std::vector<char> seen(g.order(), 0);
    for (int v : verts) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool removal_disconnects(const Graph& g, std::span<const int> cut) {
    std::vector<int> keep;
    std::vector<char> removed(g.order(), 0);
    for (int v : cut) removed[v] = 1;
    for (int v = 0; v < g.order(); ++v)
        if (!removed[v]) keep.push_back(v);
    if (keep.size() < 2) return false;
    return component_count(induced_subgraph(g, keep)) >= 2;
}

bool matching_valid(const Graph& g, const MatchingWitness& w) {
    std::vector<char> used(g.order(), 0);
    for (const auto& [u, v] : w.matching) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) return false;
        if (!g.has_edge(u, v) || used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    std::vector<char> claimed(g.order(), 0);
    for (int v : w.unmatched) {
        if (v < 0 || v >= g.order() || claimed[v]) return false;
        claimed[v] = 1;
    }
    for (int v = 0; v < g.order(); ++v)
        if (static_cast<bool>(used[v]) == static_cast<bool>(claimed[v])) return false;
    return true;
}

// Exhaustive search for an alternating augmenting path (path-local visited
// set, so odd cycles are handled correctly; exponential, desk scale only).
bool augmenting_path_from(const Graph& g, const std::vector<int>& mate, int v,
                          std::vector<char>& visited) {
    for (int w = 0; w < g.order(); ++w) {
        if (visited[w] || !g.has_edge(v, w)) continue;
        if (mate[w] == -1) return true;  // exposed endpoint: augmenting path found
        if (visited[mate[w]]) continue;
        visited[w] = 1;
        visited[mate[w]] = 1;
        if (augmenting_path_from(g, mate, mate[w], visited)) return true;
        visited[w] = 0;
        visited[mate[w]] = 0;
    }
    return false;
}

bool matching_is_maximum(const Graph& g, const MatchingWitness& w) {
    std::vector<int> mate(g.order(), -1);
    for (const auto& [u, v] : w.matching) {
        mate[u] = v;
        mate[v] = u;
    }
    for (int r = 0; r < g.order(); ++r) {
        if (mate[r] != -1) continue;
        std::vector<char> visited(g.order(), 0);
        visited[r] = 1;
        if (augmenting_path_from(g, mate, r, visited)) return false;
    }
    return true;
}

bool path_cover_valid(const Graph& g, const PathCoverWitness& w) {
    std::vector<char> seen(g.order(), 0);
    int covered = 0;
    for (const auto& path : w.paths) {
        if (path.empty()) return false;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const int v = path[i];
            if (v < 0 || v >= g.order() || seen[v]) return false;
            seen[v] = 1;
            ++covered;
            if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
        }
    }
    return covered == g.order();
}

bool ham_cycle_valid(const Graph& g, const HamCycleWitness& w) {
    const int n = g.order();
    if (n < 3 || static_cast<int>(w.order.size()) != n) return false;
    if (!vertices_valid(g, w.order)) return false;
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(w.order[i], w.order[(i + 1) % n])) return false;
    return true;
}

}  // namespace

bool revalidate_witness(const Graph& g, Property property, int parameter,
                        const OracleVerdict& verdict) {
    switch (property) {
        case Property::SConnected: {
            if (verdict.holds) return std::holds_alternative<std::monostate>(verdict.witness);
            if (const auto* few = std::get_if<TooFewVerticesWitness>(&verdict.witness)) {
                (void)few;
                return g.order() <= parameter;
            }
            const auto* cut = std::get_if<VertexCutWitness>(&verdict.witness);
            if (!cut || !vertices_valid(g, cut->vertices)) return false;
            return static_cast<int>(cut->vertices.size()) < parameter &&
                   removal_disconnects(g, cut->vertices);
        }
        case Property::SEdgeConnected: {
            if (verdict.holds) return std::holds_alternative<std::monostate>(verdict.witness);
            const auto* cut = std::get_if<EdgeCutWitness>(&verdict.witness);
            if (!cut || static_cast<int>(cut->edges.size()) >= parameter) return false;
            Graph h = g;
            for (const auto& [u, v] : cut->edges) {
                if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
                    return false;
                h.remove_edge(u, v);
            }
            return g.order() >= 2 && !is_connected(h);
        }
        case Property::BetaDeficient: {
            const auto* m = std::get_if<MatchingWitness>(&verdict.witness);
            if (!m || !matching_valid(g, *m)) return false;
            const int exposed = static_cast<int>(m->unmatched.size());
            if (verdict.holds) return exposed <= parameter;
            // Negative verdicts additionally need the matching to be maximum.
            return exposed > parameter && matching_is_maximum(g, *m);
        }
        case Property::SPathCoverable: {
            const auto* cover = std::get_if<PathCoverWitness>(&verdict.witness);
            if (!cover || !path_cover_valid(g, *cover)) return false;
            const int count = static_cast<int>(cover->paths.size());
            return verdict.holds ? count <= parameter : count > parameter;
        }
        case Property::SHamiltonian: {
            if (verdict.holds) {
                if (const auto* cycle = std::get_if<HamCycleWitness>(&verdict.witness))
                    return ham_cycle_valid(g, *cycle);
                return std::holds_alternative<std::monostate>(verdict.witness);
            }
            const auto* del = std::get_if<DeletionSetWitness>(&verdict.witness);
            if (!del || static_cast<int>(del->vertices.size()) > parameter) return false;
            if (!vertices_valid(g, del->vertices)) return false;
            std::vector<char> removed(g.order(), 0);
            for (int v : del->vertices) removed[v] = 1;
            std::vector<int> keep;
            for (int v = 0; v < g.order(); ++v)
                if (!removed[v]) keep.push_back(v);
            const Graph h = induced_subgraph(g, keep);
            if (h.order() < 3) return true;
            return !is_hamiltonian(h).holds;
        }
        case Property::SEdgeHamiltonian: {
            if (verdict.holds) return std::holds_alternative<std::monostate>(verdict.witness);
            const auto* forest = std::get_if<LinearForestWitness>(&verdict.witness);
            if (!forest || static_cast<int>(forest->edges.size()) > parameter) return false;
            if (!valid_linear_forest(g, forest->edges)) return false;
            return !hamiltonian_cycle_through(g, forest->edges).has_value();
        }
    }
    return false;
}

}  // namespace specgraph
