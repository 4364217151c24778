#include "specgraph/graph.hpp"

#include <algorithm>
#include <bit>

namespace specgraph {

int Graph::degree(int v) const {
    check_vertex(v);
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return static_cast<int>(total / 2);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.order() + g2.order());
    for (const auto& [u, v] : g1.edges()) g.add_edge(u, v);
    for (const auto& [u, v] : g2.edges()) g.add_edge(g1.order() + u, g1.order() + v);
    return g;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

int min_degree(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("min_degree: empty vertex set");
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

std::vector<int> component_labels(const Graph& g) {
    const int n = g.order();
    std::vector<int> label(n, -1);
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const std::uint64_t* r = g.row(u);
            for (int w = 0; w < g.words_per_row(); ++w) {
                std::uint64_t bits = r[w];
                while (bits) {
                    int v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (label[v] == -1) {
                        label[v] = next;
                        stack.push_back(v);
                    }
                }
            }
        }
        ++next;
    }
    return label;
}

int component_count(const Graph& g) {
    auto labels = component_labels(g);
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("is_connected: empty vertex set");
    return component_count(g) == 1;
}

std::optional<int> is_regular(const Graph& g) {
    if (g.order() < 1) return std::nullopt;
    const int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::optional<BipartitionWitness> is_semiregular_bipartite(const Graph& g) {
    const int n = g.order();
    if (n < 1) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) return std::nullopt;

    // 2-color each component; record the side degrees per component.
    std::vector<int> color(n, -1);
    struct Comp {
        std::vector<int> side[2];
        int deg[2] = {-1, -1};
    };
    std::vector<Comp> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        Comp comp;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.side[color[u]].push_back(u);
            int du = g.degree(u);
            if (comp.deg[color[u]] == -1) comp.deg[color[u]] = du;
            else if (comp.deg[color[u]] != du) return std::nullopt;
            const std::uint64_t* r = g.row(u);
            for (int w = 0; w < g.words_per_row(); ++w) {
                std::uint64_t bits = r[w];
                while (bits) {
                    int v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (color[v] == -1) {
                        color[v] = 1 - color[u];
                        stack.push_back(v);
                    } else if (color[v] == color[u]) {
                        return std::nullopt;  // odd cycle
                    }
                }
            }
        }
        comps.push_back(std::move(comp));
    }

    // Choose a per-component orientation so all X-side degrees agree and all
    // Y-side degrees agree. The first component's orientation fixes (dx, dy);
    // both orientations of it are tried.
    for (int first_flip = 0; first_flip < 2; ++first_flip) {
        int dx = comps[0].deg[first_flip];
        int dy = comps[0].deg[1 - first_flip];
        BipartitionWitness w;
        w.deg_x = dx;
        w.deg_y = dy;
        bool ok = true;
        for (const Comp& c : comps) {
            int flip;
            if (c.deg[0] == dx && c.deg[1] == dy) flip = 0;
            else if (c.deg[1] == dx && c.deg[0] == dy) flip = 1;
            else {
                ok = false;
                break;
            }
            for (int v : c.side[flip]) w.side_x.push_back(v);
            for (int v : c.side[1 - flip]) w.side_y.push_back(v);
        }
        if (!ok) continue;
        std::sort(w.side_x.begin(), w.side_x.end());
        std::sort(w.side_y.begin(), w.side_y.end());
        // Canonical orientation: vertex 0 lies on side X.
        if (!w.side_x.empty() && w.side_x[0] != 0) {
            std::swap(w.side_x, w.side_y);
            std::swap(w.deg_x, w.deg_y);
        }
        return w;
    }
    return std::nullopt;
}

}  // namespace specgraph
