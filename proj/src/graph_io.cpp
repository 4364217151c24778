#include "specgraph/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace specgraph {

namespace {

constexpr long long kGraph6MaxOrder = 100000;  // parser sanity cap, far beyond desk scale

void append_sextets(std::string& out, unsigned long long value, int sextets) {
    for (int i = sextets - 1; i >= 0; --i)
        out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + 63));
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        append_sextets(out, static_cast<unsigned long long>(n), 3);
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    // Optional format header emitted by some tools.
    std::size_t base = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();

    auto need = [&](std::size_t at) -> unsigned {
        if (at >= text.size()) throw ParseError("graph6: truncated input", text.size());
        unsigned c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw ParseError("graph6: byte out of range 63..126", at);
        return c - 63;
    };

    std::size_t pos = base;
    long long n = 0;
    unsigned first = need(pos);
    if (first <= 62) {
        n = first;
        pos += 1;
    } else {
        // Raw byte 126: 18-bit order in 3 sextets; 126 126: 36-bit in 6.
        std::size_t at = pos + 1;
        int sextets = 3;
        if (need(at) == 63) {  // second raw 126
            sextets = 6;
            ++at;
        }
        for (int i = 0; i < sextets; ++i) n = (n << 6) | need(at + i);
        pos = at + sextets;
        if (n > kGraph6MaxOrder) throw ParseError("graph6: order exceeds parser cap", base);
    }

    Graph g(static_cast<int>(n));
    const long long bits_needed = n * (n - 1) / 2;
    long long bit = 0;
    unsigned acc = 0;
    int nbits = 0;
    int i = 0, j = 1;
    while (bit < bits_needed) {
        if (nbits == 0) {
            acc = need(pos);
            ++pos;
            nbits = 6;
        }
        if ((acc >> (nbits - 1)) & 1) g.add_edge(i, j);
        --nbits;
        ++bit;
        if (++i == j) {
            i = 0;
            ++j;
        }
    }
    if (pos != text.size()) throw ParseError("graph6: trailing bytes after graph data", pos);
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

long long parse_int(std::string_view text, std::size_t& pos, const char* what) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError(std::string("edge list: expected ") + what, pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
}

}  // namespace

Graph from_edge_list(std::string_view text) {
    std::size_t pos = 0;
    long long n = parse_int(text, pos, "vertex count");
    long long m = parse_int(text, pos, "edge count");
    if (n < 0 || m < 0) throw ParseError("edge list: negative header value", 0);
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        long long u = parse_int(text, pos, "edge endpoint");
        long long v = parse_int(text, pos, "edge endpoint");
        std::size_t at = pos;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: endpoint out of range", at);
        if (u == v) throw ParseError("edge list: self-loop", at);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    while (pos < text.size()) {
        if (!std::isspace(static_cast<unsigned char>(text[pos])))
            throw ParseError("edge list: trailing content", pos);
        ++pos;
    }
    return g;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::EdgeList) return from_edge_list(text);
    if (format == GraphFormat::Graph6) {
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
        return from_graph6(text);
    }
    // Auto: an edge list starts with a digit (graph6 data bytes are >= '?').
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        return from_edge_list(text);
    std::string_view trimmed = text.substr(i);
    while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r'))
        trimmed.remove_suffix(1);
    return from_graph6(trimmed);
}

}  // namespace specgraph
