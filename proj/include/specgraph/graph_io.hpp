// graph_io.hpp — graph6 and edge-list text formats.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Parse failure; `position` is the byte offset of the first offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// graph6: 6-bit big-endian packing of the upper triangle in column order
// (for j = 1..n-1, i = 0..j-1), each byte offset by 63. Encoding uses the
// shortest legal size header.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Edge list: "n m" header line, then m lines "u v", 0-indexed.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Parse with auto-detection: a leading "n m" integer header means edge list,
/// anything else is treated as graph6.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

}  // namespace specgraph
