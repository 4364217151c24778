#include "specgraph/theorem.hpp"

namespace specgraph {

std::string_view theorem_name(Theorem t) {
    switch (t) {
        case Theorem::SConnected: return "s-conn";
        case Theorem::SEdgeConnected: return "s-edge-conn";
        case Theorem::Deficient: return "deficient";
        case Theorem::PathCoverable: return "path-cover";
        case Theorem::SHamiltonian: return "s-ham";
        case Theorem::SEdgeHamiltonian: return "s-edge-ham";
    }
    return "?";
}

Theorem theorem_from_name(std::string_view name) {
    if (name == "s-conn") return Theorem::SConnected;
    if (name == "s-edge-conn") return Theorem::SEdgeConnected;
    if (name == "deficient") return Theorem::Deficient;
    if (name == "path-cover") return Theorem::PathCoverable;
    if (name == "s-ham") return Theorem::SHamiltonian;
    if (name == "s-edge-ham") return Theorem::SEdgeHamiltonian;
    throw std::invalid_argument("unknown theorem name: " + std::string(name));
}

}  // namespace specgraph
