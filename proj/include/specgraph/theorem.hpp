// theorem.hpp — the six certified properties and their parameter bundles.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specgraph {

enum class Theorem {
    SConnected,
    SEdgeConnected,
    Deficient,
    PathCoverable,
    SHamiltonian,
    SEdgeHamiltonian,
};

/// Theorem identifier plus its parameters: k is the minimum-degree parameter;
/// s is the property parameter for everything except Deficient, which uses
/// beta instead.
struct TheoremParams {
    Theorem theorem = Theorem::SConnected;
    int k = 0;
    int s = 0;
    int beta = 0;

    int property_parameter() const { return theorem == Theorem::Deficient ? beta : s; }

    /// Parameter-range invariants of the theorem statements (graph-independent).
    bool ranges_valid() const {
        switch (theorem) {
            case Theorem::SConnected:
            case Theorem::SEdgeConnected:
                return s >= 1 && k >= 1 && k - s + 1 >= 0;
            case Theorem::Deficient:
                return k >= 1 && beta >= 0 && k >= 2 * beta;
            case Theorem::PathCoverable:
                return s >= 1 && k >= 1;
            case Theorem::SHamiltonian:
            case Theorem::SEdgeHamiltonian:
                return s >= 0 && k >= s + 1;
        }
        return false;
    }

    static TheoremParams s_connected(int k, int s) { return {Theorem::SConnected, k, s, 0}; }
    static TheoremParams s_edge_connected(int k, int s) { return {Theorem::SEdgeConnected, k, s, 0}; }
    static TheoremParams deficient(int k, int beta) { return {Theorem::Deficient, k, 0, beta}; }
    static TheoremParams path_coverable(int k, int s) { return {Theorem::PathCoverable, k, s, 0}; }
    static TheoremParams s_hamiltonian(int k, int s) { return {Theorem::SHamiltonian, k, s, 0}; }
    static TheoremParams s_edge_hamiltonian(int k, int s) { return {Theorem::SEdgeHamiltonian, k, s, 0}; }

    bool operator==(const TheoremParams&) const = default;
};

std::string_view theorem_name(Theorem t);
Theorem theorem_from_name(std::string_view name);  // throws std::invalid_argument

}  // namespace specgraph
