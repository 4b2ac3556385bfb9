#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flowrec/graph.hpp"

namespace flowrec {

// Finite map from edge identity to a residue in {0,...,modulus-1}.
// Represents Z_k-flows and Z_l-tensions alike; values are reduced on
// construction and stay reduced.
struct ModularAssignment {
    int modulus = 1;
    std::map<int, int> values;

    // Sorted edge identities carrying a nonzero residue.
    std::vector<int> support() const {
        std::vector<int> edges;
        for (const auto& [id, value] : values) {
            if (value != 0) edges.push_back(id);
        }
        return edges;
    }

    friend bool operator==(const ModularAssignment&, const ModularAssignment&) = default;
};

inline int reduce_mod(long long value, int modulus) {
    long long r = value % modulus;
    if (r < 0) r += modulus;
    return static_cast<int>(r);
}

// Assignment over the edges of g in canonical edge order; residues are
// reduced mod modulus.
inline ModularAssignment make_assignment(const OrientedMultigraph& g, int modulus,
                                         const std::vector<long long>& values_in_edge_order) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    if (values_in_edge_order.size() != static_cast<size_t>(g.edge_count())) {
        throw std::invalid_argument("assignment length does not match edge count");
    }
    ModularAssignment a;
    a.modulus = modulus;
    for (int j = 0; j < g.edge_count(); ++j) {
        a.values[g.edges()[static_cast<size_t>(j)].id] =
            reduce_mod(values_in_edge_order[static_cast<size_t>(j)], modulus);
    }
    return a;
}

// Throws unless the assignment covers exactly the edges of g.
inline void require_carrier(const OrientedMultigraph& g, const ModularAssignment& a,
                            const char* what) {
    if (a.modulus < 1) throw std::invalid_argument(std::string(what) + ": modulus must be positive");
    if (a.values.size() != static_cast<size_t>(g.edge_count())) {
        throw std::invalid_argument(std::string(what) + ": assignment does not match edge set");
    }
    for (const auto& [id, value] : a.values) {
        if (!g.has_edge(id)) {
            throw std::invalid_argument(std::string(what) + ": missing edge value or stray edge " +
                                        std::to_string(id));
        }
        if (value < 0 || value >= a.modulus) {
            throw std::invalid_argument(std::string(what) + ": residue out of range on edge " +
                                        std::to_string(id));
        }
    }
}

} // namespace flowrec
