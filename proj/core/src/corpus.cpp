#include "flowrec/corpus.hpp"

#include <random>
#include <stdexcept>

namespace flowrec {

std::vector<OrientedMultigraph> exhaustive_corpus(int max_vertices, int max_edges) {
    if (max_vertices < 1 || max_edges < 0) {
        throw std::invalid_argument("exhaustive_corpus: bounds must be positive");
    }
    std::vector<OrientedMultigraph> corpus;
    for (int n = 1; n <= max_vertices; ++n) {
        // Directed edge types (u, v) in lexicographic order.
        std::vector<std::pair<int, int>> types;
        for (int u = 1; u <= n; ++u) {
            for (int v = 1; v <= n; ++v) types.emplace_back(u, v);
        }
        const int type_count = static_cast<int>(types.size());
        for (int m = 0; m <= max_edges; ++m) {
            // Multisets of size m as non-decreasing type index sequences.
            std::vector<int> pick(static_cast<size_t>(m), 0);
            for (;;) {
                std::vector<std::pair<int, int>> arcs;
                arcs.reserve(static_cast<size_t>(m));
                for (int index : pick) arcs.push_back(types[static_cast<size_t>(index)]);
                corpus.push_back(OrientedMultigraph::from_arcs(n, arcs));

                int digit = m - 1;
                while (digit >= 0 && pick[static_cast<size_t>(digit)] == type_count - 1) --digit;
                if (digit < 0) break;
                const int next = pick[static_cast<size_t>(digit)] + 1;
                for (int i = digit; i < m; ++i) pick[static_cast<size_t>(i)] = next;
            }
        }
    }
    return corpus;
}

std::vector<OrientedMultigraph> random_corpus(int count, int max_vertices, int max_edges,
                                              unsigned long long seed) {
    if (count < 0 || max_vertices < 1 || max_edges < 0) {
        throw std::invalid_argument("random_corpus: bounds must be positive");
    }
    // Plain modular draws keep the sequence identical across standard
    // library implementations.
    std::mt19937_64 rng(seed);
    std::vector<OrientedMultigraph> corpus;
    corpus.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        const int n = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_vertices));
        const int m = static_cast<int>(rng() % static_cast<unsigned long long>(max_edges + 1));
        std::vector<std::pair<int, int>> arcs;
        arcs.reserve(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            const int u = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(n));
            const int v = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(n));
            arcs.emplace_back(u, v);
        }
        corpus.push_back(OrientedMultigraph::from_arcs(n, arcs));
    }
    return corpus;
}

} // namespace flowrec
