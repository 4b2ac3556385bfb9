#pragma once

#include <map>
#include <string>
#include <vector>

namespace flowrec {

// One directed edge of a multigraph. Identities are arbitrary integers that
// stay attached to the edge through deletion, contraction, restriction and
// reorientation.
struct Edge {
    int id;
    int tail;
    int head;

    bool is_loop() const { return tail == head; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Oriented multigraph with loops and parallel edges. Values are immutable
// after construction; every operation returns a new graph. The stored
// vertex order is the canonical order for all vectors indexed by V, and the
// stored edge order is the canonical order for all vectors indexed by E.
class OrientedMultigraph {
public:
    OrientedMultigraph() = default;
    OrientedMultigraph(std::vector<int> vertices, std::vector<Edge> edges);

    // Vertices 1..vertex_count, edge identities 1..arcs.size() in order.
    static OrientedMultigraph from_arcs(int vertex_count,
                                        const std::vector<std::pair<int, int>>& arcs);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const { return vertex_index_.count(v) > 0; }
    bool has_edge(int id) const { return edge_index_.count(id) > 0; }
    const Edge& edge(int id) const;

    // Position in the canonical vertex/edge order; throws on unknown ids.
    int vertex_index(int v) const;
    int edge_index(int id) const;

    std::vector<int> edge_ids() const;

    friend bool operator==(const OrientedMultigraph&, const OrientedMultigraph&);

private:
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
    std::map<int, int> vertex_index_;
    std::map<int, int> edge_index_;
};

enum class EdgeKind { Loop, Coloop, Ordinary };

struct GraphInvariants {
    int component_count = 0;
    // |E| - |V| + c(G)
    int cyclotomic_number = 0;
    // Indexed in canonical vertex order; a loop adds 1 to both in- and
    // out-degree at its vertex.
    std::vector<long long> in_degree;
    std::vector<long long> out_degree;
};

// Incidence matrix entries[vertex position][edge position] in {0,+-1}:
// -1 at the tail, +1 at the head, zero column for a loop.
struct IncidenceMatrix {
    std::vector<std::vector<int>> entries;
};

OrientedMultigraph delete_edges(const OrientedMultigraph& g, const std::vector<int>& ids);
OrientedMultigraph contract_edges(const OrientedMultigraph& g, const std::vector<int>& ids);
OrientedMultigraph restrict_edges(const OrientedMultigraph& g, const std::vector<int>& ids);
OrientedMultigraph reorient(const OrientedMultigraph& g, const std::vector<int>& ids);

// Drops vertices of degree zero. Flow, tension and Tutte quantities are
// unchanged; c and |V| drop together.
OrientedMultigraph prune_isolated(const OrientedMultigraph& g);

EdgeKind classify_edge(const OrientedMultigraph& g, int id);
std::string to_string(EdgeKind kind);

int component_count(const OrientedMultigraph& g);
GraphInvariants invariants(const OrientedMultigraph& g);
int cyclotomic_number(const OrientedMultigraph& g);

IncidenceMatrix incidence_matrix(const OrientedMultigraph& g);

// A * x for x indexed in canonical edge order.
std::vector<long long> incidence_apply(const OrientedMultigraph& g,
                                       const std::vector<long long>& edge_vector);

} // namespace flowrec
