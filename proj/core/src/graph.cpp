#include "flowrec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flowrec {

namespace {

// Plain union-find over vertex positions.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

std::set<int> checked_edge_set(const OrientedMultigraph& g, const std::vector<int>& ids,
                               const char* op) {
    std::set<int> set;
    for (int id : ids) {
        if (!g.has_edge(id)) {
            throw std::invalid_argument(std::string(op) + ": unknown edge identity " +
                                        std::to_string(id));
        }
        set.insert(id);
    }
    return set;
}

} // namespace

OrientedMultigraph::OrientedMultigraph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        if (!vertex_index_.emplace(vertices_[i], i).second) {
            throw std::invalid_argument("duplicate vertex identity " +
                                        std::to_string(vertices_[i]));
        }
    }
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const Edge& e = edges_[i];
        if (!vertex_index_.count(e.tail) || !vertex_index_.count(e.head)) {
            throw std::invalid_argument("edge " + std::to_string(e.id) +
                                        " references unknown vertex");
        }
        if (!edge_index_.emplace(e.id, i).second) {
            throw std::invalid_argument("duplicate edge identity " + std::to_string(e.id));
        }
    }
}

OrientedMultigraph OrientedMultigraph::from_arcs(int vertex_count,
                                                 const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> vertices(static_cast<size_t>(vertex_count));
    std::iota(vertices.begin(), vertices.end(), 1);
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    int next_id = 1;
    for (const auto& [tail, head] : arcs) {
        edges.push_back(Edge{next_id++, tail, head});
    }
    return OrientedMultigraph(std::move(vertices), std::move(edges));
}

const Edge& OrientedMultigraph::edge(int id) const {
    return edges_[static_cast<size_t>(edge_index(id))];
}

int OrientedMultigraph::vertex_index(int v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) {
        throw std::invalid_argument("unknown vertex identity " + std::to_string(v));
    }
    return it->second;
}

int OrientedMultigraph::edge_index(int id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) {
        throw std::invalid_argument("unknown edge identity " + std::to_string(id));
    }
    return it->second;
}

std::vector<int> OrientedMultigraph::edge_ids() const {
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const Edge& e : edges_) ids.push_back(e.id);
    return ids;
}

bool operator==(const OrientedMultigraph& a, const OrientedMultigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

OrientedMultigraph delete_edges(const OrientedMultigraph& g, const std::vector<int>& ids) {
    const std::set<int> doomed = checked_edge_set(g, ids, "delete_edges");
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        if (!doomed.count(e.id)) kept.push_back(e);
    }
    return OrientedMultigraph(g.vertices(), std::move(kept));
}

OrientedMultigraph contract_edges(const OrientedMultigraph& g, const std::vector<int>& ids) {
    const std::set<int> contracted = checked_edge_set(g, ids, "contract_edges");
    // Identify endpoints per connected component of G[S].
    UnionFind uf(g.vertex_count());
    for (int id : contracted) {
        const Edge& e = g.edge(id);
        uf.unite(g.vertex_index(e.tail), g.vertex_index(e.head));
    }
    // Representative of a merged class is the earliest vertex in canonical
    // order, which is also the one with the smallest insertion position.
    std::vector<int> class_representative(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<int> vertices;
    for (int i = 0; i < g.vertex_count(); ++i) {
        const int root = uf.find(i);
        if (class_representative[static_cast<size_t>(root)] < 0) {
            class_representative[static_cast<size_t>(root)] = g.vertices()[static_cast<size_t>(i)];
            vertices.push_back(g.vertices()[static_cast<size_t>(i)]);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (contracted.count(e.id)) continue;
        const int tail = class_representative[static_cast<size_t>(uf.find(g.vertex_index(e.tail)))];
        const int head = class_representative[static_cast<size_t>(uf.find(g.vertex_index(e.head)))];
        edges.push_back(Edge{e.id, tail, head});
    }
    return OrientedMultigraph(std::move(vertices), std::move(edges));
}

OrientedMultigraph restrict_edges(const OrientedMultigraph& g, const std::vector<int>& ids) {
    const std::set<int> kept = checked_edge_set(g, ids, "restrict_edges");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (kept.count(e.id)) edges.push_back(e);
    }
    return OrientedMultigraph(g.vertices(), std::move(edges));
}

OrientedMultigraph reorient(const OrientedMultigraph& g, const std::vector<int>& ids) {
    const std::set<int> flipped = checked_edge_set(g, ids, "reorient");
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
        if (flipped.count(e.id)) std::swap(e.tail, e.head);
    }
    return OrientedMultigraph(g.vertices(), std::move(edges));
}

OrientedMultigraph prune_isolated(const OrientedMultigraph& g) {
    std::set<int> touched;
    for (const Edge& e : g.edges()) {
        touched.insert(e.tail);
        touched.insert(e.head);
    }
    std::vector<int> vertices;
    for (int v : g.vertices()) {
        if (touched.count(v)) vertices.push_back(v);
    }
    return OrientedMultigraph(std::move(vertices), g.edges());
}

EdgeKind classify_edge(const OrientedMultigraph& g, int id) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) return EdgeKind::Loop;
    if (component_count(delete_edges(g, {id})) == component_count(g) + 1) {
        return EdgeKind::Coloop;
    }
    return EdgeKind::Ordinary;
}

std::string to_string(EdgeKind kind) {
    switch (kind) {
    case EdgeKind::Loop: return "loop";
    case EdgeKind::Coloop: return "coloop";
    case EdgeKind::Ordinary: return "ordinary";
    }
    return "?";
}

int component_count(const OrientedMultigraph& g) {
    UnionFind uf(g.vertex_count());
    for (const Edge& e : g.edges()) {
        uf.unite(g.vertex_index(e.tail), g.vertex_index(e.head));
    }
    std::set<int> roots;
    for (int i = 0; i < g.vertex_count(); ++i) roots.insert(uf.find(i));
    return static_cast<int>(roots.size());
}

GraphInvariants invariants(const OrientedMultigraph& g) {
    GraphInvariants inv;
    inv.component_count = component_count(g);
    inv.cyclotomic_number = g.edge_count() - g.vertex_count() + inv.component_count;
    inv.in_degree.assign(static_cast<size_t>(g.vertex_count()), 0);
    inv.out_degree.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        inv.in_degree[static_cast<size_t>(g.vertex_index(e.head))] += 1;
        inv.out_degree[static_cast<size_t>(g.vertex_index(e.tail))] += 1;
    }
    return inv;
}

int cyclotomic_number(const OrientedMultigraph& g) {
    return g.edge_count() - g.vertex_count() + component_count(g);
}

IncidenceMatrix incidence_matrix(const OrientedMultigraph& g) {
    IncidenceMatrix m;
    m.entries.assign(static_cast<size_t>(g.vertex_count()),
                     std::vector<int>(static_cast<size_t>(g.edge_count()), 0));
    for (int j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[static_cast<size_t>(j)];
        if (e.is_loop()) continue;
        m.entries[static_cast<size_t>(g.vertex_index(e.tail))][static_cast<size_t>(j)] = -1;
        m.entries[static_cast<size_t>(g.vertex_index(e.head))][static_cast<size_t>(j)] = 1;
    }
    return m;
}

std::vector<long long> incidence_apply(const OrientedMultigraph& g,
                                       const std::vector<long long>& edge_vector) {
    if (edge_vector.size() != static_cast<size_t>(g.edge_count())) {
        throw std::invalid_argument("incidence_apply: vector length mismatch");
    }
    std::vector<long long> result(static_cast<size_t>(g.vertex_count()), 0);
    for (int j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[static_cast<size_t>(j)];
        if (e.is_loop()) continue;
        result[static_cast<size_t>(g.vertex_index(e.tail))] -= edge_vector[static_cast<size_t>(j)];
        result[static_cast<size_t>(g.vertex_index(e.head))] += edge_vector[static_cast<size_t>(j)];
    }
    return result;
}

} // namespace flowrec
