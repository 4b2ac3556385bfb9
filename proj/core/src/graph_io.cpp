#include "flowrec/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace flowrec {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

OrientedMultigraph read_graph(std::istream& in) {
    std::string line;
    int line_number = 0;
    int n = -1;
    long long m = -1;
    std::vector<std::pair<int, int>> arcs;

    while (std::getline(in, line)) {
        ++line_number;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (n < 0) {
            if (tag != "p") throw ParseError(line_number, "expected 'p <n> <m>' header");
            if (!(fields >> n >> m) || n < 0 || m < 0) {
                throw ParseError(line_number, "malformed 'p' line");
            }
            std::string rest;
            if (fields >> rest) throw ParseError(line_number, "trailing tokens on 'p' line");
            continue;
        }
        if (tag != "e") throw ParseError(line_number, "expected 'e <u> <v>' edge line");
        int u = 0, v = 0;
        if (!(fields >> u >> v)) throw ParseError(line_number, "malformed 'e' line");
        std::string rest;
        if (fields >> rest) throw ParseError(line_number, "trailing tokens on 'e' line");
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError(line_number, "vertex out of range 1.." + std::to_string(n));
        }
        if (static_cast<long long>(arcs.size()) == m) {
            throw ParseError(line_number, "more edge lines than declared in header");
        }
        arcs.emplace_back(u, v);
    }
    if (n < 0) throw ParseError(line_number + 1, "missing 'p <n> <m>' header");
    if (static_cast<long long>(arcs.size()) != m) {
        throw ParseError(line_number + 1,
                         "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(arcs.size()));
    }
    return OrientedMultigraph::from_arcs(n, arcs);
}

OrientedMultigraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const OrientedMultigraph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << "e " << g.vertex_index(e.tail) + 1 << " " << g.vertex_index(e.head) + 1 << "\n";
    }
}

std::string write_graph_string(const OrientedMultigraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace flowrec
