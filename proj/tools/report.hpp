#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flowrec/graph.hpp"

namespace flowrec::cli {

struct CheckLine {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

// Everything one command run reports: a graph (or corpus) summary, the
// command, named result values, and check verdicts. Identical inputs give
// byte-identical text and JSON renderings.
struct RunReport {
    std::string graph_label;
    bool has_graph_stats = false;
    int vertex_count = 0;
    int edge_count = 0;
    int components = 0;
    int cyclotomic = 0;

    std::string command;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<CheckLine> checks;

    void describe_graph(const std::string& label, const OrientedMultigraph& g);
    void add_result(const std::string& name, const std::string& value);
    void add_check(const std::string& name, const std::string& lhs, const std::string& rhs,
                   bool pass);

    bool all_passed() const;
    std::string to_text() const;
    std::string to_json() const;
};

} // namespace flowrec::cli
