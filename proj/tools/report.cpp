#include "report.hpp"

#include <sstream>

#include "json.hpp"

namespace flowrec::cli {

void RunReport::describe_graph(const std::string& label, const OrientedMultigraph& g) {
    graph_label = label;
    has_graph_stats = true;
    vertex_count = g.vertex_count();
    edge_count = g.edge_count();
    components = component_count(g);
    cyclotomic = cyclotomic_number(g);
}

void RunReport::add_result(const std::string& name, const std::string& value) {
    results.emplace_back(name, value);
}

void RunReport::add_check(const std::string& name, const std::string& lhs,
                          const std::string& rhs, bool pass) {
    checks.push_back({name, lhs, rhs, pass});
}

bool RunReport::all_passed() const {
    for (const CheckLine& check : checks) {
        if (!check.pass) return false;
    }
    return true;
}

std::string RunReport::to_text() const {
    std::ostringstream out;
    out << "graph: " << graph_label;
    if (has_graph_stats) {
        out << " |V|=" << vertex_count << " |E|=" << edge_count << " c=" << components
            << " xi=" << cyclotomic;
    }
    out << "\n";
    out << "command: " << command << "\n";
    for (const auto& [name, value] : results) {
        out << "result " << name << ": " << value << "\n";
    }
    for (const CheckLine& check : checks) {
        out << "check " << check.name << ": lhs=" << check.lhs << " rhs=" << check.rhs << " "
            << (check.pass ? "pass" : "FAIL") << "\n";
    }
    return out.str();
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json graph;
    graph["label"] = graph_label;
    if (has_graph_stats) {
        graph["vertices"] = vertex_count;
        graph["edges"] = edge_count;
        graph["components"] = components;
        graph["cyclotomic_number"] = cyclotomic;
    }
    nlohmann::ordered_json report;
    report["graph"] = graph;
    report["command"] = command;
    nlohmann::ordered_json result_list = nlohmann::ordered_json::array();
    for (const auto& [name, value] : results) {
        result_list.push_back({{"name", name}, {"value", value}});
    }
    report["results"] = result_list;
    nlohmann::ordered_json check_list = nlohmann::ordered_json::array();
    for (const CheckLine& check : checks) {
        check_list.push_back(
            {{"name", check.name}, {"lhs", check.lhs}, {"rhs", check.rhs}, {"pass", check.pass}});
    }
    report["checks"] = check_list;
    return report.dump(2) + "\n";
}

} // namespace flowrec::cli
