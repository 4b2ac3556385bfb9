// Command line front end: reads graph files, computes flow / tension /
// chromatic / Tutte / Ehrhart polynomials, and runs the identity checks on
// single graphs or over a generated corpus.
//
// Exit codes: 0 all good, 1 usage or parse error, 2 a check failed,
// 3 an enumeration cap was exceeded.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flowrec/corpus.hpp"
#include "flowrec/flows.hpp"
#include "flowrec/graph_io.hpp"
#include "flowrec/lattice.hpp"
#include "flowrec/orientations.hpp"
#include "flowrec/reciprocity.hpp"
#include "flowrec/tensions.hpp"
#include "flowrec/tutte.hpp"
#include "report.hpp"

namespace {

using namespace flowrec;
using flowrec::cli::CheckLine;
using flowrec::cli::RunReport;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitCapExceeded = 3;

std::vector<long long> parse_integer_list(const std::string& text, const char* what) {
    std::string cleaned;
    for (char c : text) {
        if (c == '(' || c == ')' || c == ' ') continue;
        cleaned += c;
    }
    std::vector<long long> values;
    std::istringstream in(cleaned);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    return values;
}

std::vector<int> parse_edge_ids(const std::string& text) {
    std::vector<int> ids;
    for (long long v : parse_integer_list(text, "--forest")) ids.push_back(static_cast<int>(v));
    return ids;
}

std::string vector_string(const std::vector<long long>& values) {
    std::string out = "(";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out + ")";
}

std::string ids_string(const std::vector<int>& ids) {
    std::string out = "{";
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(ids[i]);
    }
    return out + "}";
}

std::string one_line(const OrientedMultigraph& g) {
    std::string text = write_graph_string(g);
    std::replace(text.begin(), text.end(), '\n', ';');
    if (!text.empty() && text.back() == ';') text.pop_back();
    return text;
}

Rat signed_evaluation(const ExactPolynomial& p, long long sign_exponent, long long argument) {
    return Rat(parity_sign(sign_exponent)) * p.evaluate(to_int(argument));
}

// One identity instance on one graph; shared by `check` and `corpus`.
std::vector<CheckLine> run_identity(const OrientedMultigraph& g, const std::string& which,
                                    int k, int l, const ScanLimits& limits) {
    std::vector<CheckLine> lines;
    auto add = [&](const std::string& name, const auto& lhs, const auto& rhs) {
        lines.push_back({name, to_string(lhs), to_string(rhs), lhs == rhs});
    };
    const GraphInvariants inv = invariants(g);

    if (which == "flow-reciprocity") {
        const Rat lhs(count_flow_pairs(g, k, limits));
        const Rat rhs =
            signed_evaluation(flow_polynomial(g, PolyMethod::DeletionContraction, limits),
                              inv.cyclotomic_number, -k);
        add("flow-reciprocity k=" + std::to_string(k), lhs, rhs);
    } else if (which == "tension-reciprocity") {
        const Rat lhs(count_tension_pairs(g, l, limits));
        const Rat rhs =
            signed_evaluation(tension_polynomial(g, PolyMethod::DeletionContraction, limits),
                              g.vertex_count() - inv.component_count, -l);
        add("tension-reciprocity l=" + std::to_string(l), lhs, rhs);
    } else if (which == "stanley") {
        const Int stanley = count_stanley_pairs(g, l, limits);
        const Rat chi = signed_evaluation(
            chromatic_polynomial(g, PolyMethod::DeletionContraction, limits), g.vertex_count(),
            -l);
        add("stanley l=" + std::to_string(l), Rat(stanley), chi);
        const Int factored = pow_int(Int(l), static_cast<unsigned long>(inv.component_count)) *
                             count_tension_pairs(g, l, limits);
        add("stanley-factorization l=" + std::to_string(l), stanley, factored);
    } else if (which == "tutte-triples") {
        const Int rhs = tutte_value(g, to_int(1 + l), to_int(1 + k));
        add("tutte-triples l=" + std::to_string(l) + " k=" + std::to_string(k),
            count_tutte_triples(g, l, k, limits), rhs);
    } else if (which == "convolution") {
        const Int rhs = tutte_value(g, to_int(1 + l), to_int(1 + k));
        add("convolution l=" + std::to_string(l) + " k=" + std::to_string(k),
            convolution(g, l, k, limits), rhs);
    } else if (which == "reiner") {
        const Int rhs = tutte_value(g, to_int(1 + l), to_int(1 + k));
        add("reiner l=" + std::to_string(l) + " k=" + std::to_string(k),
            reiner_sum(g, l, k, limits), rhs);
    } else if (which == "ehrhart-macdonald") {
        const Rat sign(parity_sign(inv.cyclotomic_number));
        for (const FeasibleRHS& b : feasible_b_set(g, limits)) {
            const ExactPolynomial closed = ehrhart_polynomial(g, b, limits);
            const Rat lhs(count_fiber_points(g, b, k, Openness::Open, limits));
            add("ehrhart-macdonald b=" + vector_string(b.b) + " k=" + std::to_string(k), lhs,
                Rat(sign * closed.evaluate(to_int(-k))));
        }
    } else if (which == "appendix-recursion") {
        for (const RecursionClause& clause : appendix_recursion_clauses(g, k, limits)) {
            lines.push_back({"appendix-recursion k=" + std::to_string(k) + " " + clause.name,
                             to_string(clause.lhs), to_string(clause.rhs), clause.pass});
        }
    } else {
        throw std::invalid_argument("unknown check: " + which);
    }
    return lines;
}

struct IdentityTraits {
    bool sweeps_k = false;
    bool sweeps_l = false;
};

IdentityTraits identity_traits(const std::string& which) {
    if (which == "flow-reciprocity" || which == "ehrhart-macdonald" ||
        which == "appendix-recursion") {
        return {true, false};
    }
    if (which == "tension-reciprocity" || which == "stanley") return {false, true};
    return {true, true};
}

struct Options {
    std::string which;
    std::string file;
    std::string method = "deletion-contraction";
    std::string forest_text;
    std::string b_text;
    bool verify = false;
    bool json = false;
    // Each subcommand keeps its own moduli so the CLI defaults stay apart.
    int check_k = 1;
    int check_l = 1;
    int geom_k = 0;
    int geom_l = 0;
    int corpus_k = 2;
    int corpus_l = 2;
    int max_vertices = 3;
    int max_edges = 4;
    unsigned long long seed = 1729;
    ScanLimits limits;
};

int emit(const RunReport& report, bool json) {
    std::cout << (json ? report.to_json() : report.to_text());
    return report.all_passed() ? kExitPass : kExitCheckFailed;
}

int cmd_poly(const Options& options) {
    const OrientedMultigraph g = read_graph_file(options.file);
    RunReport report;
    report.describe_graph(options.file, g);
    report.command = "poly " + options.which;
    const bool enumerate = options.method == "enumerate";
    const PolyMethod method = enumerate ? PolyMethod::Enumerate : PolyMethod::DeletionContraction;
    const std::string method_label = " (" + options.method + ")";

    if (!options.b_text.empty() && options.which != "ehrhart") {
        throw std::invalid_argument("--b is only meaningful for poly ehrhart");
    }
    if (!options.forest_text.empty() &&
        (options.which == "tutte" || options.which == "ehrhart")) {
        throw std::invalid_argument("--forest is not meaningful for poly " + options.which);
    }

    // A user-chosen forest pins the enumeration coordinates; the counts
    // come from the inside-out description in that case.
    auto counting_polynomial = [&](bool tension_side) {
        if (!options.forest_text.empty()) {
            if (!enumerate) {
                throw std::invalid_argument("--forest requires --method enumerate");
            }
            const std::vector<int> forest = parse_edge_ids(options.forest_text);
            const int degree = tension_side ? g.vertex_count() - component_count(g)
                                            : cyclotomic_number(g);
            std::vector<std::pair<Int, Rat>> samples;
            for (int point = degree + 1; point <= 2 * degree + 1; ++point) {
                const Int value = tension_side
                                      ? inside_out_tension_count(g, forest, point, options.limits)
                                      : inside_out_flow_count(g, forest, point, options.limits);
                samples.emplace_back(Int(point), Rat(value));
            }
            return interpolate(samples);
        }
        return tension_side ? tension_polynomial(g, method, options.limits)
                            : flow_polynomial(g, method, options.limits);
    };

    if (options.which == "flow") {
        const ExactPolynomial p = counting_polynomial(false);
        report.add_result("flow-polynomial" + method_label, p.to_string("k"));
        if (options.verify) {
            const ExactPolynomial other = flow_polynomial(
                g, enumerate ? PolyMethod::DeletionContraction : PolyMethod::Enumerate,
                options.limits);
            report.add_check("flow-methods-agree", p.to_string("k"), other.to_string("k"),
                             p == other);
        }
    } else if (options.which == "tension") {
        const ExactPolynomial p = counting_polynomial(true);
        report.add_result("tension-polynomial" + method_label, p.to_string("l"));
        if (options.verify) {
            const ExactPolynomial other = tension_polynomial(
                g, enumerate ? PolyMethod::DeletionContraction : PolyMethod::Enumerate,
                options.limits);
            report.add_check("tension-methods-agree", p.to_string("l"), other.to_string("l"),
                             p == other);
        }
    } else if (options.which == "chromatic") {
        const ExactPolynomial tau = counting_polynomial(true);
        const ExactPolynomial chi = tau.shifted(component_count(g));
        report.add_result("chromatic-polynomial" + method_label, chi.to_string("l"));
        if (options.verify) {
            const ExactPolynomial other =
                chromatic_polynomial(
                    g, enumerate ? PolyMethod::DeletionContraction : PolyMethod::Enumerate,
                    options.limits);
            report.add_check("chromatic-methods-agree", chi.to_string("l"), other.to_string("l"),
                             chi == other);
        }
    } else if (options.which == "tutte") {
        const BivariatePolynomial t = tutte_polynomial(g);
        report.add_result("tutte-polynomial", t.to_string());
        if (options.verify) {
            const GraphInvariants inv = invariants(g);
            const ExactPolynomial phi = flow_polynomial(g, PolyMethod::Enumerate, options.limits);
            const ExactPolynomial tau =
                tension_polynomial(g, PolyMethod::Enumerate, options.limits);
            for (long long a = 0; a <= 3; ++a) {
                report.add_check(
                    "tutte-flow-specialization k=" + std::to_string(a),
                    to_string(t.evaluate(Int(0), to_int(1 + a))),
                    to_string(signed_evaluation(phi, inv.cyclotomic_number, -a)),
                    Rat(t.evaluate(Int(0), to_int(1 + a))) ==
                        signed_evaluation(phi, inv.cyclotomic_number, -a));
                report.add_check(
                    "tutte-tension-specialization l=" + std::to_string(a),
                    to_string(t.evaluate(to_int(1 + a), Int(0))),
                    to_string(signed_evaluation(tau, g.vertex_count() - inv.component_count, -a)),
                    Rat(t.evaluate(to_int(1 + a), Int(0))) ==
                        signed_evaluation(tau, g.vertex_count() - inv.component_count, -a));
            }
        }
    } else if (options.which == "ehrhart") {
        if (options.b_text.empty()) {
            throw std::invalid_argument("poly ehrhart needs --b, e.g. --b=\"(-1,1)\"");
        }
        const FeasibleRHS b{parse_integer_list(options.b_text, "--b")};
        if (b.b.size() != static_cast<size_t>(g.vertex_count())) {
            throw std::invalid_argument("--b must list one integer per vertex");
        }
        const ExactPolynomial closed = ehrhart_polynomial(g, b, options.limits);
        report.add_result("ehrhart-polynomial b=" + vector_string(b.b), closed.to_string("k"));
        if (options.verify) {
            const Rat sign(parity_sign(cyclotomic_number(g)));
            for (long long k = 1; k <= 3; ++k) {
                const Rat open(count_fiber_points(g, b, k, Openness::Open, options.limits));
                const Rat reflected = sign * closed.evaluate(to_int(-k));
                report.add_check("ehrhart-macdonald k=" + std::to_string(k), to_string(open),
                                 to_string(reflected), open == reflected);
            }
        }
    } else {
        throw std::invalid_argument("unknown polynomial: " + options.which);
    }
    return emit(report, options.json);
}

int cmd_check(const Options& options) {
    const OrientedMultigraph g = read_graph_file(options.file);
    RunReport report;
    report.describe_graph(options.file, g);
    report.command = "check " + options.which;
    report.checks = run_identity(g, options.which, options.check_k, options.check_l, options.limits);
    if (report.checks.empty()) {
        report.add_result("note", "no feasible b; nothing to check");
    }
    return emit(report, options.json);
}

int cmd_geom(const Options& options) {
    const OrientedMultigraph g = read_graph_file(options.file);
    RunReport report;
    report.describe_graph(options.file, g);
    report.command = "geom " + options.which;

    if (options.which == "feasible-b") {
        const std::vector<FeasibleRHS> bs = feasible_b_set(g, options.limits);
        report.add_result("count", std::to_string(bs.size()));
        for (size_t i = 0; i < bs.size(); ++i) {
            report.add_result("b[" + std::to_string(i) + "]", vector_string(bs[i].b));
        }
    } else if (options.which == "indegree-map") {
        const auto table = indegree_map(g, options.limits);
        report.add_result("count", std::to_string(table.size()));
        for (const auto& [b, indegree] : table) {
            report.add_result("b=" + vector_string(b.b), "indegree " + vector_string(indegree));
        }
    } else if (options.which == "inside-out") {
        const std::vector<int> forest = options.forest_text.empty()
                                            ? default_spanning_forest(g)
                                            : parse_edge_ids(options.forest_text);
        report.add_result("forest", ids_string(forest));
        if (options.geom_k <= 0 && options.geom_l <= 0) {
            throw std::invalid_argument("geom inside-out needs --k and/or --l");
        }
        if (options.geom_k > 0) {
            report.add_result(
                "inside-out-flow k=" + std::to_string(options.geom_k),
                to_string(inside_out_flow_count(g, forest, options.geom_k, options.limits)));
        }
        if (options.geom_l > 0) {
            report.add_result(
                "inside-out-tension l=" + std::to_string(options.geom_l),
                to_string(inside_out_tension_count(g, forest, options.geom_l, options.limits)));
        }
    } else {
        throw std::invalid_argument("unknown geometry command: " + options.which);
    }
    return emit(report, options.json);
}

int cmd_corpus(const Options& options) {
    const int random_vertices = std::max(options.max_vertices, 5);
    const int random_edges = std::max(options.max_edges, 7);
    std::vector<OrientedMultigraph> corpus =
        exhaustive_corpus(options.max_vertices, options.max_edges);
    const size_t exhaustive_size = corpus.size();
    for (OrientedMultigraph& g : random_corpus(50, random_vertices, random_edges, options.seed)) {
        corpus.push_back(std::move(g));
    }

    RunReport report;
    report.graph_label = "exhaustive |V|<=" + std::to_string(options.max_vertices) +
                         " |E|<=" + std::to_string(options.max_edges) + " (" +
                         std::to_string(exhaustive_size) + " graphs) plus 50 random |V|<=" +
                         std::to_string(random_vertices) + " |E|<=" +
                         std::to_string(random_edges) + " seed " + std::to_string(options.seed);
    report.command = "corpus " + options.which;

    const IdentityTraits traits = identity_traits(options.which);
    const int k_max = traits.sweeps_k ? options.corpus_k : 1;
    const int l_max = traits.sweeps_l ? options.corpus_l : 1;

    long long total = 0;
    long long failed = 0;
    bool have_counterexample = false;
    CheckLine counterexample;
    std::string counterexample_graph;

    for (const OrientedMultigraph& g : corpus) {
        for (int k = 1; k <= k_max; ++k) {
            for (int l = 1; l <= l_max; ++l) {
                for (const CheckLine& line : run_identity(g, options.which, k, l, options.limits)) {
                    ++total;
                    if (!line.pass) {
                        ++failed;
                        if (!have_counterexample) {
                            have_counterexample = true;
                            counterexample = line;
                            counterexample_graph = one_line(g);
                        }
                    }
                }
            }
        }
    }

    report.add_result("graphs", std::to_string(corpus.size()));
    report.add_result("checks-run", std::to_string(total));
    report.add_result("checks-failed", std::to_string(failed));
    report.add_check(options.which + " over corpus", std::to_string(total - failed),
                     std::to_string(total), failed == 0);
    if (have_counterexample) {
        report.add_check("first counterexample [" + counterexample_graph + "] " +
                             counterexample.name,
                         counterexample.lhs, counterexample.rhs, false);
    }
    return emit(report, options.json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact modular flow, tension, chromatic and Tutte polynomials of oriented "
                 "multigraphs, with executable reciprocity checks."};
    app.require_subcommand(1);

    Options options;
    app.add_flag("--json", options.json, "emit a JSON report instead of text");
    app.add_option("--cap-subsets", options.limits.subset_scan_max_edges,
                   "largest |E| allowed for 2^|E| subset scans")
        ->capture_default_str();

    const std::vector<std::string> poly_kinds{"flow", "tension", "chromatic", "tutte", "ehrhart"};
    const std::vector<std::string> check_kinds{
        "flow-reciprocity", "tension-reciprocity", "stanley",          "tutte-triples",
        "convolution",      "reiner",              "ehrhart-macdonald", "appendix-recursion"};
    const std::vector<std::string> geom_kinds{"feasible-b", "indegree-map", "inside-out"};

    CLI::App* poly = app.add_subcommand("poly", "compute a graph polynomial");
    poly->add_option("which", options.which, "one of: flow, tension, chromatic, tutte, ehrhart")
        ->required()
        ->check(CLI::IsMember(poly_kinds));
    poly->add_option("file", options.file, "graph file")->required();
    poly->add_option("--method", options.method, "enumerate or deletion-contraction")
        ->check(CLI::IsMember({"enumerate", "deletion-contraction"}))
        ->capture_default_str();
    poly->add_option("--forest", options.forest_text,
                     "edge ids of a spanning forest (enumerate method)");
    poly->add_option("--b", options.b_text, "right-hand side for poly ehrhart, e.g. (-1,1)");
    poly->add_flag("--verify", options.verify, "add cross-method agreement checks");

    CLI::App* check = app.add_subcommand("check", "run one identity check on a graph");
    check->add_option("which", options.which,
                      "one of: flow-reciprocity, tension-reciprocity, stanley, tutte-triples, "
                      "convolution, reiner, ehrhart-macdonald, appendix-recursion")
        ->required()
        ->check(CLI::IsMember(check_kinds));
    check->add_option("file", options.file, "graph file")->required();
    check->add_option("--k", options.check_k, "flow-side modulus")->capture_default_str();
    check->add_option("--l", options.check_l, "tension-side modulus")->capture_default_str();

    CLI::App* geom = app.add_subcommand("geom", "feasible b vectors, in-degree map, inside-out counts");
    geom->add_option("which", options.which, "one of: feasible-b, indegree-map, inside-out")
        ->required()
        ->check(CLI::IsMember(geom_kinds));
    geom->add_option("file", options.file, "graph file")->required();
    geom->add_option("--k", options.geom_k, "dilation / flow modulus");
    geom->add_option("--l", options.geom_l, "tension modulus");
    geom->add_option("--forest", options.forest_text, "edge ids of a spanning forest");

    CLI::App* corpus = app.add_subcommand("corpus", "run an identity over a generated corpus");
    corpus->add_option("which", options.which, "identity to check (same names as `check`)")
        ->required()
        ->check(CLI::IsMember(check_kinds));
    corpus->add_option("--max-vertices", options.max_vertices, "exhaustive vertex bound")
        ->capture_default_str();
    corpus->add_option("--max-edges", options.max_edges, "exhaustive edge bound")
        ->capture_default_str();
    corpus->add_option("--seed", options.seed, "seed of the random family")
        ->capture_default_str();
    corpus->add_option("--k", options.corpus_k, "sweep k = 1..K where applicable")
        ->capture_default_str();
    corpus->add_option("--l", options.corpus_l, "sweep l = 1..L where applicable")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (poly->parsed()) return cmd_poly(options);
        if (check->parsed()) {
            if (options.check_k < 1 || options.check_l < 1) {
                throw std::invalid_argument("--k and --l must be positive");
            }
            return cmd_check(options);
        }
        if (geom->parsed()) return cmd_geom(options);
        if (corpus->parsed()) {
            if (options.corpus_k < 1 || options.corpus_l < 1) {
                throw std::invalid_argument("--k and --l must be positive");
            }
            return cmd_corpus(options);
        }
    } catch (const ParseError& error) {
        std::cerr << "parse error: " << error.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& error) {
        std::cerr << "cap exceeded: " << error.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
