#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "flowrec/graph_io.hpp"

using namespace flowrec;
using namespace flowrec::testing;

TEST_CASE("reading the graph text format") {
    std::istringstream in("# three parallel edges\np 2 3\ne 1 2\ne 1 2\ne 1 2\n");
    const OrientedMultigraph g = read_graph(in);
    CHECK(g == g1());
}

TEST_CASE("write after read reproduces the edge list") {
    const std::string text = "p 3 5\ne 1 2\ne 2 3\ne 2 3\ne 3 1\ne 3 1\n";
    std::istringstream in(text);
    CHECK(write_graph_string(read_graph(in)) == text);

    // Loops, blank lines and comments.
    std::istringstream fancy("\n# loop below\np 1 1\n\ne 1 1\n");
    CHECK(write_graph_string(read_graph(fancy)) == "p 1 1\ne 1 1\n");
}

TEST_CASE("minors are written with canonical vertex numbers") {
    const OrientedMultigraph contracted = contract_edges(g2(), {1});
    CHECK(write_graph_string(contracted) == "p 2 4\ne 1 2\ne 1 2\ne 2 1\ne 2 1\n");
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_graph(in);
        } catch (const ParseError& error) {
            return error.line();
        }
        return -1;
    };
    CHECK(line_of("p 2 1\ne 1 3\n") == 2);       // vertex out of range
    CHECK(line_of("e 1 2\n") == 1);              // missing header
    CHECK(line_of("p 2 2\ne 1 2\n") == 3);       // too few edges
    CHECK(line_of("p 2 1\ne 1 2\ne 2 1\n") == 3); // too many edges
    CHECK(line_of("p 2 1\ne 1 2 7\n") == 2);     // trailing tokens
    CHECK(line_of("# only a comment\n") == 2);   // header never arrives
}
