#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "flowrec/graph.hpp"

namespace flowrec {

// Carries the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Graph text format:
//   p <n> <m>
//   e <u> <v>      (m times; edge oriented u -> v, vertices 1..n)
// Lines starting with '#' are comments; blank lines are ignored.
// Edge identities are assigned 1..m in file order.
OrientedMultigraph read_graph(std::istream& in);
OrientedMultigraph read_graph_file(const std::string& path);

// Writes the p line followed by the edge list in canonical order, with
// vertices renumbered 1..n by canonical position. read followed by write
// reproduces the edge list of the input byte for byte.
void write_graph(std::ostream& out, const OrientedMultigraph& g);
std::string write_graph_string(const OrientedMultigraph& g);

} // namespace flowrec
