#pragma once

#include <iosfwd>
#include <string>

#include "idcodes/graph.hpp"

namespace idcodes {

// Text format: comment lines `c ...`; header `p graph <n> <m>`;
// edge lines `e <u> <v>` with 1-based ids.
// Rejects duplicate edges and self-loops.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

// Code file: one 1-based vertex id per line (comments with `c`).
VertexSet read_code(std::istream& in, std::size_t n);
VertexSet read_code_file(const std::string& path, std::size_t n);
void write_code(std::ostream& out, const VertexSet& code);

}  // namespace idcodes
