#include "idcodes/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace idcodes {

Graph read_graph(std::istream& in) {
    std::string line;
    std::size_t n = 0, m = 0;
    bool have_header = false;
    Graph g(0);
    std::size_t edges_seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char kind;
        ls >> kind;
        if (kind == 'p') {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "graph")
                throw std::runtime_error("graph parse: bad header line: " + line);
            g = Graph(n);
            have_header = true;
        } else if (kind == 'e') {
            if (!have_header) throw std::runtime_error("graph parse: edge before header");
            std::size_t u, v;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw std::runtime_error("graph parse: bad edge line: " + line);
            if (u == v) throw std::runtime_error("graph parse: self-loop: " + line);
            if (g.has_edge(u - 1, v - 1))
                throw std::runtime_error("graph parse: duplicate edge: " + line);
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
        } else {
            throw std::runtime_error("graph parse: unknown line: " + line);
        }
    }
    if (!have_header) throw std::runtime_error("graph parse: missing header");
    if (edges_seen != m)
        throw std::runtime_error("graph parse: edge count mismatch");
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    const auto es = g.edges();
    out << "p graph " << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

VertexSet read_code(std::istream& in, std::size_t n) {
    VertexSet code(n);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::size_t v;
        while (ls >> v) {
            if (v < 1 || v > n) throw std::runtime_error("code parse: vertex out of range");
            code.add(v - 1);
        }
    }
    return code;
}

VertexSet read_code_file(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    return read_code(in, n);
}

void write_code(std::ostream& out, const VertexSet& code) {
    for (std::size_t v : code.to_vector()) out << v + 1 << '\n';
}

}  // namespace idcodes
