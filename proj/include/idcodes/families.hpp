#pragma once

#include "idcodes/graph.hpp"

namespace idcodes {

// Deterministic generators: identical parameters give identical edge lists.

Graph path_graph(std::size_t n);           // n >= 1
Graph cycle_graph(std::size_t n);          // n >= 3
Graph star_graph(std::size_t n);           // n >= 2; center is vertex 0
Graph complete_graph(std::size_t n);
// K_n minus a maximum matching ({0,1},{2,3},...).
Graph complete_minus_matching(std::size_t n);
// Hypercube graph on 2^len vertices; vertex ids are the words.
Graph hypercube_graph(unsigned len);

// Cycle c_0..c_{2r-1} plus a pendant on each cycle vertex except c_0.
// Pendant of c_i is vertex 2r-1+i (i >= 1); order 4r-1. Requires r >= 3.
Graph terminal_example(int r);

struct GapGraph {
    Graph graph;
    std::size_t v;         // the distinguished codeword vertex
    VertexSet code;        // {v, c_1..c_k}
    std::vector<std::size_t> c;  // the k hub vertices
};
// Bipartite graph on 2^{k+1}-k-1 vertices: v, hubs c_1..c_k, and for each
// index subset I with |I| >= 2 a pair y_I (adjacent to v and the c_i, i in I)
// and z_I (adjacent to the c_i only). Requires k >= 2.
GapGraph gap_graph(int k);

enum class CombVariant { ExtrasAdjacent, ExtrasNonadjacent };
struct CombGraph {
    Graph graph;
    std::size_t v;  // one of the two extra vertices
};
// p disjoint paths P_r; extra vertex v adjacent to the first endpoint of
// every path, extra vertex w to the last; the extras are mutually adjacent
// per variant. Requires r >= 2, p >= 1.
CombGraph comb_graph(int r, int p, CombVariant variant);

// G_1 = three disjoint hypercubes F^3 plus an apex adjacent to all 24 cube
// vertices (n=25); G_q = three copies of G_{q-1} plus such an apex.
// The apex is the last vertex. Requires q >= 1.
Graph g_series(int q);

// Dispatch by family tag for the CLI: path|cycle|star|complete-minus-matching|
// hypercube|terminal|gap|comb-adj|comb-nonadj|gseries.
Graph make_family(const std::string& tag, const std::vector<long>& params);

}  // namespace idcodes
