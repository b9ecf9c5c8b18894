#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idcodes/graph.hpp"
#include "idcodes/vertex_set.hpp"

namespace idcodes {
namespace sat {

// 3-CNF formula; literal +k / -k is variable k-1 positive / negated.
struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;  // each of size <= 3, no 0 literals

    void validate() const;  // throws on out-of-range or tautological input
};

CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);

// Vertex layout of the reduction graph: per variable j a 6-vertex gadget
// x_j, xbar_j, a_j, b_j, c_j, d_j, then per clause i the pair alpha_i, beta_i.
struct Reduction {
    Graph graph;
    std::size_t num_vars = 0, num_clauses = 0;
    std::size_t target_size = 0;  // 3|U| + m; formula satisfiable iff an
                                  // 1-identifying code of this size exists

    std::size_t x(std::size_t j) const { return 6 * j; }
    std::size_t xbar(std::size_t j) const { return 6 * j + 1; }
    std::size_t a(std::size_t j) const { return 6 * j + 2; }
    std::size_t b(std::size_t j) const { return 6 * j + 3; }
    std::size_t c(std::size_t j) const { return 6 * j + 4; }
    std::size_t d(std::size_t j) const { return 6 * j + 5; }
    std::size_t alpha(std::size_t i) const { return 6 * num_vars + 2 * i; }
    std::size_t beta(std::size_t i) const { return 6 * num_vars + 2 * i + 1; }
};

Reduction reduce_3sat(const CnfFormula& f);

// canonical code for a satisfying assignment: every alpha_i, every b_j and
// c_j, plus the satisfied literal vertex of each variable
VertexSet code_from_assignment(const Reduction& red, const std::vector<bool>& assignment);

// reads an assignment back off any 1-identifying code of target size;
// empty optional if the code does not determine a satisfying assignment
std::optional<std::vector<bool>> assignment_from_code(const Reduction& red, const CnfFormula& f,
                                                      const VertexSet& code);

// exhaustive satisfiability oracle (num_vars <= 20)
std::optional<std::vector<bool>> brute_sat(const CnfFormula& f);

}  // namespace sat
}  // namespace idcodes
