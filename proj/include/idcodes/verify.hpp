#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

enum class ViolationKind {
    Undominated,
    Unseparated,
    CoveringDeficit,
    RobustnessBreak,
    SocZeroMissing,
};

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> vertices;       // vertices involved (witness)
    std::vector<std::size_t> other_vertices; // second subset for pair witnesses
    std::string detail;
};

// empty optional = the code passes; otherwise the lexicographically
// smallest violation witness.
using VerifyResult = std::optional<Violation>;

// B_r(v) ∩ C.
VertexSet identifying_set(const Graph& g, const VertexSet& code, std::size_t v, int r);

VerifyResult is_r_identifying(const Graph& g, const VertexSet& code, int r);

// Distinguishes all nonempty vertex subsets of size <= ell by I-set unions.
// Enumeration guard: sum of C(n,i), i <= ell, at most 10^6.
VerifyResult is_r_l_identifying(const Graph& g, const VertexSet& code, int r, int ell);

// Def via set-intervals [I_r(X) \ (X ∩ C), I_r(X)]; two intervals intersect
// iff low1 ⊆ up2 and low2 ⊆ up1; requires all pairs of intervals disjoint.
VerifyResult is_strongly_identifying(const Graph& g, const VertexSet& code, int r, int ell);

VerifyResult is_locating_dominating(const Graph& g, const VertexSet& code, int r);

// Separating-only code, r = 1: exactly one vertex with empty I-set, all
// I-sets pairwise distinct. On success *v0_out receives that vertex.
VerifyResult is_soc(const Graph& g, const VertexSet& code, std::size_t* v0_out = nullptr);

struct CoveringReport {
    bool at_least_mu;   // min |I_r| >= mu
    bool perfect;       // all |I_r| == mu
    std::size_t min_cover;
    std::size_t max_cover;
};
CoveringReport mu_fold_covering(const Graph& g, const VertexSet& code, int r, std::size_t mu);

// C stays r-identifying under every set of at most t edge edits
// (additions or deletions). t in {0,1,2}; edit enumeration guard 10^6.
VerifyResult is_t_edge_robust(const Graph& g, const VertexSet& code, int r, int t);

}  // namespace idcodes
