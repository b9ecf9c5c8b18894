#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

struct SolveOptions {
    uint64_t node_budget = UINT64_MAX;
    double time_budget_seconds = 0;  // 0 = unlimited
    // Externally certified lower bound (e.g. a Hamming-space bound); the
    // search closes as soon as the incumbent meets it.
    std::optional<std::size_t> known_lower_bound;
};

struct SolveReport {
    std::size_t optimum = 0;
    VertexSet certificate;
    std::optional<uint64_t> count;  // number of optimal labelled codes
    std::string lower_bound_used;   // which bound closed the search
    uint64_t nodes_explored = 0;
};

struct TwinsPresent : std::runtime_error {
    std::size_t u, v;
    TwinsPresent(std::size_t u_, std::size_t v_)
        : std::runtime_error("graph has r-twins"), u(u_), v(v_) {}
};

struct BudgetExceeded : std::runtime_error {
    std::size_t best_lower, best_upper;
    uint64_t nodes;
    BudgetExceeded(std::size_t lo, std::size_t hi, uint64_t n)
        : std::runtime_error("solve budget exceeded"), best_lower(lo), best_upper(hi), nodes(n) {}
};

struct NoSocExists : std::runtime_error {
    NoSocExists() : std::runtime_error("graph admits no SOC") {}
};

// Minimum r-identifying code. Throws TwinsPresent when G has r-twins.
SolveReport min_id_code(const Graph& g, int r, const SolveOptions& opts = {});

// As above plus the exact count of optimal labelled codes.
SolveReport count_min_id_codes(const Graph& g, int r, const SolveOptions& opts = {});

// Minimum separating-only code (r = 1). Throws NoSocExists.
SolveReport min_soc(const Graph& g, const SolveOptions& opts = {});
SolveReport count_min_socs(const Graph& g, const SolveOptions& opts = {});

// Minimum r-locating-dominating code (defined for every graph).
SolveReport min_ld_code(const Graph& g, int r, const SolveOptions& opts = {});
SolveReport count_min_ld_codes(const Graph& g, int r, const SolveOptions& opts = {});

struct TerminalReport {
    bool terminal = false;
    // for each vertex: the twin pair created by deleting it (new ids mapped
    // back to original ids), or nullopt when deletion keeps twin-freeness
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> witnesses;
};
TerminalReport is_r_terminal(const Graph& g, int r);

struct RemovalDelta {
    SolveReport before, after;
    long long delta;  // Id_r(G) - Id_r(G')
};
RemovalDelta removal_delta_vertex(const Graph& g, std::size_t v, int r,
                                  const SolveOptions& opts = {});
RemovalDelta removal_delta_edge(const Graph& g, std::size_t u, std::size_t v, int r,
                                const SolveOptions& opts = {});

// Exhaustive-enumeration oracle over all 2^n subsets (test oracle; n <= 24).
std::optional<std::size_t> exhaustive_min_id_code(const Graph& g, int r);

}  // namespace idcodes
