#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "idcodes/vertex_set.hpp"

namespace idcodes {

inline constexpr int kInfDist = std::numeric_limits<int>::max();

struct GraphParameters {
    std::size_t num_edges = 0;
    std::size_t min_degree = 0;
    std::optional<int> radius;    // absent when disconnected
    std::optional<int> diameter;  // absent when disconnected
    std::size_t independence_number = 0;
};

// Finite undirected graph with dense bit-row adjacency. No self-loops,
// vertex ids 0..n-1. Immutable after construction; mutators return new graphs.
class Graph {
public:
    explicit Graph(std::size_t n = 0) : n_(n), rows_(n, VertexSet(n)) {}

    std::size_t order() const { return n_; }

    void add_edge(std::size_t u, std::size_t v);  // build-time only
    bool has_edge(std::size_t u, std::size_t v) const {
        return u < n_ && v < n_ && rows_[u].contains(v);
    }
    const VertexSet& neighbors(std::size_t v) const { return rows_[v]; }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }
    std::size_t num_edges() const;

    // Sorted edge list with u < v; generators are deterministic through this.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    // Hop distances from one vertex (kInfDist when unreachable).
    std::vector<int> bfs_distances(std::size_t src) const;
    // Full matrix; memoized on first use.
    const std::vector<std::vector<int>>& distances() const;

    int distance(std::size_t u, std::size_t v) const { return distances()[u][v]; }
    bool is_connected() const;

    // Closed ball {u : d(u,v) <= r}; tables memoized per radius.
    const VertexSet& ball(std::size_t v, int r) const;
    // Open ball: ball minus the center.
    VertexSet open_ball(std::size_t v, int r) const;

    // Twin check; witness = lexicographically smallest pair with equal r-balls.
    bool is_r_twin_free(int r, std::pair<std::size_t, std::size_t>* witness = nullptr) const;

    struct RemovalResult;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    RemovalResult remove_vertex(std::size_t v) const;
    Graph remove_edge(std::size_t u, std::size_t v) const;  // throws if absent
    Graph with_edge(std::size_t u, std::size_t v) const;    // throws if present

    // Exhaustive induced-P_L search; guarded for small graphs.
    bool has_induced_path(std::size_t path_len) const;

    GraphParameters parameters() const;

private:
    std::size_t n_;
    std::vector<VertexSet> rows_;
    mutable std::vector<std::vector<int>> dist_;              // lazy
    mutable std::map<int, std::vector<VertexSet>> ball_tab_;  // lazy per radius
};

struct Graph::RemovalResult {
    Graph graph;
    std::vector<std::size_t> old_to_new;  // removed vertex maps to npos
};

// Exact maximum independent set via branch and bound with a greedy
// colouring bound; guard n <= 40.
std::size_t independence_number(const Graph& g);

}  // namespace idcodes
