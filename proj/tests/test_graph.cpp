#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "idcodes/families.hpp"
#include "idcodes/graph.hpp"

using namespace idcodes;

TEST_CASE("distances on paths and cycles") {
    Graph p5 = path_graph(5);
    CHECK(p5.distance(0, 4) == 4);
    CHECK(p5.distance(2, 2) == 0);

    Graph c7 = cycle_graph(7);
    CHECK(c7.distance(0, 4) == 3);  // wraps around
    CHECK(c7.distance(0, 3) == 3);
}

TEST_CASE("balls") {
    Graph p5 = path_graph(5);
    CHECK(p5.ball(2, 1) == VertexSet::of(5, {1, 2, 3}));
    CHECK(p5.ball(2, 0) == VertexSet::of(5, {2}));

    Graph c7 = cycle_graph(7);
    CHECK(c7.ball(0, 2) == VertexSet::of(7, {0, 1, 2, 5, 6}));

    // monotone in r
    for (int r = 0; r < 4; ++r)
        for (std::size_t v = 0; v < 7; ++v)
            CHECK(c7.ball(v, r).is_subset_of(c7.ball(v, r + 1)));
}

TEST_CASE("twin-freeness") {
    for (int r = 1; r <= 3; ++r) {
        Graph p = path_graph(2 * static_cast<std::size_t>(r) + 1);
        CHECK(p.is_r_twin_free(r));
    }
    Graph k4 = complete_graph(4);
    std::pair<std::size_t, std::size_t> w;
    CHECK_FALSE(k4.is_r_twin_free(1, &w));
    CHECK(w == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("vertex removal") {
    Graph c7 = cycle_graph(7);
    auto res = c7.remove_vertex(0);
    CHECK(res.graph.order() == 6);
    CHECK(res.graph.num_edges() == 5);  // C7 minus a vertex is P6
    CHECK(res.graph.is_connected());
    CHECK(res.old_to_new[0] == Graph::npos);

    Graph p3 = path_graph(3);
    auto mid = p3.remove_vertex(1);
    CHECK(mid.graph.num_edges() == 0);
    CHECK_FALSE(mid.graph.is_connected());
}

TEST_CASE("edge mutators round-trip") {
    Graph p5 = path_graph(5);
    Graph g = p5.remove_edge(1, 2);
    CHECK_FALSE(g.has_edge(1, 2));
    Graph back = g.with_edge(1, 2);
    CHECK(back.edges() == p5.edges());
    CHECK_THROWS(p5.with_edge(0, 1));
    CHECK_THROWS(p5.remove_edge(0, 2));
}

TEST_CASE("induced paths") {
    CHECK(path_graph(5).has_induced_path(5));
    CHECK_FALSE(complete_graph(4).has_induced_path(3));
    CHECK(cycle_graph(7).has_induced_path(5));
    CHECK_FALSE(cycle_graph(7).has_induced_path(7));
}

TEST_CASE("graph parameters") {
    auto p7 = path_graph(7).parameters();
    CHECK(p7.radius == 3);
    CHECK(p7.diameter == 6);
    CHECK(p7.min_degree == 1);
    CHECK(p7.num_edges == 6);
    CHECK(p7.independence_number == 4);

    auto km = complete_minus_matching(6).parameters();
    CHECK(km.num_edges == 12);
    CHECK(km.min_degree == 4);

    CHECK(cycle_graph(7).parameters().independence_number == 3);

    auto two = path_graph(2).remove_edge(0, 1).parameters();
    CHECK_FALSE(two.radius.has_value());
    CHECK_FALSE(two.diameter.has_value());
}

TEST_CASE("bfs distances match memoized matrix") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 4 + rng() % 7;
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        for (std::size_t v = 0; v < n; ++v)
            CHECK(g.bfs_distances(v) == g.distances()[v]);
    }
}
