#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "idcodes/families.hpp"
#include "idcodes/verify.hpp"

using namespace idcodes;

TEST_CASE("basic generators") {
    Graph p3 = path_graph(3);
    CHECK(p3.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});

    Graph c4 = cycle_graph(4);
    CHECK(c4.order() == 4);
    CHECK(c4.num_edges() == 4);

    Graph s4 = star_graph(4);
    CHECK(s4.degree(0) == 3);
    CHECK(s4.num_edges() == 3);

    CHECK(complete_minus_matching(6).num_edges() == 12);

    Graph q3 = hypercube_graph(3);
    CHECK(q3.order() == 8);
    CHECK(q3.num_edges() == 12);
    CHECK(q3.has_edge(0b000, 0b100));
    CHECK_FALSE(q3.has_edge(0b000, 0b110));
}

TEST_CASE("terminal example") {
    Graph t3 = terminal_example(3);
    CHECK(t3.order() == 11);
    CHECK(t3.is_r_twin_free(3));
    CHECK(t3.parameters().min_degree == 1);
}

TEST_CASE("gap graph") {
    for (int k = 2; k <= 4; ++k) {
        GapGraph gg = gap_graph(k);
        CHECK(gg.graph.order() == (std::size_t{1} << (k + 1)) - k - 1);
        CHECK(gg.code.count() == static_cast<std::size_t>(k) + 1);
        CHECK(gg.code.contains(gg.v));
        CHECK_FALSE(is_r_identifying(gg.graph, gg.code, 1).has_value());
    }
    CHECK(gap_graph(2).graph.order() == 5);
    CHECK(gap_graph(3).graph.order() == 12);
}

TEST_CASE("comb graph") {
    CombGraph c35 = comb_graph(3, 5, CombVariant::ExtrasNonadjacent);
    CHECK(c35.graph.order() == 17);
    CHECK(c35.graph.is_r_twin_free(3));

    CombGraph c21 = comb_graph(2, 1, CombVariant::ExtrasNonadjacent);
    CHECK(c21.graph.order() == 4);

    CombGraph adj = comb_graph(3, 5, CombVariant::ExtrasAdjacent);
    CHECK(adj.graph.order() == 17);
    CHECK(adj.graph.num_edges() == c35.graph.num_edges() + 1);
}

TEST_CASE("g series") {
    Graph g1 = g_series(1);
    CHECK(g1.order() == 25);
    CHECK(g1.is_connected());
    CHECK(g1.degree(24) == 24);  // apex

    Graph g2 = g_series(2);
    CHECK(g2.order() == 76);
    CHECK(g2.is_connected());
    CHECK(g2.degree(75) == 75);
}

TEST_CASE("dispatch is deterministic") {
    Graph a = make_family("cycle", {7});
    Graph b = make_family("cycle", {7});
    CHECK(a.edges() == b.edges());
    CHECK(a.edges() == cycle_graph(7).edges());

    CHECK(make_family("hypercube", {3}).edges() == hypercube_graph(3).edges());
    CHECK(make_family("gseries", {1}).order() == 25);
    CHECK_THROWS(make_family("nosuch", {1}));
}
