#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "idcodes/families.hpp"
#include "idcodes/util.hpp"
#include "idcodes/verify.hpp"

using namespace idcodes;

namespace {

VertexSet random_code(std::size_t n, std::mt19937& rng, double p = 0.5) {
    VertexSet c(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t v = 0; v < n; ++v)
        if (coin(rng)) c.add(v);
    return c;
}

}  // namespace

TEST_CASE("identifying sets") {
    Graph p6 = path_graph(6);
    for (std::size_t v = 0; v < 6; ++v)
        CHECK(identifying_set(p6, VertexSet::full(6), v, 1) == p6.ball(v, 1));
    CHECK(identifying_set(p6, VertexSet(6), 2, 1).empty());
    CHECK(identifying_set(p6, VertexSet::of(6, {1, 2, 5}), 0, 2) == VertexSet::of(6, {1, 2}));
}

TEST_CASE("plain identifying") {
    Graph c7 = cycle_graph(7);
    CHECK_FALSE(is_r_identifying(c7, VertexSet::full(7), 1).has_value());
    auto bad = is_r_identifying(c7, VertexSet(7), 1);
    REQUIRE(bad.has_value());
    CHECK(bad->kind == ViolationKind::Undominated);
}

TEST_CASE("ell = 1 agrees with the plain verifier") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 4 + rng() % 7;
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        VertexSet c = random_code(n, rng);
        CHECK(is_r_identifying(g, c, 1).has_value() ==
              is_r_l_identifying(g, c, 1, 1).has_value());
    }
}

TEST_CASE("ell = 2 on small hosts") {
    // any (1,<=2)-identifying code of F^4 needs at least 10 words
    Graph f4 = hypercube_graph(4);
    std::mt19937 rng(13);
    for (int t = 0; t < 10; ++t) {
        VertexSet c(16);
        while (c.count() < 9) c.add(rng() % 16);
        CHECK(is_r_l_identifying(f4, c, 1, 2).has_value());
    }
    // a star cannot separate {leaf} from {leaf, center}
    Graph star = star_graph(4);
    CHECK(is_r_l_identifying(star, VertexSet::full(4), 1, 2).has_value());
}

TEST_CASE("strongly identifying") {
    Graph c7 = cycle_graph(7);
    CHECK(is_strongly_identifying(c7, VertexSet(7), 1, 1).has_value());
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 4 + rng() % 5;
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        VertexSet c = random_code(n, rng, 0.7);
        if (!is_strongly_identifying(g, c, 1, 1))  // strong implies identifying
            CHECK_FALSE(is_r_identifying(g, c, 1).has_value());
    }
}

TEST_CASE("locating-dominating") {
    Graph p4 = path_graph(4);
    CHECK_FALSE(is_locating_dominating(p4, VertexSet::of(4, {0, 3}), 1).has_value());
    std::mt19937 rng(19);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 4 + rng() % 6;
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        CHECK_FALSE(is_locating_dominating(g, VertexSet::full(n), 1).has_value());
        VertexSet c = random_code(n, rng);
        if (!is_r_identifying(g, c, 1))  // every IdC is locating-dominating
            CHECK_FALSE(is_locating_dominating(g, c, 1).has_value());
    }
}

TEST_CASE("separating-only codes") {
    Graph f3 = hypercube_graph(3);
    bool found = false;
    for_each_subset(8, 3, 3, [&](const std::vector<std::size_t>& s) {
        VertexSet c(8);
        for (auto v : s) c.add(v);
        std::size_t v0 = 0;
        if (!is_soc(f3, c, &v0)) {
            CHECK(identifying_set(f3, c, v0, 1).empty());
            found = true;
            return false;
        }
        return true;
    });
    CHECK(found);

    // an identifying code leaves no vertex uncovered, so it is never a SOC
    CHECK(is_soc(f3, VertexSet::full(8)).has_value());

    // P3 admits no SOC at all
    Graph p3 = path_graph(3);
    for_each_subset(3, 0, 3, [&](const std::vector<std::size_t>& s) {
        VertexSet c(3);
        for (auto v : s) c.add(v);
        CHECK(is_soc(p3, c).has_value());
        return true;
    });
}

TEST_CASE("mu-fold coverings") {
    Graph c7 = cycle_graph(7);
    auto rep = mu_fold_covering(c7, VertexSet::full(7), 1, 3);
    CHECK(rep.at_least_mu);
    CHECK(rep.perfect);
    CHECK(rep.min_cover == 3);
    CHECK(rep.max_cover == 3);
    CHECK_FALSE(mu_fold_covering(c7, VertexSet::full(7), 1, 4).at_least_mu);
}

TEST_CASE("edge robustness") {
    std::mt19937 rng(23);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 4 + rng() % 4;
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        VertexSet c = random_code(n, rng, 0.7);
        // t = 0 robustness is exactly the plain check
        CHECK(is_t_edge_robust(g, c, 1, 0).has_value() ==
              is_r_identifying(g, c, 1).has_value());
        // robustness is monotone in t
        if (is_t_edge_robust(g, c, 1, 1)) CHECK(is_t_edge_robust(g, c, 1, 2).has_value());
    }
}

TEST_CASE("violation witnesses re-check as violations") {
    Graph p6 = path_graph(6);
    std::mt19937 rng(29);
    for (int t = 0; t < 40; ++t) {
        VertexSet c = random_code(6, rng, 0.4);
        auto res = is_r_identifying(p6, c, 1);
        if (!res) continue;
        if (res->kind == ViolationKind::Undominated) {
            CHECK(identifying_set(p6, c, res->vertices[0], 1).empty());
        } else {
            REQUIRE(res->vertices.size() == 1);
            REQUIRE(res->other_vertices.size() == 1);
            CHECK(identifying_set(p6, c, res->vertices[0], 1) ==
                  identifying_set(p6, c, res->other_vertices[0], 1));
        }
    }
}
