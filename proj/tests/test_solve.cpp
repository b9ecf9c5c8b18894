#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "idcodes/families.hpp"
#include "idcodes/solve.hpp"
#include "idcodes/verify.hpp"

using namespace idcodes;

TEST_CASE("exact values on small hosts") {
    CHECK(min_id_code(cycle_graph(7), 2).optimum == 4);
    CHECK(min_id_code(path_graph(6), 2).optimum == 5);
    CHECK(min_id_code(hypercube_graph(3), 1).optimum == 4);

    auto gap = gap_graph(3);
    CHECK(min_id_code(gap.graph, 1).optimum == 4);
    CHECK(gap.code.count() == 4);
}

TEST_CASE("certificates verify") {
    for (auto [g, r] : {std::pair{cycle_graph(7), 2}, {path_graph(6), 2},
                        {hypercube_graph(3), 1}}) {
        auto rep = min_id_code(g, r);
        CHECK(rep.certificate.count() == rep.optimum);
        CHECK_FALSE(is_r_identifying(g, rep.certificate, r).has_value());
    }
}

TEST_CASE("sandwich bounds on paths") {
    for (int r = 1; r <= 3; ++r) {
        std::size_t n = 2 * static_cast<std::size_t>(r) + 1;
        auto rep = min_id_code(path_graph(n), r);
        CHECK(rep.optimum >= static_cast<std::size_t>(std::ceil(std::log2(n + 1.0))));
        CHECK(rep.optimum <= n - 1);
    }
}

TEST_CASE("twins abort the solve") {
    CHECK_THROWS_AS(min_id_code(complete_graph(4), 1), TwinsPresent);
    CHECK_THROWS_AS(min_id_code(cycle_graph(7), 3), TwinsPresent);
}

TEST_CASE("counting optimal codes") {
    // every (n-1)-subset of C_{2r+2} is r-identifying, nothing smaller is
    for (int r = 1; r <= 2; ++r) {
        std::size_t n = 2 * static_cast<std::size_t>(r) + 2;
        auto rep = count_min_id_codes(cycle_graph(n), r);
        CHECK(rep.optimum == n - 1);
        CHECK(rep.count == n);
    }

    auto f3 = count_min_id_codes(hypercube_graph(3), 1);
    CHECK(f3.optimum == 4);
    CHECK(f3.count == 56);

    // counts multiply across disjoint-union components
    Graph two_c4(8);
    for (std::size_t i = 0; i < 4; ++i) {
        two_c4.add_edge(i, (i + 1) % 4);
        two_c4.add_edge(4 + i, 4 + (i + 1) % 4);
    }
    auto rep = count_min_id_codes(two_c4, 1);
    CHECK(rep.optimum == 6);
    CHECK(rep.count == 16);
}

TEST_CASE("separating-only codes") {
    auto f3 = count_min_socs(hypercube_graph(3));
    CHECK(f3.optimum == 3);
    CHECK(f3.count == 32);
    CHECK_THROWS_AS(min_soc(path_graph(3)), NoSocExists);

    // sigma is within one of Id_1
    std::mt19937 rng(31);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 4 + rng() % 4;
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        if (!g.is_r_twin_free(1)) continue;
        std::size_t id = min_id_code(g, 1).optimum;
        try {
            std::size_t sigma = min_soc(g).optimum;
            CHECK(sigma + 1 >= id);
            CHECK(sigma <= id);
        } catch (const NoSocExists&) {
        }
    }
}

TEST_CASE("locating-dominating codes") {
    auto p4 = min_ld_code(path_graph(4), 1);
    CHECK(p4.optimum == 2);
    CHECK_FALSE(is_locating_dominating(path_graph(4), p4.certificate, 1).has_value());

    auto star = min_ld_code(star_graph(5), 1);
    CHECK_FALSE(is_locating_dominating(star_graph(5), star.certificate, 1).has_value());

    // LD is never harder than identifying
    std::mt19937 rng(37);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 4 + rng() % 4;
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        if (!g.is_r_twin_free(1)) continue;
        CHECK(min_ld_code(g, 1).optimum <= min_id_code(g, 1).optimum);
    }
}

TEST_CASE("terminal graphs") {
    CHECK(is_r_terminal(path_graph(5), 2).terminal);
    CHECK(is_r_terminal(path_graph(7), 3).terminal);
    CHECK_FALSE(is_r_terminal(path_graph(3), 1).terminal);
    CHECK_FALSE(is_r_terminal(path_graph(6), 1).terminal);

    auto rep = is_r_terminal(terminal_example(3), 3);
    CHECK(rep.terminal);
    for (const auto& w : rep.witnesses) CHECK(w.has_value());
}

TEST_CASE("removal delta") {
    auto rd = removal_delta_vertex(cycle_graph(7), 0, 2);
    CHECK(rd.before.optimum == 4);
    CHECK(rd.after.optimum == 5);
    CHECK(rd.delta == -1);
}

TEST_CASE("solver agrees with the exhaustive oracle") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 12) {
        std::size_t n = 4 + rng() % 5;
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        auto oracle = exhaustive_min_id_code(g, 1);
        if (!oracle) {
            CHECK_THROWS_AS(min_id_code(g, 1), TwinsPresent);
        } else {
            CHECK(min_id_code(g, 1).optimum == *oracle);
        }
        ++done;
    }
}

TEST_CASE("node budget") {
    SolveOptions opts;
    opts.node_budget = 1;
    CHECK_THROWS_AS(min_id_code(hypercube_graph(4), 1, opts), BudgetExceeded);
}
