#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "idcodes/sat_reduction.hpp"
#include "idcodes/solve.hpp"
#include "idcodes/verify.hpp"

using namespace idcodes;
using sat::CnfFormula;

namespace {

bool satisfies(const CnfFormula& f, const std::vector<bool>& a) {
    for (const auto& cl : f.clauses) {
        bool ok = false;
        for (int lit : cl) {
            std::size_t j = static_cast<std::size_t>(std::abs(lit)) - 1;
            if ((lit > 0) == a[j]) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("formula validation") {
    CnfFormula f{2, {{1, -2, 2}}};
    CHECK_THROWS(f.validate());  // tautological clause
    CnfFormula g{2, {{1, 0, 2}}};
    CHECK_THROWS(g.validate());  // zero literal
    CnfFormula h{2, {{1, -3, 2}}};
    CHECK_THROWS(h.validate());  // variable out of range
    CnfFormula ok{3, {{1, -2, 3}}};
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("dimacs parsing") {
    std::stringstream in("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CnfFormula f = sat::read_dimacs(in);
    CHECK(f.num_vars == 3);
    CHECK(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::vector<int>{1, -2, 3});

    std::stringstream bad("p cnf 3 2\n1 -2 3 0\n");
    CHECK_THROWS(sat::read_dimacs(bad));  // clause count mismatch
    std::stringstream nohdr("1 2 3 0\n");
    CHECK_THROWS(sat::read_dimacs(nohdr));
}

TEST_CASE("reduction shape") {
    CnfFormula inst{3, {{1, -2, 3}}};
    auto red = sat::reduce_3sat(inst);
    CHECK(red.graph.order() == 6 * 3 + 2 * 1);
    CHECK(red.target_size == 3 * 3 + 1);
    CHECK(red.graph.is_r_twin_free(1));

    // variable gadget: six vertices, six internal edges
    CnfFormula novars{1, {}};
    auto vg = sat::reduce_3sat(novars);
    CHECK(vg.graph.order() == 6);
    CHECK(vg.graph.num_edges() == 6);
    CHECK(vg.graph.has_edge(vg.a(0), vg.b(0)));
    CHECK(vg.graph.has_edge(vg.b(0), vg.x(0)));
    CHECK(vg.graph.has_edge(vg.b(0), vg.xbar(0)));
    CHECK(vg.graph.has_edge(vg.c(0), vg.d(0)));
    CHECK(vg.graph.has_edge(vg.c(0), vg.x(0)));
    CHECK(vg.graph.has_edge(vg.c(0), vg.xbar(0)));

    // clause vertices attach to the literal vertices, respecting signs
    CHECK(red.graph.has_edge(red.alpha(0), red.beta(0)));
    CHECK(red.graph.has_edge(red.alpha(0), red.x(0)));
    CHECK(red.graph.has_edge(red.alpha(0), red.xbar(1)));
    CHECK(red.graph.has_edge(red.alpha(0), red.x(2)));
    CHECK_FALSE(red.graph.has_edge(red.alpha(0), red.xbar(0)));
}

TEST_CASE("canonical codes") {
    CnfFormula inst{3, {{1, -2, 3}}};
    auto red = sat::reduce_3sat(inst);
    CHECK(red.graph.order() == 20);
    CHECK(red.target_size == 10);

    std::vector<bool> asg{true, false, false};
    REQUIRE(satisfies(inst, asg));
    VertexSet code = sat::code_from_assignment(red, asg);
    CHECK(code.count() == red.target_size);
    CHECK_FALSE(is_r_identifying(red.graph, code, 1).has_value());
    for (std::size_t i = 0; i < red.num_clauses; ++i) CHECK(code.contains(red.alpha(i)));
    for (std::size_t j = 0; j < red.num_vars; ++j) {
        CHECK(code.contains(red.b(j)));
        CHECK(code.contains(red.c(j)));
    }
    CHECK(code.contains(red.x(0)));
    CHECK(code.contains(red.xbar(1)));

    auto back = sat::assignment_from_code(red, inst, code);
    REQUIRE(back.has_value());
    CHECK(satisfies(inst, *back));
}

TEST_CASE("brute sat") {
    CnfFormula f{3, {{1, 2, 3}}};
    auto m = sat::brute_sat(f);
    REQUIRE(m.has_value());
    CHECK(satisfies(f, *m));

    CnfFormula empty{2, {}};
    auto e = sat::brute_sat(empty);
    REQUIRE(e.has_value());
    CHECK(*e == std::vector<bool>{false, false});

    // all eight sign patterns over three variables: unsatisfiable
    CnfFormula unsat{3, {}};
    for (int s = 0; s < 8; ++s)
        unsat.clauses.push_back({(s & 1) ? 1 : -1, (s & 2) ? 2 : -2, (s & 4) ? 3 : -3});
    CHECK_FALSE(sat::brute_sat(unsat).has_value());
}

TEST_CASE("equivalence at desk scale") {
    std::mt19937 rng(53);
    for (int t = 0; t < 6; ++t) {
        CnfFormula f{3, {}};
        std::size_t m = 1 + rng() % 2;
        for (std::size_t i = 0; i < m; ++i)
            f.clauses.push_back({(rng() % 2) ? 1 : -1, (rng() % 2) ? 2 : -2,
                                 (rng() % 2) ? 3 : -3});
        f.validate();

        auto red = sat::reduce_3sat(f);
        auto model = sat::brute_sat(f);
        auto rep = min_id_code(red.graph, 1);
        if (model) {
            CHECK(rep.optimum == red.target_size);
            auto back = sat::assignment_from_code(red, f, rep.certificate);
            REQUIRE(back.has_value());
            CHECK(satisfies(f, *back));
        } else {
            CHECK(rep.optimum > red.target_size);
        }
    }
}
