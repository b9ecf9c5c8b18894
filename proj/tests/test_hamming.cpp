#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "idcodes/families.hpp"
#include "idcodes/hamming.hpp"
#include "idcodes/solve.hpp"
#include "idcodes/verify.hpp"

using namespace idcodes;
namespace hm = idcodes::hamming;

namespace {

VertexSet to_vertex_set(const hm::Code& c) {
    VertexSet s(std::size_t{1} << c.len);
    for (hm::Word w : c.words) s.add(w);
    return s;
}

hm::Code all_words(unsigned n) {
    std::vector<hm::Word> ws(std::size_t{1} << n);
    for (hm::Word w = 0; w < ws.size(); ++w) ws[w] = w;
    return hm::Code::make(n, std::move(ws));
}

}  // namespace

TEST_CASE("ball sizes") {
    CHECK(hm::ball_size(5, 1) == 6);
    CHECK(hm::ball_size(7, 2) == 29);
    for (unsigned n = 1; n <= 10; ++n) CHECK(hm::ball_size(n, 0) == 1);
    CHECK(hm::ball_size(4, 4) == 16);
}

TEST_CASE("radius-1 ball intersections") {
    CHECK(hm::ball_intersection_size(0b0101, 0b0101, 4) == 5);
    CHECK(hm::ball_intersection_size(0b000, 0b011, 3) == 2);
    CHECK(hm::ball_intersection_size(0b000, 0b111, 3) == 0);

    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        unsigned n = 2 + rng() % 7;
        hm::Word x = rng() & ((1u << n) - 1), y = rng() & ((1u << n) - 1);
        uint64_t brute = 0;
        for (hm::Word w = 0; w < (1u << n); ++w)
            if (hm::distance(w, x) <= 1 && hm::distance(w, y) <= 1) ++brute;
        CHECK(hm::ball_intersection_size(x, y, n) == brute);
    }
}

TEST_CASE("Code::make sorts and dedups") {
    auto c = hm::Code::make(3, {5, 1, 5, 2});
    CHECK(c.words == std::vector<hm::Word>{1, 2, 5});
    CHECK_THROWS(hm::Code::make(3, {8}));
}

TEST_CASE("fast identifying checks") {
    CHECK(hm::is_idc_fast(hm::Code::make(2, {0b00, 0b01, 0b10}), 1));
    for (unsigned n = 2; n <= 5; ++n) CHECK(hm::is_idc_fast(all_words(n), 1));

    std::mt19937 rng(43);
    for (int t = 0; t < 100; ++t) {
        unsigned n = 2 + rng() % 5;
        std::vector<hm::Word> ws;
        for (hm::Word w = 0; w < (1u << n); ++w)
            if (rng() % 2) ws.push_back(w);
        auto c = hm::Code::make(n, std::move(ws));
        unsigned r = 1 + rng() % 2;
        Graph h = hypercube_graph(n);
        CHECK(hm::is_idc_fast(c, r) ==
              !is_r_identifying(h, to_vertex_set(c), static_cast<int>(r)).has_value());
        if (n <= 4)
            CHECK(hm::is_l_idc_fast(c, 1, 2) ==
                  !is_r_l_identifying(h, to_vertex_set(c), 1, 2).has_value());
    }
}

TEST_CASE("cover stats match the graph verifier") {
    std::mt19937 rng(47);
    for (int t = 0; t < 30; ++t) {
        unsigned n = 2 + rng() % 4;
        std::vector<hm::Word> ws;
        for (hm::Word w = 0; w < (1u << n); ++w)
            if (rng() % 2) ws.push_back(w);
        if (ws.empty()) continue;
        auto c = hm::Code::make(n, std::move(ws));
        auto st = hm::cover_stats(c, 1);
        auto rep = mu_fold_covering(hypercube_graph(n), to_vertex_set(c), 1, 2);
        CHECK(st.min_cover == rep.min_cover);
        CHECK(st.max_cover == rep.max_cover);
        CHECK(hm::is_mu_covering_fast(c, 1, 2) == rep.at_least_mu);
    }
}

TEST_CASE("pi(u) construction") {
    CHECK(hm::parity_bit(0b000) == 0);
    CHECK(hm::parity_bit(0b011) == 0);
    CHECK(hm::parity_bit(0b100) == 1);

    // a 1-IdC of F^3 that is also a 2-fold 1-covering
    auto c = hm::Code::make(3, {0b000, 0b001, 0b010, 0b110, 0b111});
    REQUIRE(hm::is_idc_fast(c, 1));
    REQUIRE(hm::cover_stats(c, 1).min_cover >= 2);

    auto out = hm::pi_u_construction(c);
    CHECK(out.len == 7);
    CHECK(out.size() == (std::size_t{1} << 3) * c.size());
    CHECK(hm::is_idc_fast(out, 1));
    CHECK(hm::cover_stats(out, 1).min_cover >= 2);

    CHECK(hm::pi_u_construction(hm::Code::make(2, {0b01})).len == 5);
}

TEST_CASE("direct sums") {
    auto a = hm::Code::make(2, {0, 3});
    auto b = hm::Code::make(3, {1, 2, 4});
    auto s = hm::direct_sum(a, b);
    CHECK(s.len == 5);
    CHECK(s.size() == a.size() * b.size());

    // (1,<=2)-IdC of F^4 stays (1,<=2)-identifying after adding a free bit
    auto c4 = all_words(4);
    REQUIRE(hm::is_l_idc_fast(c4, 1, 2));
    auto c5 = hm::direct_sum(c4, all_words(1));
    CHECK(c5.len == 5);
    CHECK(hm::is_l_idc_fast(c5, 1, 2));
}

TEST_CASE("lower bounds") {
    CHECK(hm::best_lower_bound(5, 1, 1) == 10);
    CHECK(hm::best_lower_bound(6, 1, 1) >= 18);
    CHECK(hm::best_lower_bound(4, 1, 2) == 10);

    bool saw_18 = false;
    for (const auto& b : hm::lower_bounds(6, 1, 1))
        if (b.value == 18) saw_18 = true;
    CHECK(saw_18);

    // soundness against exact optima
    CHECK(hm::best_lower_bound(2, 1, 1) <= 3);
    CHECK(hm::best_lower_bound(3, 1, 1) <= 4);
    CHECK(hm::best_lower_bound(4, 1, 1) <= 7);
    CHECK(hm::best_lower_bound(3, 1, 1) <=
          min_id_code(hypercube_graph(3), 1).optimum);
}

TEST_CASE("covering radius") {
    for (unsigned n = 1; n <= 5; ++n) {
        CHECK(hm::min_covering_radius(n, 1) == n);
        CHECK(hm::min_covering_radius(n, std::size_t{1} << n) == 0);
    }
    CHECK(hm::min_covering_radius(3, 2) == 1);
}

TEST_CASE("covering characterizations") {
    auto rep = hm::covering_characterizations(all_words(4), 3);
    CHECK(rep.fold_2l_minus_1);  // V(4,1) = 5 = 2l-1
    CHECK(rep.l_identifying);
    CHECK(rep.iff_checked);

    auto rep2 = hm::covering_characterizations(all_words(5), 3);
    CHECK(rep2.fold_2l_minus_1);

    // at l = 2 only one direction holds; an l-identifying code must be a
    // 3-fold covering
    auto rep3 = hm::covering_characterizations(all_words(4), 2);
    CHECK_FALSE(rep3.iff_checked);
    if (rep3.l_identifying) CHECK(rep3.fold_2l_minus_1);
}

TEST_CASE("known values table") {
    uint64_t expect[] = {0, 0, 3, 4, 7, 10, 19, 32};
    for (unsigned n = 2; n <= 7; ++n) {
        bool found = false;
        for (const auto& kv : hm::known_values())
            if (kv.n == n && kv.r == 1) {
                CHECK(kv.value == expect[n]);
                CHECK_FALSE(kv.provenance.empty());
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("code text round-trip") {
    auto c = hm::Code::make(4, {0b0000, 0b0110, 0b1111});
    std::stringstream ss;
    hm::write_code(ss, c);
    auto back = hm::read_code(ss);
    CHECK(back.len == c.len);
    CHECK(back.words == c.words);

    std::stringstream bad("01\n0110\n");
    CHECK_THROWS(hm::read_code(bad));
}
