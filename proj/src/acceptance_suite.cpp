#include "idcodes/acceptance.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "idcodes/families.hpp"
#include "idcodes/grid.hpp"
#include "idcodes/hamming.hpp"
#include "idcodes/sat_reduction.hpp"
#include "idcodes/solve.hpp"
#include "idcodes/verify.hpp"

namespace idcodes {
namespace {

struct Table {
    std::ostream& out;
    int failures = 0;

    void row(int id, const std::string& name, const std::string& expected,
             const std::string& got) {
        bool ok = expected == got;
        if (!ok) ++failures;
        out << "criterion " << id << " [" << name << "] expected=" << expected
            << " got=" << got << (ok ? " PASS" : " FAIL") << "\n";
    }
};

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

hamming::Code random_hamming_code(std::mt19937_64& rng, unsigned n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<hamming::Word> ws;
    for (hamming::Word w = 0; w < (hamming::Word{1} << n); ++w)
        if (coin(rng)) ws.push_back(w);
    return hamming::Code::make(n, std::move(ws));
}

// ---- criteria 1-6, 9, 11: exact solver values ----

void criterion1(Table& t) {
    std::size_t c7 = min_id_code(cycle_graph(7), 2).optimum;
    std::size_t p6 = min_id_code(path_graph(6), 2).optimum;
    std::ostringstream got;
    got << "Id2(C7)=" << c7 << ",Id2(P6)=" << p6;
    t.row(1, "cycle-path-r2", "Id2(C7)=4,Id2(P6)=5", got.str());
}

void criterion2(Table& t) {
    std::ostringstream exp, got;
    exp << "3,4,7,10(lb=10,verified)";
    for (unsigned n = 2; n <= 4; ++n) {
        got << min_id_code(hypercube_graph(n), 1).optimum << ",";
    }
    uint64_t lb = hamming::best_lower_bound(5, 1, 1);
    SolveOptions opts;
    opts.known_lower_bound = static_cast<std::size_t>(lb);
    SolveReport rep = min_id_code(hypercube_graph(5), 1, opts);
    std::vector<hamming::Word> ws;
    for (std::size_t v : rep.certificate.to_vector())
        ws.push_back(static_cast<hamming::Word>(v));
    bool verified = hamming::is_idc_fast(hamming::Code::make(5, ws), 1);
    got << rep.optimum << "(lb=" << lb << "," << (verified ? "verified" : "unverified") << ")";
    t.row(2, "hypercube-r1", exp.str(), got.str());
}

void criterion3(Table& t) {
    std::ostringstream got;
    for (int r = 1; r <= 3; ++r) {
        if (r > 1) got << ",";
        got << min_id_code(hypercube_graph(r + 1), r).optimum;
    }
    t.row(3, "full-space-radius", "3,7,15", got.str());
}

void criterion4(Table& t) {
    std::ostringstream got;
    got << min_id_code(hypercube_graph(4), 2).optimum;
    t.row(4, "f4-r2", "6", got.str());
}

void criterion5(Table& t) {
    Graph f3 = hypercube_graph(3);
    SolveReport soc = count_min_socs(f3);
    SolveReport idc = count_min_id_codes(f3, 1);
    std::ostringstream got;
    got << "sigma=" << soc.optimum << ",mu=" << *soc.count << ",nu=" << *idc.count;
    t.row(5, "f3-counts", "sigma=3,mu=32,nu=56", got.str());
}

void criterion6(Table& t) {
    SolveReport rep = count_min_id_codes(g_series(1), 1);
    std::ostringstream got;
    got << "Id=" << rep.optimum << ",nu=" << *rep.count;
    t.row(6, "g1-count", "Id=12,nu=476672", got.str());
}

void criterion9(Table& t) {
    // the extras-nonadjacent variant reproduces the published pair; with the
    // extras joined by an edge the path ends become 3-twins
    CombGraph cg = comb_graph(3, 5, CombVariant::ExtrasNonadjacent);
    std::size_t before = min_id_code(cg.graph, 3).optimum;
    std::size_t after = min_id_code(cg.graph.remove_vertex(cg.v).graph, 3).optimum;
    std::ostringstream got;
    got << "variant=nonadjacent,Id3=" << before << ",Id3_minus_v=" << after;
    t.row(9, "comb-graph", "variant=nonadjacent,Id3=13,Id3_minus_v=8", got.str());
}

void criterion11(Table& t) {
    std::ostringstream got;
    got << (is_r_terminal(path_graph(5), 2).terminal ? "P5:2t" : "P5:no") << ","
        << (is_r_terminal(path_graph(7), 3).terminal ? "P7:3t" : "P7:no") << ","
        << (is_r_terminal(path_graph(3), 1).terminal ? "P3:1t" : "P3:no") << ","
        << (is_r_terminal(terminal_example(3), 3).terminal ? "ex3:3t" : "ex3:no");
    t.row(11, "terminal-graphs", "P5:2t,P7:3t,P3:no,ex3:3t", got.str());
}

// ---- criterion 7: grid densities ----

std::string grid_entry(const std::optional<grid::PeriodicCode>& pc, int r) {
    using namespace grid;
    if (!pc) return "none";
    Rational den = pc->density();
    int width = std::max(pc->lattice.a, pc->lattice.d) + 6 * r + 6;
    bool ok = !verify_periodic(*pc, r) && !window_check(*pc, r, width);
    std::ostringstream s;
    s << den.num << "/" << den.den << (ok ? "" : "!bad");
    return s.str();
}

void criterion7(Table& t) {
    using namespace grid;
    std::ostringstream got;
    got << "tri=" << grid_entry(search_tiles(Kind::Triangular, 1, 4, 1), 1);
    // no index-9 periodic pattern exists; the 2/9 density needs index 18
    got << ",king1@9=" << grid_entry(search_tiles(Kind::King, 1, 9, 2), 1);
    got << ",king1@18=" << grid_entry(search_tiles(Kind::King, 1, 18, 4), 1);
    for (int r = 2; r <= 4; ++r)
        got << ",kinggen" << r << "=" << grid_entry(king_construction(r), r);
    got << ",square=" << grid_entry(search_tiles(Kind::Square, 1, 20, 7), 1);
    // parity forces even lattice index in the hexagonal grid, so the 4/19
    // density is realized at index 38 with 8 codewords
    SearchOptions anneal;
    anneal.mode = SearchMode::Anneal;
    anneal.seed = 1;
    got << ",hex=" << grid_entry(search_tiles(Kind::Hexagonal, 2, 38, 8, anneal), 2);
    t.row(7, "grid-densities",
          "tri=1/4,king1@9=none,king1@18=2/9,kinggen2=1/8,kinggen3=1/12,"
          "kinggen4=1/16,square=7/20,hex=4/19",
          got.str());
}

// ---- criterion 8: reduction equivalence ----

void criterion8(Table& t) {
    using namespace sat;
    std::vector<std::vector<int>> all;
    for (int m = 0; m < 8; ++m)
        all.push_back({(m & 1) ? 1 : -1, (m & 2) ? 2 : -2, (m & 4) ? 3 : -3});
    int checked = 0, bad = 0;
    auto run_one = [&](const std::vector<std::vector<int>>& clauses) {
        CnfFormula f;
        f.num_vars = 3;
        f.clauses = clauses;
        Reduction red = reduce_3sat(f);
        auto model = brute_sat(f);
        SolveReport rep = min_id_code(red.graph, 1);
        bool ok = model ? rep.optimum == red.target_size : rep.optimum > red.target_size;
        if (model) {
            VertexSet canonical = code_from_assignment(red, *model);
            ok = ok && canonical.count() == red.target_size &&
                 !is_r_identifying(red.graph, canonical, 1);
            auto back = assignment_from_code(red, f, rep.certificate);
            ok = ok && back.has_value();
        }
        ++checked;
        if (!ok) ++bad;
    };
    for (int i = 0; i < 8; ++i) {
        run_one({all[i]});
        for (int j = i; j < 8; ++j) {
            run_one({all[i], all[j]});
            for (int k = j; k < 8; ++k) run_one({all[i], all[j], all[k]});
        }
    }
    run_one(all);  // the one unsatisfiable shape (all eight sign patterns)
    std::ostringstream got;
    got << "instances=" << checked << ",failures=" << bad;
    t.row(8, "sat-equivalence", "instances=165,failures=0", got.str());
}

// ---- criterion 10: property suites ----

struct Suite {
    int instances = 0, failures = 0;
    void check(bool ok) {
        ++instances;
        if (!ok) ++failures;
    }
};

Suite solver_vs_oracle_and_sandwich(std::mt19937_64& rng) {
    Suite s;
    std::uniform_int_distribution<std::size_t> nd(2, 9);
    std::uniform_real_distribution<double> pd(0.2, 0.7);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = nd(rng);
        Graph g = random_graph(rng, n, pd(rng));
        int r = 1 + i % 2;
        auto oracle = exhaustive_min_id_code(g, r);
        try {
            SolveReport rep = min_id_code(g, r);
            bool ok = oracle && *oracle == rep.optimum;
            if (g.is_connected() && n >= static_cast<std::size_t>(2 * r + 1)) {
                std::size_t lb =
                    static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n + 1))));
                ok = ok && rep.optimum >= lb && rep.optimum <= n - 1;
            }
            s.check(ok);
        } catch (const TwinsPresent&) {
            s.check(!oracle.has_value());
        }
    }
    return s;
}

Suite fast_vs_generic(std::mt19937_64& rng) {
    Suite s;
    std::vector<Graph> cubes;
    for (unsigned n = 0; n <= 6; ++n) cubes.push_back(hypercube_graph(n));
    for (int i = 0; i < 60; ++i) {
        unsigned n = 2 + i % 5;
        hamming::Code c = random_hamming_code(rng, n, 0.5);
        if (c.words.empty()) c.words.push_back(0);
        VertexSet vs(std::size_t{1} << n);
        for (hamming::Word w : c.words) vs.add(w);
        int r = 1 + i % 2;
        bool fast = hamming::is_idc_fast(c, r);
        bool generic = !is_r_identifying(cubes[n], vs, r);
        s.check(fast == generic);
        if (n <= 4) {
            bool fast2 = hamming::is_l_idc_fast(c, 1, 2);
            bool generic2 = !is_r_l_identifying(cubes[n], vs, 1, 2);
            s.check(fast2 == generic2);
        }
    }
    return s;
}

Suite induced_path_property(std::mt19937_64& rng) {
    Suite s;
    std::uniform_int_distribution<std::size_t> nd(5, 12);
    std::uniform_real_distribution<double> pd(0.15, 0.5);
    for (int a = 0; a < 20000 && s.instances < 50; ++a) {
        Graph g = random_graph(rng, nd(rng), pd(rng));
        if (g.num_edges() == 0) continue;
        for (int r = 1; r <= 2 && s.instances < 50; ++r)
            if (g.is_r_twin_free(r)) s.check(g.has_induced_path(2 * r + 1));
    }
    return s;
}

Suite pi_u_property(std::mt19937_64& rng) {
    Suite s;
    for (int a = 0; a < 20000 && s.instances < 50; ++a) {
        hamming::Code c = random_hamming_code(rng, 3, 0.55);
        if (!hamming::is_idc_fast(c, 1) || hamming::cover_stats(c, 1).min_cover < 2) continue;
        hamming::Code p = hamming::pi_u_construction(c);
        s.check(p.len == 7 && hamming::is_idc_fast(p, 1) &&
                hamming::cover_stats(p, 1).min_cover >= 2);
    }
    return s;
}

Suite characterization_property(std::mt19937_64& rng) {
    Suite s;
    for (int a = 0; a < 20000 && s.instances < 50; ++a) {
        hamming::Code c = random_hamming_code(rng, 4, 0.6);
        if (c.words.empty()) continue;
        try {
            auto rep = hamming::covering_characterizations(c, 3);
            s.check(rep.iff_checked);  // the iff is asserted inside; no throw = holds
        } catch (const std::logic_error&) {
            s.check(false);
        }
    }
    return s;
}

Suite direct_sum_property(std::mt19937_64& rng) {
    Suite s;
    hamming::Code f1 = hamming::Code::make(1, {0, 1});
    hamming::Code f2 = hamming::Code::make(2, {0, 1, 2, 3});
    // (1,<=2): no such code exists below length 4, so sample F^4 -> F^5
    for (int a = 0; a < 20000 && s.instances < 30; ++a) {
        hamming::Code c = random_hamming_code(rng, 4, 0.8);
        if (hamming::is_l_idc_fast(c, 1, 2))
            s.check(hamming::is_l_idc_fast(hamming::direct_sum(c, f1), 1, 2));
    }
    // (1,<=3): F^5 -> F^6 (equivalently the r=1 case of the C + F^r theorem)
    for (int a = 0; a < 20000 && s.instances < 45; ++a) {
        hamming::Code c = random_hamming_code(rng, 5, 0.92);
        if (hamming::is_l_idc_fast(c, 1, 3))
            s.check(hamming::is_l_idc_fast(hamming::direct_sum(c, f1), 1, 3));
    }
    // (2,<=2): smallest host is F^6; the F^8 result exceeds the fast-path
    // signature width, so it goes through the generic graph verifier
    Graph f8 = hypercube_graph(8);
    for (int a = 0; a < 20000 && s.instances < 50; ++a) {
        hamming::Code c = random_hamming_code(rng, 6, 0.97);
        if (c.size() > 64 || !hamming::is_l_idc_fast(c, 2, 2)) continue;
        hamming::Code d = hamming::direct_sum(c, f2);
        VertexSet vs(256);
        for (hamming::Word w : d.words) vs.add(w);
        s.check(!is_r_l_identifying(f8, vs, 2, 2));
    }
    if (s.instances < 50) s.check(false);  // sampling starved; investigate
    return s;
}

Suite periodic_vs_window(std::mt19937_64& rng) {
    using namespace grid;
    Suite s;
    std::uniform_int_distribution<int> ad(1, 4);
    std::uniform_real_distribution<double> pd(0.2, 0.8);
    for (int att = 0; att < 20000 && s.instances < 50; ++att) {
        Kind kind = static_cast<Kind>(s.instances % 4);
        int a = ad(rng), d = ad(rng);
        if (kind == Kind::Hexagonal) {
            a *= 2;
            d = 2;
        }
        int c = std::uniform_int_distribution<int>(0, a - 1)(rng);
        if (kind == Kind::Hexagonal && (c + d) % 2 != 0) c = (c + 1) % a;
        Lattice lat{a, c, d};
        std::vector<Point> offs;
        std::bernoulli_distribution coin(pd(rng));
        for (int y = 0; y < d; ++y)
            for (int x = 0; x < a; ++x)
                if (coin(rng)) offs.push_back({x, y});
        if (offs.empty()) offs.push_back({0, 0});
        PeriodicCode pc = PeriodicCode::make(kind, lat, offs);
        int r = 1 + s.instances % 2;
        int width = std::max(a, d) + 6 * r + 6;
        s.check(verify_periodic(pc, r).has_value() == window_check(pc, r, width).has_value());
    }
    return s;
}

Suite removal_drop(std::mt19937_64& rng) {
    Suite s;
    std::uniform_int_distribution<std::size_t> nd(4, 9);
    std::uniform_real_distribution<double> pd(0.25, 0.6);
    for (int a = 0; a < 20000 && s.instances < 50; ++a) {
        Graph g = random_graph(rng, nd(rng), pd(rng));
        if (!g.is_r_twin_free(1)) continue;
        std::size_t before = min_id_code(g, 1).optimum;
        for (std::size_t v = 0; v < g.order() && s.instances < 50; ++v) {
            Graph h = g.remove_vertex(v).graph;
            if (!h.is_r_twin_free(1)) continue;
            s.check(static_cast<long long>(before) -
                        static_cast<long long>(min_id_code(h, 1).optimum) <=
                    1);
        }
    }
    return s;
}

Suite soc_sandwich(std::mt19937_64& rng) {
    Suite s;
    std::uniform_int_distribution<std::size_t> nd(3, 9);
    std::uniform_real_distribution<double> pd(0.25, 0.6);
    for (int a = 0; a < 20000 && s.instances < 50; ++a) {
        Graph g = random_graph(rng, nd(rng), pd(rng));
        if (!g.is_r_twin_free(1)) continue;
        std::size_t id1;
        try {
            id1 = min_id_code(g, 1).optimum;
        } catch (const TwinsPresent&) {
            continue;
        }
        try {
            std::size_t sigma = min_soc(g).optimum;
            s.check(sigma + 1 >= id1 && sigma <= id1);
        } catch (const NoSocExists&) {
            // graphs without a SOC are outside the sandwich statement
        }
    }
    return s;
}

void criterion10(Table& t) {
    std::mt19937_64 rng(20260826);
    std::ostringstream got;
    int total_failures = 0;
    auto add = [&](const char* name, Suite s) {
        total_failures += s.failures;
        got << name << "=" << s.instances << "/" << s.failures << " ";
    };
    add("solver-oracle+sandwich", solver_vs_oracle_and_sandwich(rng));
    add("fast-generic", fast_vs_generic(rng));
    add("induced-path", induced_path_property(rng));
    add("pi-u", pi_u_property(rng));
    add("char-ell3", characterization_property(rng));
    add("direct-sum", direct_sum_property(rng));
    add("periodic-window", periodic_vs_window(rng));
    add("removal-drop", removal_drop(rng));
    add("soc-sandwich", soc_sandwich(rng));
    std::ostringstream exp, gs;
    exp << "failures=0";
    gs << "failures=" << total_failures;
    t.out << "  property detail: " << got.str() << "(instances/failures)\n";
    t.row(10, "property-suites", exp.str(), gs.str());
}

}  // namespace

int run_acceptance(std::ostream& out) {
    Table t{out};
    criterion1(t);
    criterion2(t);
    criterion3(t);
    criterion4(t);
    criterion5(t);
    criterion6(t);
    criterion7(t);
    criterion8(t);
    criterion9(t);
    criterion10(t);
    criterion11(t);
    out << (t.failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << " (" << 11 - t.failures
        << "/11)\n";
    return t.failures;
}

}  // namespace idcodes
