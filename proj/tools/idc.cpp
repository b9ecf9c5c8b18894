// idc: command-line front end for the identifying-codes toolkit.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idcodes/acceptance.hpp"
#include "idcodes/families.hpp"
#include "idcodes/graph_io.hpp"
#include "idcodes/grid.hpp"
#include "idcodes/hamming.hpp"
#include "idcodes/sat_reduction.hpp"
#include "idcodes/solve.hpp"
#include "idcodes/verify.hpp"

namespace {

using namespace idcodes;

constexpr int kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3;

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

std::string violation_kind(ViolationKind k) {
    switch (k) {
        case ViolationKind::Undominated: return "undominated";
        case ViolationKind::Unseparated: return "unseparated";
        case ViolationKind::CoveringDeficit: return "covering-deficit";
        case ViolationKind::RobustnessBreak: return "robustness-break";
        case ViolationKind::SocZeroMissing: return "soc-zero-missing";
    }
    return "?";
}

std::string one_based(const std::vector<std::size_t>& vs) {
    std::ostringstream s;
    for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? " " : "") << vs[i] + 1;
    return s.str();
}

int report_verify(const VerifyResult& res, bool machine) {
    if (!res) {
        std::cout << (machine ? "result=pass\n" : "code passes\n");
        return kOk;
    }
    if (machine) {
        std::cout << "violation=" << violation_kind(res->kind) << "\n";
        std::cout << "witness=" << one_based(res->vertices) << "\n";
        if (!res->other_vertices.empty())
            std::cout << "witness2=" << one_based(res->other_vertices) << "\n";
    } else {
        std::cout << "violation: " << violation_kind(res->kind) << " at vertices "
                  << one_based(res->vertices);
        if (!res->other_vertices.empty()) std::cout << " / " << one_based(res->other_vertices);
        if (!res->detail.empty()) std::cout << " (" << res->detail << ")";
        std::cout << "\n";
    }
    return kFalse;
}

void report_solve(const SolveReport& rep, bool machine) {
    if (machine) {
        std::cout << "optimum=" << rep.optimum << "\n";
        std::cout << "certificate=" << one_based(rep.certificate.to_vector()) << "\n";
        if (rep.count) std::cout << "count=" << *rep.count << "\n";
        std::cout << "lower_bound=" << rep.lower_bound_used << "\n";
        std::cout << "nodes=" << rep.nodes_explored << "\n";
    } else {
        std::cout << "optimum " << rep.optimum << ", certificate {"
                  << one_based(rep.certificate.to_vector()) << "}";
        if (rep.count) std::cout << ", " << *rep.count << " optimal codes";
        std::cout << " (bound: " << rep.lower_bound_used << ", nodes: " << rep.nodes_explored
                  << ")\n";
    }
}

grid::Rational density_of(const grid::PeriodicCode& pc) { return pc.density(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"identifying-code toolkit"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "stable key=value output");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a family graph");
    std::string gen_family, gen_out;
    std::vector<long> gen_params;
    gen->add_option("family", gen_family,
                    "path|cycle|star|complete-minus-matching|hypercube|terminal|gap|"
                    "comb-adj|comb-nonadj|gseries")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "verify a code against a definition");
    std::string ver_variant, ver_graph, ver_code;
    int ver_r = 1, ver_ell = 1, ver_t = 0;
    std::size_t ver_mu = 1;
    ver->add_option("variant", ver_variant, "idc|lidc|strong|ld|soc|mucover|robust")->required();
    ver->add_option("graph", ver_graph)->required();
    ver->add_option("code", ver_code)->required();
    ver->add_option("-r,--radius", ver_r);
    ver->add_option("--ell", ver_ell);
    ver->add_option("--mu", ver_mu);
    ver->add_option("--edits", ver_t, "edge edits tolerated (robust)");

    // ---- solve ----
    auto* sol = app.add_subcommand("solve", "minimum code via branch and bound");
    std::string sol_graph, sol_variant = "idc";
    int sol_r = 1;
    bool sol_count = false;
    SolveOptions sol_opts;
    uint64_t sol_klb = 0;
    sol->add_option("graph", sol_graph)->required();
    sol->add_option("-v,--variant", sol_variant, "idc|ld|soc");
    sol->add_option("-r,--radius", sol_r);
    sol->add_flag("--count", sol_count, "also count the optimal codes");
    sol->add_option("--node-budget", sol_opts.node_budget);
    sol->add_option("--time-budget", sol_opts.time_budget_seconds, "seconds");
    sol->add_option("--known-lower-bound", sol_klb, "externally certified lower bound");

    // ---- hamming ----
    auto* ham = app.add_subcommand("hamming", "binary Hamming space operations");
    std::string ham_action, ham_file;
    unsigned ham_n = 0, ham_r = 1, ham_ell = 1;
    std::size_t ham_k = 0;
    ham->add_option("action", ham_action, "bounds|verify|known|covering-radius")->required();
    ham->add_option("file", ham_file, "code file (verify)");
    ham->add_option("-n,--length", ham_n);
    ham->add_option("-r,--radius", ham_r);
    ham->add_option("--ell", ham_ell);
    ham->add_option("-k,--codewords", ham_k);

    // ---- grid ----
    auto* grd = app.add_subcommand("grid", "periodic codes in infinite grids");
    std::string grd_action, grd_kind, grd_file, grd_out;
    int grd_r = 1;
    long long grd_det = 0;
    std::size_t grd_size = 0;
    grid::SearchOptions grd_sopts;
    bool grd_anneal = false;
    grd->add_option("action", grd_action, "verify|density|search|king-gen")->required();
    grd->add_option("arg", grd_file, "tile file (verify/density) or grid kind (search)");
    grd->add_option("-r,--radius", grd_r);
    grd->add_option("--det", grd_det, "lattice index");
    grd->add_option("--size", grd_size, "codewords per fundamental domain");
    grd->add_flag("--anneal", grd_anneal, "annealing search instead of exhaustive");
    grd->add_option("--seed", grd_sopts.seed);
    grd->add_option("--max-iterations", grd_sopts.max_iterations);
    grd->add_option("-o,--output", grd_out, "tile output file");

    // ---- reduce ----
    auto* red = app.add_subcommand("reduce", "3-SAT to 1-identifying-code reduction");
    std::string red_cnf, red_graph_out, red_layout_out;
    red->add_option("cnf", red_cnf, "DIMACS CNF file")->required();
    red->add_option("-o,--output", red_graph_out, "graph output file");
    red->add_option("--layout", red_layout_out, "vertex layout map output file");

    // ---- accept ----
    auto* acc = app.add_subcommand("accept", "run the acceptance table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (gen->parsed()) {
            Graph g = make_family(gen_family, gen_params);
            if (gen_out.empty()) {
                write_graph(std::cout, g);
            } else {
                auto f = open_out(gen_out);
                write_graph(f, g);
            }
            return kOk;
        }

        if (ver->parsed()) {
            Graph g = read_graph_file(ver_graph);
            VertexSet code = read_code_file(ver_code, g.order());
            VerifyResult res;
            if (ver_variant == "idc") res = is_r_identifying(g, code, ver_r);
            else if (ver_variant == "lidc") res = is_r_l_identifying(g, code, ver_r, ver_ell);
            else if (ver_variant == "strong")
                res = is_strongly_identifying(g, code, ver_r, ver_ell);
            else if (ver_variant == "ld") res = is_locating_dominating(g, code, ver_r);
            else if (ver_variant == "soc") res = is_soc(g, code);
            else if (ver_variant == "mucover") {
                CoveringReport rep = mu_fold_covering(g, code, ver_r, ver_mu);
                if (machine)
                    std::cout << "at_least_mu=" << rep.at_least_mu << "\nperfect=" << rep.perfect
                              << "\nmin_cover=" << rep.min_cover
                              << "\nmax_cover=" << rep.max_cover << "\n";
                else
                    std::cout << "cover range [" << rep.min_cover << ", " << rep.max_cover
                              << "], mu=" << ver_mu << (rep.at_least_mu ? " satisfied" : " violated")
                              << (rep.perfect ? " (perfect)" : "") << "\n";
                return rep.at_least_mu ? kOk : kFalse;
            } else if (ver_variant == "robust")
                res = is_t_edge_robust(g, code, ver_r, ver_t);
            else
                throw CLI::ValidationError("verify", "unknown variant " + ver_variant);
            return report_verify(res, machine);
        }

        if (sol->parsed()) {
            Graph g = read_graph_file(sol_graph);
            if (sol_klb > 0) sol_opts.known_lower_bound = sol_klb;
            SolveReport rep;
            if (sol_variant == "idc")
                rep = sol_count ? count_min_id_codes(g, sol_r, sol_opts)
                                : min_id_code(g, sol_r, sol_opts);
            else if (sol_variant == "ld")
                rep = sol_count ? count_min_ld_codes(g, sol_r, sol_opts)
                                : min_ld_code(g, sol_r, sol_opts);
            else if (sol_variant == "soc")
                rep = sol_count ? count_min_socs(g, sol_opts) : min_soc(g, sol_opts);
            else
                throw CLI::ValidationError("solve", "unknown variant " + sol_variant);
            report_solve(rep, machine);
            return kOk;
        }

        if (ham->parsed()) {
            if (ham_action == "bounds") {
                if (ham_n == 0) throw CLI::ValidationError("hamming", "--length required");
                for (const auto& b : hamming::lower_bounds(ham_n, ham_r, ham_ell))
                    std::cout << (machine ? "bound_" : "") << b.name
                              << (machine ? "=" : ": ") << b.value << "\n";
                std::cout << (machine ? "best=" : "best: ")
                          << hamming::best_lower_bound(ham_n, ham_r, ham_ell) << "\n";
                return kOk;
            }
            if (ham_action == "verify") {
                hamming::Code c = hamming::read_code_file(ham_file);
                bool ok = ham_ell > 1 ? hamming::is_l_idc_fast(c, ham_r, ham_ell)
                                      : hamming::is_idc_fast(c, ham_r);
                std::cout << (machine ? (ok ? "result=pass\n" : "result=fail\n")
                                      : (ok ? "code passes\n" : "code fails\n"));
                return ok ? kOk : kFalse;
            }
            if (ham_action == "known") {
                for (const auto& kv : hamming::known_values())
                    if ((ham_n == 0 || kv.n == ham_n) && kv.r == ham_r)
                        std::cout << "n=" << kv.n << " r=" << kv.r << " value=" << kv.value
                                  << (machine ? "" : "  # " + kv.provenance) << "\n";
                return kOk;
            }
            if (ham_action == "covering-radius") {
                std::cout << (machine ? "radius=" : "covering radius: ")
                          << hamming::min_covering_radius(ham_n, ham_k) << "\n";
                return kOk;
            }
            throw CLI::ValidationError("hamming", "unknown action " + ham_action);
        }

        if (grd->parsed()) {
            if (grd_action == "verify" || grd_action == "density") {
                grid::PeriodicCode pc = grid::read_tile_file(grd_file);
                if (grd_action == "density") {
                    auto d = density_of(pc);
                    std::cout << (machine ? "density=" : "density ") << d.num << "/" << d.den
                              << "\n";
                    return kOk;
                }
                auto res = grid::verify_periodic(pc, grd_r);
                if (!res) {
                    std::cout << (machine ? "result=pass\n" : "tile passes\n");
                    return kOk;
                }
                if (machine)
                    std::cout << "violation=" << res->kind << "\nwitness=" << res->u.x << " "
                              << res->u.y << " " << res->v.x << " " << res->v.y << "\n";
                else
                    std::cout << "violation: " << res->kind << " at (" << res->u.x << ","
                              << res->u.y << ") / (" << res->v.x << "," << res->v.y << ")\n";
                return kFalse;
            }
            if (grd_action == "search") {
                grd_sopts.mode =
                    grd_anneal ? grid::SearchMode::Anneal : grid::SearchMode::Exhaustive;
                auto pc = grid::search_tiles(grid::kind_from_string(grd_file), grd_r, grd_det,
                                             grd_size, grd_sopts);
                if (!pc) {
                    std::cout << (machine ? "result=none\n" : "no tile found\n");
                    return kFalse;
                }
                auto d = density_of(*pc);
                std::cout << (machine ? "density=" : "density ") << d.num << "/" << d.den << "\n";
                if (grd_out.empty()) {
                    grid::write_tile(std::cout, *pc);
                } else {
                    auto f = open_out(grd_out);
                    grid::write_tile(f, *pc);
                }
                return kOk;
            }
            if (grd_action == "king-gen") {
                grid::PeriodicCode pc = grid::king_construction(grd_r);
                auto d = density_of(pc);
                std::cout << (machine ? "density=" : "density ") << d.num << "/" << d.den << "\n";
                if (grd_out.empty()) {
                    grid::write_tile(std::cout, pc);
                } else {
                    auto f = open_out(grd_out);
                    grid::write_tile(f, pc);
                }
                return kOk;
            }
            throw CLI::ValidationError("grid", "unknown action " + grd_action);
        }

        if (red->parsed()) {
            sat::CnfFormula f = sat::read_dimacs_file(red_cnf);
            sat::Reduction r = sat::reduce_3sat(f);
            if (red_graph_out.empty()) {
                write_graph(std::cout, r.graph);
            } else {
                auto out = open_out(red_graph_out);
                write_graph(out, r.graph);
            }
            std::ostream* lay = nullptr;
            std::ofstream layf;
            if (!red_layout_out.empty()) {
                layf = open_out(red_layout_out);
                lay = &layf;
            } else if (!red_graph_out.empty()) {
                lay = &std::cout;
            }
            if (lay) {
                for (std::size_t j = 0; j < r.num_vars; ++j) {
                    *lay << "x" << j + 1 << " " << r.x(j) + 1 << "\n";
                    *lay << "xbar" << j + 1 << " " << r.xbar(j) + 1 << "\n";
                    *lay << "a" << j + 1 << " " << r.a(j) + 1 << "\n";
                    *lay << "b" << j + 1 << " " << r.b(j) + 1 << "\n";
                    *lay << "c" << j + 1 << " " << r.c(j) + 1 << "\n";
                    *lay << "d" << j + 1 << " " << r.d(j) + 1 << "\n";
                }
                for (std::size_t i = 0; i < r.num_clauses; ++i) {
                    *lay << "alpha" << i + 1 << " " << r.alpha(i) + 1 << "\n";
                    *lay << "beta" << i + 1 << " " << r.beta(i) + 1 << "\n";
                }
            }
            std::cout << (machine ? "k=" : "target size k = ") << r.target_size << "\n";
            return kOk;
        }

        if (acc->parsed()) return run_acceptance(std::cout) == 0 ? kOk : kFalse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: bounds [" << e.best_lower << ", " << e.best_upper
                  << "], nodes " << e.nodes << "\n";
        return kBudget;
    } catch (const TwinsPresent& e) {
        std::cerr << "graph has r-twins: vertices " << e.u + 1 << " and " << e.v + 1 << "\n";
        return kFalse;
    } catch (const NoSocExists&) {
        std::cerr << "graph admits no separating-only code\n";
        return kFalse;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
