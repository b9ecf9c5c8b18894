#include "idcodes/solve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "idcodes/util.hpp"
#include "idcodes/verify.hpp"

namespace idcodes {

namespace {

// Set-cover view: a code C is feasible iff C intersects every constraint.
// Domination constraint of v: B_r(v). Separation constraint of (u,v):
// B_r(u) Δ B_r(v) (locating-dominating adds {u,v} to it). Pairs at distance
// > 2r are omitted: their balls are disjoint, so domination already
// separates them.
struct CoverInstance {
    std::size_t n = 0;
    VertexSet candidates;                // allowed codeword vertices
    std::vector<VertexSet> constraints;  // pre-intersected with candidates
};

CoverInstance build_idc(const Graph& g, int r) {
    std::pair<std::size_t, std::size_t> tw;
    if (!g.is_r_twin_free(r, &tw)) throw TwinsPresent(tw.first, tw.second);
    const std::size_t n = g.order();
    CoverInstance inst;
    inst.n = n;
    inst.candidates = VertexSet::full(n);
    for (std::size_t v = 0; v < n; ++v) inst.constraints.push_back(g.ball(v, r));
    const auto& d = g.distances();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (d[u][v] <= 2 * r) inst.constraints.push_back(g.ball(u, r) ^ g.ball(v, r));
    return inst;
}

CoverInstance build_ld(const Graph& g, int r) {
    const std::size_t n = g.order();
    CoverInstance inst;
    inst.n = n;
    inst.candidates = VertexSet::full(n);
    for (std::size_t v = 0; v < n; ++v) inst.constraints.push_back(g.ball(v, r));
    const auto& d = g.distances();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (d[u][v] <= 2 * r) {
                VertexSet c = g.ball(u, r) ^ g.ball(v, r);
                c.add(u);  // picking u or v as codeword also settles the pair
                c.add(v);
                inst.constraints.push_back(std::move(c));
            }
    return inst;
}

// SOC with a fixed uncovered vertex v0: codewords outside B_1(v0),
// everything else dominated, all pairs (excluding v0) separated.
// Returns nullopt when some constraint has no allowed coverer.
std::optional<CoverInstance> build_soc(const Graph& g, std::size_t v0) {
    const std::size_t n = g.order();
    CoverInstance inst;
    inst.n = n;
    inst.candidates = VertexSet::full(n);
    for (std::size_t v : g.ball(v0, 1).to_vector()) inst.candidates.remove(v);
    const auto& d = g.distances();
    auto push = [&](VertexSet c) {
        c &= inst.candidates;
        if (c.empty()) return false;
        inst.constraints.push_back(std::move(c));
        return true;
    };
    for (std::size_t v = 0; v < n; ++v)
        if (v != v0 && !push(g.ball(v, 1))) return std::nullopt;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            if (u == v0 || v == v0 || d[u][v] > 2) continue;
            if (g.ball(u, 1) == g.ball(v, 1)) return std::nullopt;  // 1-twins
            if (!push(g.ball(u, 1) ^ g.ball(v, 1))) return std::nullopt;
        }
    return inst;
}

struct EngineResult {
    bool feasible = false;
    std::size_t optimum = 0;
    VertexSet certificate;
    std::size_t root_matching_lb = 0;
    uint64_t nodes = 0;
};

class Engine {
public:
    Engine(const CoverInstance& inst, const SolveOptions& opts)
        : inst_(inst), opts_(opts), covered_(inst.constraints.size(), 0),
          chosen_(inst.n), excluded_(inst.n), start_(std::chrono::steady_clock::now()) {}

    EngineResult run() {
        EngineResult res;
        if (!greedy()) return res;  // infeasible
        res.feasible = true;
        num_uncovered_ = inst_.constraints.size();
        res.root_matching_lb = matching_lb();
        lb_floor_ = std::max<std::size_t>(opts_.known_lower_bound.value_or(0), 1);
        if (best_size_ > lb_floor_ && best_size_ > res.root_matching_lb) dfs();
        res.optimum = best_size_;
        res.certificate = best_set_;
        res.nodes = nodes_;
        return res;
    }

private:
    bool greedy() {
        std::vector<char> cov(inst_.constraints.size(), 0);
        std::size_t left = inst_.constraints.size();
        VertexSet code(inst_.n);
        while (left > 0) {
            std::size_t best_v = inst_.n, best_gain = 0;
            for (std::size_t v : inst_.candidates.to_vector()) {
                if (code.contains(v)) continue;
                std::size_t gain = 0;
                for (std::size_t c = 0; c < inst_.constraints.size(); ++c)
                    if (!cov[c] && inst_.constraints[c].contains(v)) ++gain;
                if (gain > best_gain) { best_gain = gain; best_v = v; }
            }
            if (best_v == inst_.n) return false;
            code.add(best_v);
            for (std::size_t c = 0; c < inst_.constraints.size(); ++c)
                if (!cov[c] && inst_.constraints[c].contains(best_v)) { cov[c] = 1; --left; }
        }
        best_size_ = code.count();
        best_set_ = code;
        return true;
    }

    // Greedy packing of uncovered constraints with pairwise disjoint
    // available coverer sets; each needs its own codeword.
    std::size_t matching_lb() {
        std::vector<std::pair<std::size_t, std::size_t>> order;  // (avail count, idx)
        for (std::size_t c = 0; c < inst_.constraints.size(); ++c) {
            if (covered_[c]) continue;
            order.emplace_back(avail(c).count(), c);
        }
        std::sort(order.begin(), order.end());
        VertexSet used(inst_.n);
        std::size_t lb = 0;
        for (auto [cnt, c] : order) {
            VertexSet av = avail(c);
            if (!av.intersects(used)) {
                used |= av;
                ++lb;
            }
        }
        return lb;
    }

    VertexSet avail(std::size_t c) const {
        VertexSet av = inst_.constraints[c];
        for (std::size_t v : (av & excluded_).to_vector()) av.remove(v);
        return av;
    }

    void tick() {
        ++nodes_;
        if (nodes_ > opts_.node_budget)
            throw BudgetExceeded(lb_floor_, best_size_, nodes_);
        if (opts_.time_budget_seconds > 0 && (nodes_ & 0xFFF) == 0) {
            double el = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start_).count();
            if (el > opts_.time_budget_seconds)
                throw BudgetExceeded(lb_floor_, best_size_, nodes_);
        }
    }

    void dfs() {
        tick();
        if (done_) return;
        if (num_uncovered_ == 0) {
            if (chosen_count_ < best_size_) {
                best_size_ = chosen_count_;
                best_set_ = chosen_;
                if (best_size_ <= lb_floor_) done_ = true;
            }
            return;
        }
        if (chosen_count_ + 1 >= best_size_) return;
        // most constrained uncovered constraint, lowest id on ties
        std::size_t pick = inst_.constraints.size(), pick_cnt = SIZE_MAX;
        for (std::size_t c = 0; c < inst_.constraints.size(); ++c) {
            if (covered_[c]) continue;
            std::size_t cnt = avail(c).count();
            if (cnt < pick_cnt) { pick_cnt = cnt; pick = c; }
            if (cnt == 0) break;
        }
        if (pick_cnt == 0) return;
        if (chosen_count_ + matching_lb() >= best_size_) return;

        const auto branch_vs = avail(pick).to_vector();
        std::vector<std::size_t> newly_excluded;
        for (std::size_t w : branch_vs) {
            // include w
            chosen_.add(w);
            ++chosen_count_;
            std::vector<std::size_t> newly_cov;
            for (std::size_t c = 0; c < inst_.constraints.size(); ++c)
                if (!covered_[c] && inst_.constraints[c].contains(w)) {
                    covered_[c] = 1;
                    newly_cov.push_back(c);
                }
            num_uncovered_ -= newly_cov.size();
            dfs();
            num_uncovered_ += newly_cov.size();
            for (std::size_t c : newly_cov) covered_[c] = 0;
            chosen_.remove(w);
            --chosen_count_;
            if (done_) break;
            // exclude w in the remaining branches
            excluded_.add(w);
            newly_excluded.push_back(w);
        }
        for (std::size_t w : newly_excluded) excluded_.remove(w);
    }

    const CoverInstance& inst_;
    const SolveOptions& opts_;
    std::vector<char> covered_;
    std::size_t num_uncovered_ = 0;
    VertexSet chosen_, excluded_;
    std::size_t chosen_count_ = 0;
    std::size_t best_size_ = SIZE_MAX;
    VertexSet best_set_;
    std::size_t lb_floor_ = 1;
    bool done_ = false;
    uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

std::size_t log2_lower_bound(std::size_t n) {
    // distinct nonempty I-sets force n <= 2^|C| - 1
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n + 1) ++k;
    return k;
}

SolveReport finish_report(const SolveOptions& opts, const EngineResult& er,
                          std::size_t log_lb) {
    SolveReport rep;
    rep.optimum = er.optimum;
    rep.certificate = er.certificate;
    rep.nodes_explored = er.nodes;
    const std::size_t ext = opts.known_lower_bound.value_or(0);
    if (ext == er.optimum) rep.lower_bound_used = "external";
    else if (log_lb == er.optimum) rep.lower_bound_used = "log2";
    else if (er.root_matching_lb == er.optimum) rep.lower_bound_used = "matching";
    else rep.lower_bound_used = "branch-and-bound";
    return rep;
}

// Counts subsets of the candidate set with exactly k elements meeting every
// constraint. Single-word path when at most 64 candidates.
uint64_t count_fixed_size(const CoverInstance& inst, std::size_t k) {
    const auto cand = inst.candidates.to_vector();
    const std::size_t m = cand.size();
    if (binomial(m, k) > 200000000ULL)
        throw std::invalid_argument("count enumeration guard exceeded");
    if (m <= 64) {
        std::vector<uint64_t> cons;
        cons.reserve(inst.constraints.size());
        for (const auto& c : inst.constraints) {
            uint64_t mask = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (c.contains(cand[i])) mask |= uint64_t{1} << i;
            cons.push_back(mask);
        }
        if (k == 0) {
            for (uint64_t c : cons) if (c == 0) return 1;  // unreachable in practice
            return cons.empty() ? 1 : 0;
        }
        if (k > m) return 0;
        uint64_t count = 0;
        uint64_t v = (k == 64) ? ~uint64_t{0} : ((uint64_t{1} << k) - 1);
        const uint64_t limit = (m == 64) ? 0 : (uint64_t{1} << m);
        while (m == 64 ? true : v < limit) {
            bool ok = true;
            for (uint64_t c : cons)
                if (!(c & v)) { ok = false; break; }
            if (ok) ++count;
            // Gosper's hack
            uint64_t t = v | (v - 1);
            if (t == ~uint64_t{0}) break;
            v = (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctzll(v) + 1));
        }
        return count;
    }
    uint64_t count = 0;
    for_each_subset(m, k, k, [&](const std::vector<std::size_t>& idx) {
        VertexSet code(inst.n);
        for (std::size_t i : idx) code.add(cand[i]);
        for (const auto& c : inst.constraints)
            if (!c.intersects(code)) return true;
        ++count;
        return true;
    });
    return count;
}

}  // namespace

SolveReport min_id_code(const Graph& g, int r, const SolveOptions& opts) {
    const CoverInstance inst = build_idc(g, r);
    SolveOptions o = opts;
    const std::size_t log_lb = log2_lower_bound(g.order());
    o.known_lower_bound = std::max(opts.known_lower_bound.value_or(0), log_lb);
    Engine eng(inst, o);
    const EngineResult er = eng.run();
    return finish_report(opts, er, log_lb);
}

SolveReport count_min_id_codes(const Graph& g, int r, const SolveOptions& opts) {
    SolveReport rep = min_id_code(g, r, opts);
    rep.count = count_fixed_size(build_idc(g, r), rep.optimum);
    return rep;
}

SolveReport min_ld_code(const Graph& g, int r, const SolveOptions& opts) {
    const CoverInstance inst = build_ld(g, r);
    Engine eng(inst, opts);
    const EngineResult er = eng.run();
    return finish_report(opts, er, 0);
}

SolveReport count_min_ld_codes(const Graph& g, int r, const SolveOptions& opts) {
    SolveReport rep = min_ld_code(g, r, opts);
    rep.count = count_fixed_size(build_ld(g, r), rep.optimum);
    return rep;
}

SolveReport min_soc(const Graph& g, const SolveOptions& opts) {
    const std::size_t n = g.order();
    SolveReport best;
    bool found = false;
    uint64_t nodes = 0;
    for (std::size_t v0 = 0; v0 < n; ++v0) {
        auto inst = build_soc(g, v0);
        if (!inst) continue;
        Engine eng(*inst, opts);
        const EngineResult er = eng.run();
        nodes += er.nodes;
        if (!er.feasible) continue;
        if (!found || er.optimum < best.optimum) {
            best = finish_report(opts, er, 0);
            found = true;
        }
    }
    if (!found) throw NoSocExists();
    best.nodes_explored = nodes;
    return best;
}

SolveReport count_min_socs(const Graph& g, const SolveOptions& opts) {
    SolveReport rep = min_soc(g, opts);
    uint64_t count = 0;
    for (std::size_t v0 = 0; v0 < g.order(); ++v0) {
        auto inst = build_soc(g, v0);
        if (!inst) continue;
        count += count_fixed_size(*inst, rep.optimum);
    }
    rep.count = count;
    return rep;
}

TerminalReport is_r_terminal(const Graph& g, int r) {
    std::pair<std::size_t, std::size_t> tw;
    if (!g.is_r_twin_free(r, &tw)) throw TwinsPresent(tw.first, tw.second);
    TerminalReport rep;
    rep.terminal = true;
    const std::size_t n = g.order();
    rep.witnesses.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto rr = g.remove_vertex(v);
        std::pair<std::size_t, std::size_t> w;
        if (rr.graph.is_r_twin_free(r, &w)) {
            rep.terminal = false;
        } else {
            // map back to original ids
            std::vector<std::size_t> inv(rr.graph.order());
            for (std::size_t u = 0; u < n; ++u)
                if (rr.old_to_new[u] != Graph::npos) inv[rr.old_to_new[u]] = u;
            rep.witnesses[v] = {inv[w.first], inv[w.second]};
        }
    }
    return rep;
}

RemovalDelta removal_delta_vertex(const Graph& g, std::size_t v, int r,
                                  const SolveOptions& opts) {
    RemovalDelta rd;
    rd.before = min_id_code(g, r, opts);
    rd.after = min_id_code(g.remove_vertex(v).graph, r, opts);
    rd.delta = static_cast<long long>(rd.before.optimum) - static_cast<long long>(rd.after.optimum);
    return rd;
}

RemovalDelta removal_delta_edge(const Graph& g, std::size_t u, std::size_t v, int r,
                                const SolveOptions& opts) {
    RemovalDelta rd;
    rd.before = min_id_code(g, r, opts);
    rd.after = min_id_code(g.remove_edge(u, v), r, opts);
    rd.delta = static_cast<long long>(rd.before.optimum) - static_cast<long long>(rd.after.optimum);
    return rd;
}

std::optional<std::size_t> exhaustive_min_id_code(const Graph& g, int r) {
    const std::size_t n = g.order();
    if (n > 24) throw std::invalid_argument("exhaustive oracle guard: n <= 24");
    std::optional<std::size_t> best;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        VertexSet code(n);
        for (std::size_t v = 0; v < n; ++v)
            if (mask & (std::size_t{1} << v)) code.add(v);
        if (best && code.count() >= *best) continue;
        if (!is_r_identifying(g, code, r)) best = code.count();
    }
    return best;
}

}  // namespace idcodes
