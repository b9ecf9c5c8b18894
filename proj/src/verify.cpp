#include "idcodes/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "idcodes/util.hpp"

namespace idcodes {

VertexSet identifying_set(const Graph& g, const VertexSet& code, std::size_t v, int r) {
    return g.ball(v, r) & code;
}

VerifyResult is_r_identifying(const Graph& g, const VertexSet& code, int r) {
    const std::size_t n = g.order();
    std::vector<VertexSet> iset;
    iset.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        iset.push_back(identifying_set(g, code, v, r));
        if (iset.back().empty())
            return Violation{ViolationKind::Undominated, {v}, {}, "empty identifying set"};
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (iset[u] == iset[v])
                return Violation{ViolationKind::Unseparated, {u}, {v}, "equal identifying sets"};
    return std::nullopt;
}

namespace {

VertexSet union_iset(const std::vector<VertexSet>& iset, const std::vector<std::size_t>& xs,
                     std::size_t n) {
    VertexSet u(n);
    for (std::size_t v : xs) u |= iset[v];
    return u;
}

void check_subset_guard(std::size_t n, int ell) {
    if (ell < 1) throw std::invalid_argument("ell >= 1 required");
    if (binomial_sum(n, 1, static_cast<uint64_t>(ell)) > 1000000)
        throw std::invalid_argument("subset enumeration guard exceeded (> 10^6 subsets)");
}

}  // namespace

VerifyResult is_r_l_identifying(const Graph& g, const VertexSet& code, int r, int ell) {
    const std::size_t n = g.order();
    check_subset_guard(n, ell);
    std::vector<VertexSet> iset;
    iset.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        iset.push_back(identifying_set(g, code, v, r));
        if (iset.back().empty())
            return Violation{ViolationKind::Undominated, {v}, {}, "empty identifying set"};
    }
    // (signature, subset) pairs; a duplicate signature is a violation.
    std::vector<std::pair<VertexSet, std::vector<std::size_t>>> sigs;
    for_each_subset(n, 1, static_cast<std::size_t>(ell),
                    [&](const std::vector<std::size_t>& xs) {
                        sigs.emplace_back(union_iset(iset, xs, n), xs);
                        return true;
                    });
    std::stable_sort(sigs.begin(), sigs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < sigs.size(); ++i)
        if (sigs[i].first == sigs[i + 1].first)
            return Violation{ViolationKind::Unseparated, sigs[i].second, sigs[i + 1].second,
                             "equal identifying-set unions"};
    return std::nullopt;
}

VerifyResult is_strongly_identifying(const Graph& g, const VertexSet& code, int r, int ell) {
    const std::size_t n = g.order();
    check_subset_guard(n, ell);
    // Interval of X: [ I_r(X) \ (X ∩ C), I_r(X) ].
    std::vector<VertexSet> iset;
    iset.reserve(n);
    for (std::size_t v = 0; v < n; ++v) iset.push_back(identifying_set(g, code, v, r));
    struct Interval {
        VertexSet low, up;
        std::vector<std::size_t> xs;
    };
    std::vector<Interval> ivs;
    for_each_subset(n, 1, static_cast<std::size_t>(ell),
                    [&](const std::vector<std::size_t>& xs) {
                        VertexSet up = union_iset(iset, xs, n);
                        VertexSet low = up;
                        for (std::size_t v : xs)
                            if (code.contains(v)) low.remove(v);
                        ivs.push_back({std::move(low), std::move(up), xs});
                        return true;
                    });
    // Intervals intersect iff low1 ⊆ up2 and low2 ⊆ up1.
    for (std::size_t i = 0; i < ivs.size(); ++i)
        for (std::size_t j = i + 1; j < ivs.size(); ++j)
            if (ivs[i].low.is_subset_of(ivs[j].up) && ivs[j].low.is_subset_of(ivs[i].up))
                return Violation{ViolationKind::Unseparated, ivs[i].xs, ivs[j].xs,
                                 "set-intervals intersect"};
    return std::nullopt;
}

VerifyResult is_locating_dominating(const Graph& g, const VertexSet& code, int r) {
    const std::size_t n = g.order();
    std::vector<VertexSet> iset;
    iset.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        iset.push_back(identifying_set(g, code, v, r));
        if (iset.back().empty())
            return Violation{ViolationKind::Undominated, {v}, {}, "empty identifying set"};
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (code.contains(u)) continue;
        for (std::size_t v = u + 1; v < n; ++v) {
            if (code.contains(v)) continue;
            if (iset[u] == iset[v])
                return Violation{ViolationKind::Unseparated, {u}, {v},
                                 "equal identifying sets (non-codewords)"};
        }
    }
    return std::nullopt;
}

VerifyResult is_soc(const Graph& g, const VertexSet& code, std::size_t* v0_out) {
    const std::size_t n = g.order();
    std::vector<VertexSet> iset;
    iset.reserve(n);
    std::vector<std::size_t> empties;
    for (std::size_t v = 0; v < n; ++v) {
        iset.push_back(identifying_set(g, code, v, 1));
        if (iset.back().empty()) empties.push_back(v);
    }
    if (empties.empty())
        return Violation{ViolationKind::SocZeroMissing, {}, {}, "no vertex with empty I_1"};
    if (empties.size() > 1)
        return Violation{ViolationKind::Unseparated, {empties[0]}, {empties[1]},
                         "two vertices with empty identifying sets"};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (iset[u] == iset[v])
                return Violation{ViolationKind::Unseparated, {u}, {v}, "equal identifying sets"};
    if (v0_out) *v0_out = empties[0];
    return std::nullopt;
}

CoveringReport mu_fold_covering(const Graph& g, const VertexSet& code, int r, std::size_t mu) {
    const std::size_t n = g.order();
    std::size_t lo = static_cast<std::size_t>(-1), hi = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t c = identifying_set(g, code, v, r).count();
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    if (n == 0) lo = hi = 0;
    return {lo >= mu, lo == mu && hi == mu, lo, hi};
}

VerifyResult is_t_edge_robust(const Graph& g, const VertexSet& code, int r, int t) {
    if (t < 0 || t > 2) throw std::invalid_argument("is_t_edge_robust: t in {0,1,2}");
    const std::size_t n = g.order();
    const std::size_t num_pairs = n * (n - 1) / 2;
    if (binomial_sum(num_pairs, 0, static_cast<uint64_t>(t)) > 1000000)
        throw std::invalid_argument("edit enumeration guard exceeded (> 10^6 edit sets)");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(num_pairs);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    VerifyResult bad = std::nullopt;
    for_each_subset(pairs.size(), 0, static_cast<std::size_t>(t),
                    [&](const std::vector<std::size_t>& edit) {
                        Graph h = g;
                        std::vector<std::size_t> touched;
                        for (std::size_t e : edit) {
                            auto [u, v] = pairs[e];
                            h = h.has_edge(u, v) ? h.remove_edge(u, v) : h.with_edge(u, v);
                            touched.push_back(u);
                            touched.push_back(v);
                        }
                        if (auto viol = is_r_identifying(h, code, r)) {
                            bad = Violation{ViolationKind::RobustnessBreak, viol->vertices,
                                            touched, "fails after edge edits"};
                            return false;
                        }
                        return true;
                    });
    return bad;
}

}  // namespace idcodes
