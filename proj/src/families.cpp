#include "idcodes/families.hpp"

#include <stdexcept>

namespace idcodes {

Graph path_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path_graph: n >= 1");
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3");
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(std::size_t n) {
    if (n < 2) throw std::invalid_argument("star_graph: n >= 2");
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_minus_matching(std::size_t n) {
    if (n < 2) throw std::invalid_argument("complete_minus_matching: n >= 2");
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!(v == u + 1 && u % 2 == 0)) g.add_edge(u, v);
    return g;
}

Graph hypercube_graph(unsigned len) {
    if (len > 20) throw std::invalid_argument("hypercube_graph: len guard exceeded");
    const std::size_t n = std::size_t{1} << len;
    Graph g(n);
    for (std::size_t x = 0; x < n; ++x)
        for (unsigned b = 0; b < len; ++b) {
            std::size_t y = x ^ (std::size_t{1} << b);
            if (x < y) g.add_edge(x, y);
        }
    return g;
}

Graph terminal_example(int r) {
    if (r < 3) throw std::invalid_argument("terminal_example: r >= 3");
    const std::size_t c = 2 * static_cast<std::size_t>(r);  // cycle length
    Graph g(2 * c - 1);
    for (std::size_t i = 0; i + 1 < c; ++i) g.add_edge(i, i + 1);
    g.add_edge(c - 1, 0);
    for (std::size_t i = 1; i < c; ++i) g.add_edge(i, c - 1 + i);  // pendant of c_i
    return g;
}

GapGraph gap_graph(int k) {
    if (k < 2) throw std::invalid_argument("gap_graph: k >= 2");
    const std::size_t num_subsets = (std::size_t{1} << k) - std::size_t(k) - 1;  // |I| >= 2
    const std::size_t n = 1 + std::size_t(k) + 2 * num_subsets;
    Graph g(n);
    const std::size_t v = 0;
    std::vector<std::size_t> hubs(k);
    for (int i = 0; i < k; ++i) hubs[i] = 1 + static_cast<std::size_t>(i);
    std::size_t next = 1 + static_cast<std::size_t>(k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        std::size_t y = next++;
        std::size_t z = next++;
        g.add_edge(y, v);
        for (int i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) {
                g.add_edge(y, hubs[i]);
                g.add_edge(z, hubs[i]);
            }
    }
    VertexSet code(n);
    code.add(v);
    for (auto h : hubs) code.add(h);
    return {std::move(g), v, std::move(code), std::move(hubs)};
}

CombGraph comb_graph(int r, int p, CombVariant variant) {
    if (r < 2 || p < 1) throw std::invalid_argument("comb_graph: need r >= 2, p >= 1");
    const std::size_t n = static_cast<std::size_t>(p) * static_cast<std::size_t>(r) + 2;
    Graph g(n);
    const std::size_t v = n - 2, w = n - 1;
    for (int i = 0; i < p; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) * static_cast<std::size_t>(r);
        for (int j = 0; j + 1 < r; ++j) g.add_edge(base + j, base + j + 1);
        // one extra per path end; joining both extras to both ends would make
        // the ends r-twins (the swap is an automorphism fixing the rest)
        g.add_edge(v, base);
        g.add_edge(w, base + r - 1);
    }
    if (variant == CombVariant::ExtrasAdjacent) g.add_edge(v, w);
    return {std::move(g), v};
}

Graph g_series(int q) {
    if (q < 1) throw std::invalid_argument("g_series: q >= 1");
    Graph base = hypercube_graph(3);
    Graph cur(0);
    {
        Graph g(3 * 8 + 1);
        for (int c = 0; c < 3; ++c)
            for (auto [a, b] : base.edges()) g.add_edge(8 * c + a, 8 * c + b);
        for (std::size_t u = 0; u < 24; ++u) g.add_edge(24, u);
        cur = std::move(g);
    }
    for (int lvl = 2; lvl <= q; ++lvl) {
        const std::size_t m = cur.order();
        Graph g(3 * m + 1);
        for (int c = 0; c < 3; ++c)
            for (auto [a, b] : cur.edges()) g.add_edge(m * c + a, m * c + b);
        for (std::size_t u = 0; u < 3 * m; ++u) g.add_edge(3 * m, u);
        cur = std::move(g);
    }
    return cur;
}

Graph make_family(const std::string& tag, const std::vector<long>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family " + tag + ": wrong parameter count");
    };
    if (tag == "path") { need(1); return path_graph(static_cast<std::size_t>(params[0])); }
    if (tag == "cycle") { need(1); return cycle_graph(static_cast<std::size_t>(params[0])); }
    if (tag == "star") { need(1); return star_graph(static_cast<std::size_t>(params[0])); }
    if (tag == "complete-minus-matching") {
        need(1);
        return complete_minus_matching(static_cast<std::size_t>(params[0]));
    }
    if (tag == "hypercube") { need(1); return hypercube_graph(static_cast<unsigned>(params[0])); }
    if (tag == "terminal") { need(1); return terminal_example(static_cast<int>(params[0])); }
    if (tag == "gap") { need(1); return gap_graph(static_cast<int>(params[0])).graph; }
    if (tag == "comb-adj") {
        need(2);
        return comb_graph(static_cast<int>(params[0]), static_cast<int>(params[1]),
                          CombVariant::ExtrasAdjacent).graph;
    }
    if (tag == "comb-nonadj") {
        need(2);
        return comb_graph(static_cast<int>(params[0]), static_cast<int>(params[1]),
                          CombVariant::ExtrasNonadjacent).graph;
    }
    if (tag == "gseries") { need(1); return g_series(static_cast<int>(params[0])); }
    throw std::invalid_argument("unknown family: " + tag);
}

}  // namespace idcodes
