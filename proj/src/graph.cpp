#include "idcodes/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace idcodes {

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::size_t v : to_vector()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    rows_[u].add(v);
    rows_[v].add(u);
    dist_.clear();
    ball_tab_.clear();
}

std::size_t Graph::num_edges() const {
    std::size_t deg_sum = 0;
    for (std::size_t v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v : rows_[u].to_vector())
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::bfs_distances(std::size_t src) const {
    std::vector<int> d(n_, kInfDist);
    d[src] = 0;
    std::deque<std::size_t> q{src};
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        for (std::size_t w : rows_[u].to_vector()) {
            if (d[w] == kInfDist) {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    return d;
}

const std::vector<std::vector<int>>& Graph::distances() const {
    if (dist_.empty() && n_ > 0) {
        dist_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v) dist_[v] = bfs_distances(v);
    }
    return dist_;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    const auto d = bfs_distances(0);
    return std::all_of(d.begin(), d.end(), [](int x) { return x != kInfDist; });
}

const VertexSet& Graph::ball(std::size_t v, int r) const {
    auto it = ball_tab_.find(r);
    if (it == ball_tab_.end()) {
        std::vector<VertexSet> tab(n_, VertexSet(n_));
        if (r == 1) {
            for (std::size_t u = 0; u < n_; ++u) {
                tab[u] = rows_[u];
                tab[u].add(u);
            }
        } else {
            const auto& d = distances();
            for (std::size_t u = 0; u < n_; ++u)
                for (std::size_t w = 0; w < n_; ++w)
                    if (d[u][w] <= r) tab[u].add(w);
        }
        it = ball_tab_.emplace(r, std::move(tab)).first;
    }
    return it->second[v];
}

VertexSet Graph::open_ball(std::size_t v, int r) const {
    VertexSet b = ball(v, r);
    b.remove(v);
    return b;
}

bool Graph::is_r_twin_free(int r, std::pair<std::size_t, std::size_t>* witness) const {
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = u + 1; v < n_; ++v) {
            if (ball(u, r) == ball(v, r)) {
                if (witness) *witness = {u, v};
                return false;
            }
        }
    }
    return true;
}

Graph::RemovalResult Graph::remove_vertex(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("remove_vertex: vertex out of range");
    std::vector<std::size_t> map(n_, npos);
    std::size_t next = 0;
    for (std::size_t u = 0; u < n_; ++u)
        if (u != v) map[u] = next++;
    Graph g(n_ - 1);
    for (auto [a, b] : edges())
        if (a != v && b != v) g.add_edge(map[a], map[b]);
    return {std::move(g), std::move(map)};
}

Graph Graph::remove_edge(std::size_t u, std::size_t v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: edge absent");
    Graph g(n_);
    for (auto [a, b] : edges())
        if (!((a == u && b == v) || (a == v && b == u))) g.add_edge(a, b);
    return g;
}

Graph Graph::with_edge(std::size_t u, std::size_t v) const {
    if (has_edge(u, v)) throw std::invalid_argument("with_edge: edge present");
    Graph g(n_);
    for (auto [a, b] : edges()) g.add_edge(a, b);
    g.add_edge(u, v);
    return g;
}

namespace {

bool extend_path(const Graph& g, std::vector<std::size_t>& path, VertexSet& used,
                 std::size_t target_len) {
    if (path.size() == target_len) return true;
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (used.contains(v)) continue;
        if (!g.has_edge(path.back(), v)) continue;
        // induced: v must avoid all earlier path vertices
        bool ok = true;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (g.has_edge(path[i], v)) { ok = false; break; }
        if (!ok) continue;
        path.push_back(v);
        used.add(v);
        if (extend_path(g, path, used, target_len)) return true;
        path.pop_back();
        used.remove(v);
    }
    return false;
}

}  // namespace

bool Graph::has_induced_path(std::size_t path_len) const {
    if (path_len > n_) return false;
    if (path_len == 0) return true;
    if (n_ > 64) throw std::invalid_argument("has_induced_path: size guard exceeded (n > 64)");
    for (std::size_t s = 0; s < n_; ++s) {
        std::vector<std::size_t> path{s};
        VertexSet used(n_);
        used.add(s);
        if (extend_path(*this, path, used, path_len)) return true;
    }
    return false;
}

namespace {

// Max independent set = max clique of the complement; branch and bound
// with greedy colouring upper bound (Tomita-style).
struct MisSolver {
    const std::vector<VertexSet>& comp;  // complement adjacency
    std::size_t n;
    std::size_t best = 0;

    void expand(std::vector<std::size_t>& cand, std::size_t cur) {
        if (cand.empty()) {
            best = std::max(best, cur);
            return;
        }
        // greedy colouring of candidates in complement graph
        std::vector<std::size_t> colour(cand.size());
        std::vector<VertexSet> classes;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(comp[cand[i]])) ++c;
            if (c == classes.size()) classes.emplace_back(n);
            classes[c].add(cand[i]);
            colour[i] = c + 1;
        }
        for (std::size_t i = cand.size(); i-- > 0;) {
            if (cur + colour[i] <= best) return;
            std::size_t v = cand[i];
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < i; ++j)
                if (comp[v].contains(cand[j])) next.push_back(cand[j]);
            expand(next, cur + 1);
        }
    }
};

}  // namespace

std::size_t independence_number(const Graph& g) {
    const std::size_t n = g.order();
    if (n > 40) throw std::invalid_argument("independence_number: guard n <= 40 exceeded");
    if (n == 0) return 0;
    std::vector<VertexSet> comp(n, VertexSet(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && !g.has_edge(u, v)) comp[u].add(v);
    MisSolver s{comp, n};
    std::vector<std::size_t> cand(n);
    for (std::size_t i = 0; i < n; ++i) cand[i] = i;
    s.expand(cand, 0);
    return s.best;
}

GraphParameters Graph::parameters() const {
    GraphParameters p;
    p.num_edges = num_edges();
    p.min_degree = n_ ? degree(0) : 0;
    for (std::size_t v = 1; v < n_; ++v) p.min_degree = std::min(p.min_degree, degree(v));
    if (n_ > 0 && is_connected()) {
        const auto& d = distances();
        int rad = kInfDist, diam = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            int ecc = 0;
            for (std::size_t u = 0; u < n_; ++u) ecc = std::max(ecc, d[v][u]);
            rad = std::min(rad, ecc);
            diam = std::max(diam, ecc);
        }
        p.radius = rad;
        p.diameter = diam;
    }
    p.independence_number = independence_number(*this);
    return p;
}

}  // namespace idcodes
