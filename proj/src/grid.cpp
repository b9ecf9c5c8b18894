#include "idcodes/grid.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace idcodes {
namespace grid {

Kind kind_from_string(const std::string& s) {
    if (s == "square") return Kind::Square;
    if (s == "triangular") return Kind::Triangular;
    if (s == "king") return Kind::King;
    if (s == "hexagonal") return Kind::Hexagonal;
    throw std::invalid_argument("unknown grid kind: " + s);
}

std::string to_string(Kind k) {
    switch (k) {
        case Kind::Square: return "square";
        case Kind::Triangular: return "triangular";
        case Kind::King: return "king";
        case Kind::Hexagonal: return "hexagonal";
    }
    return "?";
}

Rational Rational::make(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// extended gcd: returns g, sets x, y with a*x + b*y = g, g >= 0
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

Lattice Lattice::from_basis(int b11, int b12, int b21, int b22) {
    long long det = static_cast<long long>(b11) * b22 - static_cast<long long>(b12) * b21;
    if (det == 0) throw std::invalid_argument("basis vectors are linearly dependent");
    long long u, v;
    long long g = ext_gcd(b12, b22, u, v);  // g > 0 since det != 0
    long long a = std::abs(det) / g;
    long long c = u * b11 + v * b21;
    c = ((c % a) + a) % a;
    if (a > INT32_MAX) throw std::invalid_argument("lattice index too large");
    Lattice lat;
    lat.a = static_cast<int>(a);
    lat.c = static_cast<int>(c);
    lat.d = static_cast<int>(g);
    return lat;
}

Point Lattice::reduce(Point p) const {
    long long t = floor_div(p.y, d);
    long long x = p.x - t * c;
    long long y = p.y - t * d;
    x = ((x % a) + a) % a;
    return {static_cast<int>(x), static_cast<int>(y)};
}

std::size_t Lattice::cell_index(Point p) const {
    Point q = reduce(p);
    return static_cast<std::size_t>(q.y) * a + q.x;
}

PeriodicCode PeriodicCode::make(Kind kind, Lattice lat, std::vector<Point> offsets) {
    if (kind == Kind::Hexagonal && !lat.parity_preserving())
        throw std::invalid_argument(
            "hexagonal period lattice must preserve the parity classes "
            "(both basis vectors need even coordinate sum)");
    PeriodicCode pc;
    pc.kind = kind;
    pc.lattice = lat;
    for (Point& p : offsets) p = lat.reduce(p);
    std::sort(offsets.begin(), offsets.end());
    offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
    pc.offsets = std::move(offsets);
    return pc;
}

Rational PeriodicCode::density() const {
    return Rational::make(static_cast<long long>(offsets.size()), lattice.det());
}

namespace {

std::vector<Point> neighbors(Kind kind, Point p) {
    switch (kind) {
        case Kind::Square:
            return {{p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
        case Kind::Triangular:
            return {{p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1},
                    {p.x + 1, p.y - 1}, {p.x - 1, p.y + 1}};
        case Kind::King: {
            std::vector<Point> out;
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy = -1; dy <= 1; ++dy)
                    if (dx || dy) out.push_back({p.x + dx, p.y + dy});
            return out;
        }
        case Kind::Hexagonal: {
            int vert = ((p.x + p.y) % 2 + 2) % 2 == 0 ? 1 : -1;
            return {{p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + vert}};
        }
    }
    return {};
}

// layered BFS; stops after depth `max_depth`, or as soon as `target` is seen
std::vector<Point> bfs_points(Kind kind, Point center, int max_depth, const Point* target,
                              int* found_depth) {
    std::set<Point> seen{center};
    std::vector<Point> frontier{center}, all{center};
    if (target && center == *target) {
        if (found_depth) *found_depth = 0;
        return all;
    }
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::vector<Point> next;
        for (const Point& p : frontier)
            for (const Point& q : neighbors(kind, p))
                if (seen.insert(q).second) {
                    next.push_back(q);
                    all.push_back(q);
                    if (target && q == *target) {
                        if (found_depth) *found_depth = depth;
                        return all;
                    }
                }
        frontier = std::move(next);
    }
    if (found_depth) *found_depth = -1;
    return all;
}

}  // namespace

int grid_distance(Kind kind, Point p, Point q) {
    int dx = q.x - p.x, dy = q.y - p.y;
    int ax = std::abs(dx), ay = std::abs(dy);
    switch (kind) {
        case Kind::Square: return ax + ay;
        case Kind::King: return std::max(ax, ay);
        case Kind::Triangular:
            // the (1,-1) diagonal lets opposite-sign steps merge
            return (static_cast<long long>(dx) * dy < 0) ? std::max(ax, ay) : ax + ay;
        case Kind::Hexagonal: {
            int depth = -1;
            // hex distance is finite and >= L1; layered BFS is exact
            bfs_points(kind, p, 2 * (ax + ay) + 8, &q, &depth);
            assert(depth >= 0);
            return depth;
        }
    }
    return 0;
}

std::vector<Point> ball_points(Kind kind, Point center, int r) {
    if (r < 0) return {};
    if (kind == Kind::Hexagonal) {
        auto pts = bfs_points(kind, center, r, nullptr, nullptr);
        std::sort(pts.begin(), pts.end());
        return pts;
    }
    std::vector<Point> out;
    for (int dx = -r; dx <= r; ++dx)
        for (int dy = -r; dy <= r; ++dy) {
            Point p{center.x + dx, center.y + dy};
            if (grid_distance(kind, center, p) <= r) out.push_back(p);
        }
    return out;  // already lexicographic
}

namespace {

struct CodewordTest {
    const Lattice* lat;
    std::set<std::size_t> cells;
    bool operator()(Point p) const { return cells.count(lat->cell_index(p)) != 0; }
};

CodewordTest make_test(const PeriodicCode& pc) {
    CodewordTest t{&pc.lattice, {}};
    for (const Point& p : pc.offsets) t.cells.insert(pc.lattice.cell_index(p));
    return t;
}

std::vector<Point> id_set(const PeriodicCode& pc, const CodewordTest& is_cw, Point u, int r) {
    std::vector<Point> out;
    for (const Point& p : ball_points(pc.kind, u, r))
        if (is_cw(p)) out.push_back(p);
    return out;
}

}  // namespace

std::optional<GridViolation> verify_periodic(const PeriodicCode& pc, int r) {
    if (r < 1) throw std::invalid_argument("radius must be positive");
    CodewordTest is_cw = make_test(pc);
    const Lattice& lat = pc.lattice;
    for (int y = 0; y < lat.d; ++y)
        for (int x = 0; x < lat.a; ++x) {
            Point u{x, y};
            std::vector<Point> iu = id_set(pc, is_cw, u, r);
            if (iu.empty()) return GridViolation{"undominated", u, u};
            for (const Point& v : ball_points(pc.kind, u, 2 * r)) {
                if (v == u) continue;
                if (id_set(pc, is_cw, v, r) == iu) return GridViolation{"unseparated", u, v};
            }
        }
    return std::nullopt;
}

std::optional<GridViolation> window_check(const PeriodicCode& pc, int r, int width) {
    if (width < 4 * r + 4) throw std::invalid_argument("window too small");
    CodewordTest is_cw = make_test(pc);
    auto inside = [&](Point p) { return p.x >= 0 && p.x < width && p.y >= 0 && p.y < width; };
    // margin r+2 keeps every shortest path of an interior ball in-window
    // (hexagonal detours shift at most one column)
    const int m = r + 2;
    auto interior = [&](Point p) {
        return p.x >= m && p.x < width - m && p.y >= m && p.y < width - m;
    };
    // identifying set via BFS restricted to the window (independent of the
    // closed-form distances used by verify_periodic)
    auto id_set_w = [&](Point u) {
        std::set<Point> seen{u};
        std::vector<Point> frontier{u}, iset;
        if (is_cw(u)) iset.push_back(u);
        for (int depth = 1; depth <= r; ++depth) {
            std::vector<Point> next;
            for (const Point& p : frontier)
                for (const Point& q : neighbors(pc.kind, p))
                    if (inside(q) && seen.insert(q).second) {
                        next.push_back(q);
                        if (is_cw(q)) iset.push_back(q);
                    }
            frontier = std::move(next);
        }
        std::sort(iset.begin(), iset.end());
        return iset;
    };
    std::vector<Point> pts;
    std::vector<std::vector<Point>> isets;
    for (int y = 0; y < width; ++y)
        for (int x = 0; x < width; ++x) {
            Point u{x, y};
            if (!interior(u)) continue;
            auto iu = id_set_w(u);
            if (iu.empty()) return GridViolation{"undominated", u, u};
            pts.push_back(u);
            isets.push_back(std::move(iu));
        }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (isets[i] == isets[j]) return GridViolation{"unseparated", pts[i], pts[j]};
    return std::nullopt;
}

std::vector<std::pair<std::size_t, bool>> coverage_profile(const PeriodicCode& pc, int r) {
    CodewordTest is_cw = make_test(pc);
    std::vector<std::pair<std::size_t, bool>> out;
    for (int y = 0; y < pc.lattice.d; ++y)
        for (int x = 0; x < pc.lattice.a; ++x) {
            Point u{x, y};
            out.emplace_back(id_set(pc, is_cw, u, r).size(), is_cw(u));
        }
    return out;
}

PeriodicCode king_construction(int r) {
    if (r < 2) throw std::invalid_argument("king construction needs r >= 2");
    Lattice lat = Lattice::from_basis(2 * r, 0, 2, 2);
    return PeriodicCode::make(Kind::King, lat, {{0, 0}});
}

std::vector<Lattice> enumerate_sublattices(Kind kind, long long det) {
    if (det <= 0) throw std::invalid_argument("lattice index must be positive");
    std::vector<Lattice> out;
    for (long long d = 1; d <= det; ++d) {
        if (det % d != 0) continue;
        long long a = det / d;
        for (long long c = 0; c < a; ++c) {
            Lattice lat{static_cast<int>(a), static_cast<int>(c), static_cast<int>(d)};
            if (kind == Kind::Hexagonal && !lat.parity_preserving()) continue;
            out.push_back(lat);
        }
    }
    return out;
}

namespace {

// Constraint masks over the det fundamental cells: every identifying-code
// condition reduces to "the offset mask hits this cell mask".  Domination at
// u uses the cells of B_r(u); separation of u,v the cells of B_r(u) Δ B_r(v)
// (shared codewords lie in both identifying sets, so only the difference
// decides).
struct TileInstance {
    Lattice lat;
    std::vector<uint64_t> masks;
    bool feasible = true;
};

TileInstance build_instance(Kind kind, int r, const Lattice& lat) {
    TileInstance inst;
    inst.lat = lat;
    auto cell_mask = [&](const std::vector<Point>& pts) {
        uint64_t m = 0;
        for (const Point& p : pts) m |= uint64_t{1} << lat.cell_index(p);
        return m;
    };
    for (int y = 0; y < lat.d && inst.feasible; ++y)
        for (int x = 0; x < lat.a; ++x) {
            Point u{x, y};
            std::vector<Point> bu = ball_points(kind, u, r);
            inst.masks.push_back(cell_mask(bu));
            for (const Point& v : ball_points(kind, u, 2 * r)) {
                if (v == u) continue;
                std::vector<Point> bv = ball_points(kind, v, r), diff;
                std::set_symmetric_difference(bu.begin(), bu.end(), bv.begin(), bv.end(),
                                              std::back_inserter(diff));
                uint64_t m = cell_mask(diff);
                if (m == 0) {  // translation-equivalent pair: no code works here
                    inst.feasible = false;
                    break;
                }
                inst.masks.push_back(m);
            }
        }
    if (inst.feasible) {
        std::sort(inst.masks.begin(), inst.masks.end());
        inst.masks.erase(std::unique(inst.masks.begin(), inst.masks.end()), inst.masks.end());
    }
    return inst;
}

std::size_t violations(const TileInstance& inst, uint64_t mask) {
    std::size_t bad = 0;
    for (uint64_t m : inst.masks)
        if ((m & mask) == 0) ++bad;
    return bad;
}

PeriodicCode code_from_mask(Kind kind, const Lattice& lat, uint64_t mask) {
    std::vector<Point> offsets;
    for (int i = 0; i < lat.a * lat.d; ++i)
        if (mask >> i & 1) offsets.push_back({i % lat.a, i / lat.a});
    return PeriodicCode::make(kind, lat, std::move(offsets));
}

uint64_t binom_capped(long long n, long long k, uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
        if (r > cap) return cap + 1;
    }
    return static_cast<uint64_t>(r);
}

}  // namespace

std::optional<PeriodicCode> search_tiles(Kind kind, int r, long long det, std::size_t count,
                                         const SearchOptions& opts) {
    if (det > 62) throw std::invalid_argument("tile search supports lattice index <= 62");
    if (count == 0 || static_cast<long long>(count) > det)
        throw std::invalid_argument("codeword count must be in [1, det]");
    std::vector<TileInstance> insts;
    for (const Lattice& lat : enumerate_sublattices(kind, det)) {
        TileInstance inst = build_instance(kind, r, lat);
        if (inst.feasible) insts.push_back(std::move(inst));
    }
    if (insts.empty()) return std::nullopt;

    auto finish = [&](const TileInstance& inst, uint64_t mask) {
        PeriodicCode pc = code_from_mask(kind, inst.lat, mask);
        assert(!verify_periodic(pc, r));  // independent re-check
        return pc;
    };

    if (opts.mode == SearchMode::Exhaustive) {
        uint64_t per = binom_capped(det, static_cast<long long>(count), 100000000ull);
        if (per > 100000000ull / std::max<std::size_t>(insts.size(), 1))
            throw std::invalid_argument("exhaustive tile search too large; use anneal mode");
        for (const TileInstance& inst : insts) {
            uint64_t mask = (uint64_t{1} << count) - 1;
            const uint64_t limit = uint64_t{1} << det;
            while (mask < limit) {
                if (violations(inst, mask) == 0) return finish(inst, mask);
                uint64_t c = mask & -mask, rp = mask + c;  // Gosper's hack
                mask = (((rp ^ mask) >> 2) / c) | rp;
            }
        }
        return std::nullopt;
    }

    // anneal: hill climbing with sideways moves and random restarts
    std::mt19937_64 rng(opts.seed);
    const int cells = static_cast<int>(det);
    std::vector<int> perm(cells);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t iters = 0;
    while (iters < opts.max_iterations) {
        const TileInstance& inst =
            insts[std::uniform_int_distribution<std::size_t>(0, insts.size() - 1)(rng)];
        std::shuffle(perm.begin(), perm.end(), rng);
        uint64_t mask = 0;
        for (std::size_t i = 0; i < count; ++i) mask |= uint64_t{1} << perm[i];
        std::size_t obj = violations(inst, mask);
        uint64_t stall = 0;
        while (obj > 0 && stall < 2000 && iters < opts.max_iterations) {
            ++iters;
            int out = std::uniform_int_distribution<int>(0, cells - 1)(rng);
            int in = std::uniform_int_distribution<int>(0, cells - 1)(rng);
            if (!(mask >> out & 1) || (mask >> in & 1)) continue;
            uint64_t cand = (mask & ~(uint64_t{1} << out)) | uint64_t{1} << in;
            std::size_t cobj = violations(inst, cand);
            if (cobj <= obj) {
                stall = (cobj < obj) ? 0 : stall + 1;
                mask = cand;
                obj = cobj;
            } else {
                ++stall;
            }
        }
        if (obj == 0) return finish(inst, mask);
    }
    return std::nullopt;
}

PeriodicCode read_tile(std::istream& in) {
    std::optional<Kind> kind;
    std::optional<Lattice> lat;
    std::vector<Point> offsets;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "grid") {
            std::string k;
            if (!(ls >> k)) throw std::runtime_error("tile: grid line needs a kind");
            kind = kind_from_string(k);
        } else if (tok == "basis") {
            int a, b, c, d;
            if (!(ls >> a >> b >> c >> d)) throw std::runtime_error("tile: basis needs 4 integers");
            lat = Lattice::from_basis(a, b, c, d);
        } else if (tok == "point") {
            Point p;
            if (!(ls >> p.x >> p.y)) throw std::runtime_error("tile: point needs 2 integers");
            offsets.push_back(p);
        } else {
            throw std::runtime_error("tile: unknown directive: " + tok);
        }
    }
    if (!kind) throw std::runtime_error("tile: missing grid line");
    if (!lat) throw std::runtime_error("tile: missing basis line");
    return PeriodicCode::make(*kind, *lat, std::move(offsets));
}

PeriodicCode read_tile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_tile(in);
}

void write_tile(std::ostream& out, const PeriodicCode& pc) {
    out << "grid " << to_string(pc.kind) << "\n";
    out << "basis " << pc.lattice.a << " 0 " << pc.lattice.c << " " << pc.lattice.d << "\n";
    for (const Point& p : pc.offsets) out << "point " << p.x << " " << p.y << "\n";
}

}  // namespace grid
}  // namespace idcodes
