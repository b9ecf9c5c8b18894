#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace idcodes {
namespace grid {

enum class Kind { Square, Triangular, King, Hexagonal };

Kind kind_from_string(const std::string& s);
std::string to_string(Kind k);

struct Point {
    int x = 0, y = 0;
    auto operator<=>(const Point&) const = default;
};

// Exact rational, reduced, den > 0.
struct Rational {
    long long num = 0, den = 1;
    static Rational make(long long n, long long d);
    bool operator==(const Rational&) const = default;
};

// Sublattice of Z^2 in Hermite normal form: v1 = (a, 0), v2 = (c, d),
// a, d > 0, 0 <= c < a; canonical, duplicate-free.
struct Lattice {
    int a = 1, c = 0, d = 1;

    long long det() const { return static_cast<long long>(a) * d; }
    // reduce from an arbitrary basis (throws on det 0)
    static Lattice from_basis(int b11, int b12, int b21, int b22);
    // canonical representative in [0,a) x [0,d)
    Point reduce(Point p) const;
    std::size_t cell_index(Point p) const;  // y*a + x of the representative
    // both basis vectors have even coordinate sum (hexagonal requirement)
    bool parity_preserving() const { return a % 2 == 0 && (c + d) % 2 == 0; }
};

struct PeriodicCode {
    Kind kind = Kind::Square;
    Lattice lattice;
    std::vector<Point> offsets;  // canonical, sorted, duplicate-free

    static PeriodicCode make(Kind kind, Lattice lat, std::vector<Point> offsets);
    Rational density() const;
};

int grid_distance(Kind kind, Point p, Point q);
// all points within distance r of center
std::vector<Point> ball_points(Kind kind, Point center, int r);

struct GridViolation {
    std::string kind;  // undominated | unseparated
    Point u, v;
};

// Periodic r-IdC check: domination over one fundamental domain, separation
// for pairs within distance 2r. Pairs farther apart have disjoint nonempty
// identifying sets once domination holds, so skipping them is sound.
std::optional<GridViolation> verify_periodic(const PeriodicCode& pc, int r);

// Independent finite-window oracle: builds the induced grid on
// [0,width)^2 and checks domination/separation for vertices whose balls
// stay inside the window. width must exceed the period plus 4r margin.
std::optional<GridViolation> window_check(const PeriodicCode& pc, int r, int width);

// per-cell |I_r| over the fundamental domain, paired with codeword flag
std::vector<std::pair<std::size_t, bool>> coverage_profile(const PeriodicCode& pc, int r);

// Single codeword in a 2 x 2r box, rows shifted two columns: basis
// (2r,0),(2,2), density 1/(4r). Requires r >= 2.
PeriodicCode king_construction(int r);

// all HNF sublattices of the given index (parity-filtered for hexagonal)
std::vector<Lattice> enumerate_sublattices(Kind kind, long long det);

enum class SearchMode { Exhaustive, Anneal };
struct SearchOptions {
    SearchMode mode = SearchMode::Exhaustive;
    uint64_t seed = 1;
    uint64_t max_iterations = 50000000;  // anneal budget
};
// Searches for a periodic r-IdC with `count` codewords per fundamental
// domain of index `det`. Empty optional = nothing found (not an error).
std::optional<PeriodicCode> search_tiles(Kind kind, int r, long long det, std::size_t count,
                                         const SearchOptions& opts = {});

// Tile spec text format: `grid <kind>` / `basis a b c d` / `point x y`.
PeriodicCode read_tile(std::istream& in);
PeriodicCode read_tile_file(const std::string& path);
void write_tile(std::ostream& out, const PeriodicCode& pc);

}  // namespace grid
}  // namespace idcodes
