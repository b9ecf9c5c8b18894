#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace idcodes {
namespace hamming {

// Words of F^n as n-bit integers, n <= 24 for enumeration ops.
using Word = uint32_t;

inline int weight(Word x) { return __builtin_popcount(x); }
inline int distance(Word x, Word y) { return weight(x ^ y); }
inline Word parity_bit(Word u) { return static_cast<Word>(weight(u) & 1); }

// Sorted duplicate-free code of fixed length.
struct Code {
    unsigned len = 0;
    std::vector<Word> words;

    static Code make(unsigned len, std::vector<Word> ws);
    std::size_t size() const { return words.size(); }
};

// V(n,r), the size of a Hamming ball.
uint64_t ball_size(unsigned n, unsigned r);

// |B_1(x) ∩ B_1(y)| closed form: n+1 / 2 / 0 by distance.
uint64_t ball_intersection_size(Word x, Word y, unsigned n);

// Word-level verification; verdicts match the generic graph verifier on the
// hypercube graph. Guards: n <= 24, |C| <= 64.
bool is_idc_fast(const Code& c, unsigned r);
bool is_l_idc_fast(const Code& c, unsigned r, unsigned ell);

struct CoverStats {
    std::size_t min_cover = 0, max_cover = 0;
};
CoverStats cover_stats(const Code& c, unsigned r);
inline bool is_mu_covering_fast(const Code& c, unsigned r, std::size_t mu) {
    return cover_stats(c, r).min_cover >= mu;
}

// {(pi(u), u, u+c)} in F^{2n+1}; layout (x,y) = x << |y| | y with the parity
// bit on top.
Code pi_u_construction(const Code& c);

Code direct_sum(const Code& a, const Code& b);

struct LabelledBound {
    std::string name;
    uint64_t value;
};
// Lower bounds on the minimum (r,<=ell)-IdC size in F^n; formulas outside
// their validity range are skipped.
std::vector<LabelledBound> lower_bounds(unsigned n, unsigned r, unsigned ell);
uint64_t best_lower_bound(unsigned n, unsigned r, unsigned ell);

// r(n,K): least radius at which K words can cover F^n. Exhaustive; n <= 5.
unsigned min_covering_radius(unsigned n, std::size_t k);

struct CharacterizationReport {
    bool fold_2l_minus_1 = false;  // (2l-1)-fold 1-covering
    bool l_identifying = false;    // (1,<=l)-identifying, brute force
    bool fold_2l_plus_1 = false;   // (2l+1)-fold 1-covering (plus-code proxy)
    bool iff_checked = false;      // the equivalence was asserted (l >= 3)
};
CharacterizationReport covering_characterizations(const Code& c, unsigned ell);

struct KnownValue {
    unsigned n, r;
    uint64_t value;
    std::string provenance;
};
// Documented exact values of minimum r-IdC sizes in F^n. Data, not a solver
// shortcut.
const std::vector<KnownValue>& known_values();

// One binary string of length n per line; `c` comments allowed.
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& c);

}  // namespace hamming
}  // namespace idcodes
