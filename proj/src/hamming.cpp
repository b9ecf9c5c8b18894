#include "idcodes/hamming.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "idcodes/util.hpp"

namespace idcodes {
namespace hamming {

namespace {

void check_enum_guard(unsigned n) {
    if (n > 24) throw std::invalid_argument("hamming: enumeration guard n <= 24");
}

void check_code(const Code& c) {
    check_enum_guard(c.len);
    if (c.size() > 64) throw std::invalid_argument("hamming: fast path guard |C| <= 64");
}

// codeword-index signature of B_r(x) ∩ C
uint64_t signature(const Code& c, unsigned r, Word x) {
    uint64_t sig = 0;
    for (std::size_t i = 0; i < c.words.size(); ++i)
        if (static_cast<unsigned>(distance(x, c.words[i])) <= r) sig |= uint64_t{1} << i;
    return sig;
}

}  // namespace

Code Code::make(unsigned len, std::vector<Word> ws) {
    if (len > 31) throw std::invalid_argument("hamming: length guard");
    for (Word w : ws)
        if (w >= (Word{1} << len)) throw std::invalid_argument("hamming: word exceeds length");
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return Code{len, std::move(ws)};
}

uint64_t ball_size(unsigned n, unsigned r) { return binomial_sum(n, 0, r); }

uint64_t ball_intersection_size(Word x, Word y, unsigned n) {
    const int d = distance(x, y);
    if (d == 0) return n + 1;
    if (d <= 2) return 2;
    return 0;
}

bool is_idc_fast(const Code& c, unsigned r) {
    check_code(c);
    const uint64_t total = uint64_t{1} << c.len;
    std::vector<uint64_t> sigs(total);
    for (uint64_t x = 0; x < total; ++x) {
        sigs[x] = signature(c, r, static_cast<Word>(x));
        if (sigs[x] == 0) return false;
    }
    std::sort(sigs.begin(), sigs.end());
    return std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
}

bool is_l_idc_fast(const Code& c, unsigned r, unsigned ell) {
    check_code(c);
    if (ell < 1) throw std::invalid_argument("ell >= 1");
    const uint64_t total = uint64_t{1} << c.len;
    if (binomial_sum(total, 1, ell) > 1000000)
        throw std::invalid_argument("hamming: subset enumeration guard exceeded");
    std::vector<uint64_t> single(total);
    for (uint64_t x = 0; x < total; ++x) {
        single[x] = signature(c, r, static_cast<Word>(x));
        if (single[x] == 0) return false;  // not dominating
    }
    std::vector<uint64_t> sigs;
    bool ok = true;
    for_each_subset(static_cast<std::size_t>(total), 1, ell,
                    [&](const std::vector<std::size_t>& xs) {
                        uint64_t u = 0;
                        for (std::size_t x : xs) u |= single[x];
                        sigs.push_back(u);
                        return true;
                    });
    std::sort(sigs.begin(), sigs.end());
    ok = std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
    return ok;
}

CoverStats cover_stats(const Code& c, unsigned r) {
    check_code(c);
    const uint64_t total = uint64_t{1} << c.len;
    CoverStats st{SIZE_MAX, 0};
    for (uint64_t x = 0; x < total; ++x) {
        const auto k = static_cast<std::size_t>(__builtin_popcountll(
            signature(c, r, static_cast<Word>(x))));
        st.min_cover = std::min(st.min_cover, k);
        st.max_cover = std::max(st.max_cover, k);
    }
    return st;
}

Code pi_u_construction(const Code& c) {
    check_enum_guard(c.len);
    const unsigned n = c.len;
    if (2 * n + 1 > 31) throw std::invalid_argument("pi_u_construction: output length guard");
    std::vector<Word> out;
    out.reserve((std::size_t{1} << n) * c.size());
    for (Word u = 0; u < (Word{1} << n); ++u)
        for (Word cw : c.words) {
            const Word tail = static_cast<Word>(u ^ cw);
            out.push_back((parity_bit(u) << (2 * n)) | (u << n) | tail);
        }
    return Code::make(2 * n + 1, std::move(out));
}

Code direct_sum(const Code& a, const Code& b) {
    std::vector<Word> out;
    out.reserve(a.size() * b.size());
    for (Word x : a.words)
        for (Word y : b.words) out.push_back((x << b.len) | y);
    return Code::make(a.len + b.len, std::move(out));
}

namespace {

using u128 = unsigned __int128;

// Least K whose cover-multiplicity budget admits 2^n distinct identifying
// sets; direction (i) uses V(n,r), direction (ii) uses V(n,n-r-1) and
// counts the empty multiplicity class too.
uint64_t refined_bound(unsigned n, unsigned r, bool upper_half) {
    const u128 space = u128{1} << n;
    const uint64_t vol = upper_half ? ball_size(n, n - r - 1) : ball_size(n, r);
    for (uint64_t k = 1; k <= (uint64_t{1} << n); ++k) {
        u128 partial = upper_half ? 1 : 0;  // includes the i = 0 term in case (ii)
        u128 weighted = 0;
        uint64_t s = 0;
        for (uint64_t i = 1; i <= k; ++i) {
            const uint64_t bin = binomial(k, i);
            if (partial + bin > space) break;
            partial += bin;
            weighted += u128(i) * bin;
            s = i;
        }
        // first s multiplicity classes filled, remaining words need s+1 each
        const u128 lhs = u128(k) * vol;
        const u128 rhs = weighted + u128(s + 1) * (space - partial);
        if (lhs >= rhs) return k;
    }
    return uint64_t{1} << n;
}

uint64_t ceil_div(u128 a, u128 b) { return static_cast<uint64_t>((a + b - 1) / b); }

}  // namespace

std::vector<LabelledBound> lower_bounds(unsigned n, unsigned r, unsigned ell) {
    if (r < 1 || n < 1) throw std::invalid_argument("lower_bounds: n, r >= 1");
    std::vector<LabelledBound> out;
    const u128 space = u128{1} << n;
    if (ell == 1) {
        out.push_back({"doubly-covered", ceil_div(2 * space, ball_size(n, r) + 1)});
        if (2 * r < n)
            out.push_back({"multiplicity-refined", refined_bound(n, r, false)});
        else if (r <= n - 1)
            out.push_back({"multiplicity-refined", refined_bound(n, r, true)});
        if (r == 1)
            out.push_back({"pair-counting", ceil_div(u128(n) * space, ball_size(n, 2))});
    } else {
        if (r == 1) {
            out.push_back({"mu-fold-covering", ceil_div(u128(2 * ell - 1) * space, n + 1)});
        } else {
            out.push_back({"fold-2l-2", ceil_div(u128(2 * ell - 2) * space, binomial(n, r))});
            out.push_back({"fold-2l-1",
                           ceil_div(u128(2 * ell - 1) * space,
                                    binomial(n, r) + binomial(n, r - 1))});
        }
    }
    return out;
}

uint64_t best_lower_bound(unsigned n, unsigned r, unsigned ell) {
    uint64_t best = 0;
    for (const auto& b : lower_bounds(n, r, ell)) best = std::max(best, b.value);
    return best;
}

unsigned min_covering_radius(unsigned n, std::size_t k) {
    if (n > 5) throw std::invalid_argument("min_covering_radius: guard n <= 5");
    const std::size_t total = std::size_t{1} << n;
    if (k == 0 || k > total) throw std::invalid_argument("min_covering_radius: 1 <= K <= 2^n");
    if (binomial(total, k) > 1000000)
        throw std::invalid_argument("min_covering_radius: enumeration guard exceeded");
    for (unsigned r = 0; r <= n; ++r) {
        // ball masks over the 2^n words
        std::vector<uint32_t> ball(total, 0);
        for (std::size_t x = 0; x < total; ++x)
            for (std::size_t y = 0; y < total; ++y)
                if (static_cast<unsigned>(distance(static_cast<Word>(x),
                                                   static_cast<Word>(y))) <= r)
                    ball[x] |= uint32_t{1} << y;
        const uint32_t all = (total == 32) ? ~uint32_t{0} : ((uint32_t{1} << total) - 1);
        bool found = false;
        for_each_subset(total, k, k, [&](const std::vector<std::size_t>& idx) {
            uint32_t cov = 0;
            for (std::size_t x : idx) cov |= ball[x];
            if (cov == all) { found = true; return false; }
            return true;
        });
        if (found) return r;
    }
    return n;  // a single word always covers at radius n
}

CharacterizationReport covering_characterizations(const Code& c, unsigned ell) {
    if (ell < 2) throw std::invalid_argument("covering_characterizations: ell >= 2");
    CharacterizationReport rep;
    rep.fold_2l_minus_1 = is_mu_covering_fast(c, 1, 2 * ell - 1);
    rep.l_identifying = is_l_idc_fast(c, 1, ell);
    rep.fold_2l_plus_1 = is_mu_covering_fast(c, 1, 2 * ell + 1);
    if (ell >= 3) {
        rep.iff_checked = true;
        if (rep.fold_2l_minus_1 != rep.l_identifying)
            throw std::logic_error("covering characterization equivalence violated");
    }
    return rep;
}

const std::vector<KnownValue>& known_values() {
    static const std::vector<KnownValue> table = {
        {2, 1, 3, "Karpovsky, Chakrabarty, Levitin 1998"},
        {3, 1, 4, "Karpovsky, Chakrabarty, Levitin 1998"},
        {4, 1, 7, "Blass, Honkala, Litsyn 2001"},
        {5, 1, 10, "Karpovsky, Chakrabarty, Levitin 1998"},
        {6, 1, 19, "Exoo, Laihonen, Ranto 2008 (computer search)"},
        {7, 1, 32, "Blass, Honkala, Litsyn 2001"},
        {3, 2, 7, "Blass, Honkala, Litsyn 2000 (length r+1 closed form)"},
        {4, 2, 6, "Blass, Honkala, Litsyn 2000"},
        {5, 2, 6, "Blass, Honkala, Litsyn 2000"},
        {6, 2, 8, "Blass, Honkala, Litsyn 2000"},
        {7, 2, 14, "Exoo 2006 (exhaustive computer search)"},
        {4, 3, 15, "Blass, Honkala, Litsyn 2000 (length r+1 closed form)"},
        {5, 3, 10, "Honkala, Laihonen 1999 construction; lower bound Exoo et al. 2008"},
        {6, 3, 7, "Charon, Hudry, Lobstein 2010"},
        {7, 3, 8, "Charon, Hudry, Lobstein 2010"},
    };
    return table;
}

Code read_code(std::istream& in) {
    std::vector<Word> ws;
    unsigned len = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        Word w = 0;
        unsigned bits = 0;
        for (char ch : line) {
            if (ch == '0' || ch == '1') {
                w = (w << 1) | static_cast<Word>(ch - '0');
                ++bits;
            } else if (ch != ' ' && ch != '\r') {
                throw std::runtime_error("hamming code parse: bad character");
            }
        }
        if (bits == 0) continue;
        if (len == 0) len = bits;
        if (bits != len) throw std::runtime_error("hamming code parse: ragged word lengths");
        ws.push_back(w);
    }
    if (len == 0) throw std::runtime_error("hamming code parse: empty file");
    return Code::make(len, std::move(ws));
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hamming code file: " + path);
    return read_code(in);
}

void write_code(std::ostream& out, const Code& c) {
    for (Word w : c.words) {
        for (unsigned b = c.len; b-- > 0;) out << ((w >> b) & 1);
        out << '\n';
    }
}

}  // namespace hamming
}  // namespace idcodes
