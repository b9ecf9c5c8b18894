#pragma once

#include <cstdint>
#include <vector>
#include <string>

namespace idcodes {

// Dense fixed-width set of vertex ids 0..n-1, backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t universe_size() const { return n_; }

    void add(std::size_t v) { w_[v >> 6] |= (uint64_t{1} << (v & 63)); }
    void remove(std::size_t v) { w_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
    bool contains(std::size_t v) const { return (w_[v >> 6] >> (v & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
    bool empty() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { a ^= b; return a; }

    bool operator==(const VertexSet& o) const { return w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return w_ != o.w_; }
    // Lexicographic on words; any strict total order works for canonical witnesses.
    bool operator<(const VertexSet& o) const { return w_ < o.w_; }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                out.push_back(i * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    // First set bit, or universe_size() when empty.
    std::size_t first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[i]));
        return n_;
    }

    static VertexSet full(std::size_t n) {
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v) s.add(v);
        return s;
    }
    static VertexSet of(std::size_t n, std::initializer_list<std::size_t> vs) {
        VertexSet s(n);
        for (std::size_t v : vs) s.add(v);
        return s;
    }

    uint64_t word(std::size_t i) const { return w_[i]; }
    std::size_t word_count() const { return w_.size(); }

    std::string to_string() const;  // "{0,3,5}" with 0-based ids

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace idcodes
