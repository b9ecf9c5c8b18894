#include "idcodes/util.hpp"

#include <limits>

namespace idcodes {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(r) * (n - k + i) / i;
        if (t > std::numeric_limits<uint64_t>::max()) return std::numeric_limits<uint64_t>::max();
        r = static_cast<uint64_t>(t);
    }
    return r;
}

uint64_t binomial_sum(uint64_t n, uint64_t lo, uint64_t hi) {
    uint64_t s = 0;
    for (uint64_t i = lo; i <= hi && i <= n; ++i) {
        uint64_t b = binomial(n, i);
        if (s + b < s) return std::numeric_limits<uint64_t>::max();
        s += b;
    }
    return s;
}

void for_each_subset(std::size_t n, std::size_t min_size, std::size_t max_size,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    for (std::size_t k = min_size; k <= max_size && k <= n; ++k) {
        if (k == 0) {
            if (!fn({})) return;
            continue;
        }
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            if (!fn(idx)) return;
            more = false;
            for (std::size_t i = k; i-- > 0;) {
                if (idx[i] < n - k + i) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
}

}  // namespace idcodes
