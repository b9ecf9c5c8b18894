#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace idcodes {

// C(n,k), saturating at UINT64_MAX.
uint64_t binomial(uint64_t n, uint64_t k);

// Sum of C(n,i) for i in [lo, hi], saturating.
uint64_t binomial_sum(uint64_t n, uint64_t lo, uint64_t hi);

// Visits every subset of {0..n-1} of size in [min_size, max_size], in
// lexicographic order (by size, then combination). Stops early when the
// callback returns false.
void for_each_subset(std::size_t n, std::size_t min_size, std::size_t max_size,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn);

}  // namespace idcodes
