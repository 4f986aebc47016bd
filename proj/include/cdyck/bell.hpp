#pragma once

#include "cdyck/big.hpp"
#include "cdyck/core_model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cdyck {

BigCount factorial(unsigned n);

/// C(m, r); zero when r < 0 or r > m. Throws Error(InvalidIndex) for m < 0.
BigCount binomial(std::int64_t m, std::int64_t r);

/// x (x-1) ... (x-m+1), defined for any signed x.
BigCount falling_factorial(std::int64_t x, unsigned m);

BigCount catalan(unsigned n);

/// Multiplicities alpha_1..alpha_{n-k+1} of a partition of n into k parts:
/// sum alpha_i = k and sum i*alpha_i = n.
using PartitionIndex = std::vector<unsigned>;

/// All of pi(n, k), in colexicographic order of the multiplicity vectors
/// (the last component varies slowest). Requires 1 <= k <= n.
std::vector<PartitionIndex> partitions(unsigned n, unsigned k);

/// B_{n,k}(x_1, x_2, ...) as the sum over pi(n, k). x[i-1] holds x_i and must
/// have at least n-k+1 entries. Throws Error(InvalidIndex) unless 1 <= k <= n.
BigCount partial_bell_sum(unsigned n, unsigned k, std::span<const BigCount> x);

/// B_{n,k} via B_{n,k} = sum_j C(n-1, j-1) x_j B_{n-j,k-1}. Same contract as
/// partial_bell_sum.
BigCount partial_bell_rec(unsigned n, unsigned k, std::span<const BigCount> x);

/// Full triangle T[n][k] = B_{n,k}(x) for 0 <= k <= n <= max_n from the
/// recurrence, with B_{0,0} = 1 and B_{n,0} = 0 for n > 0. Entries of x past
/// its end are read as zero.
std::vector<std::vector<BigCount>> bell_triangle(unsigned max_n, std::span<const BigCount> x);

/// (1! c_1, 2! c_2, ..., n! c_n).
std::vector<BigCount> scaled_colors(const ColorSequence& colors, unsigned n);

}  // namespace cdyck
