#include "cdyck/bell.hpp"

#include "cdyck/error.hpp"

#include <algorithm>
#include <string>

namespace cdyck {

BigCount factorial(unsigned n) {
  BigCount result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigCount binomial(std::int64_t m, std::int64_t r) {
  if (m < 0) throw Error(ErrorKind::InvalidIndex, "binomial upper index " + std::to_string(m));
  if (r < 0 || r > m) return 0;
  r = std::min(r, m - r);
  BigCount result = 1;
  // Each prefix product is itself a binomial coefficient, so the division is exact.
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= m - r + i;
    result /= i;
  }
  return result;
}

BigCount falling_factorial(std::int64_t x, unsigned m) {
  BigCount result = 1;
  for (unsigned i = 0; i < m; ++i) result *= BigCount(x) - i;
  return result;
}

BigCount catalan(unsigned n) {
  return binomial(2 * static_cast<std::int64_t>(n), n) / (n + 1);
}

namespace {

void check_bell_index(unsigned n, unsigned k, std::size_t x_size) {
  if (k < 1 || k > n) {
    throw Error(ErrorKind::InvalidIndex,
                "B_{n,k} needs 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  if (x_size < n - k + 1) {
    throw Error(ErrorKind::InvalidIndex, "B_{" + std::to_string(n) + "," + std::to_string(k) +
                                             "} needs " + std::to_string(n - k + 1) +
                                             " arguments, got " + std::to_string(x_size));
  }
}

// Chooses alpha[index-1] for index = len..1, highest index outermost, which
// yields colexicographic order.
void collect_partitions(PartitionIndex& alpha, unsigned index, unsigned parts_left,
                        unsigned weight_left, std::vector<PartitionIndex>& out) {
  if (index == 1) {
    if (parts_left == weight_left) {
      alpha[0] = parts_left;
      out.push_back(alpha);
    }
    return;
  }
  for (unsigned count = 0; count <= parts_left && count * index <= weight_left; ++count) {
    alpha[index - 1] = count;
    collect_partitions(alpha, index - 1, parts_left - count, weight_left - count * index, out);
  }
  alpha[index - 1] = 0;
}

}  // namespace

std::vector<PartitionIndex> partitions(unsigned n, unsigned k) {
  check_bell_index(n, k, n - k + 1);
  std::vector<PartitionIndex> out;
  PartitionIndex alpha(n - k + 1, 0);
  collect_partitions(alpha, n - k + 1, k, n, out);
  return out;
}

BigCount partial_bell_sum(unsigned n, unsigned k, std::span<const BigCount> x) {
  check_bell_index(n, k, x.size());
  const BigCount n_factorial = factorial(n);
  BigCount total = 0;
  for (const PartitionIndex& alpha : partitions(n, k)) {
    // n! / (prod alpha_i! * prod (i!)^alpha_i) is a multinomial count, hence integral.
    BigCount denominator = 1;
    BigCount monomial = 1;
    for (unsigned i = 1; i <= alpha.size(); ++i) {
      unsigned mult = alpha[i - 1];
      if (mult == 0) continue;
      denominator *= factorial(mult) * boost::multiprecision::pow(factorial(i), mult);
      monomial *= boost::multiprecision::pow(x[i - 1], mult);
    }
    total += n_factorial / denominator * monomial;
  }
  return total;
}

std::vector<std::vector<BigCount>> bell_triangle(unsigned max_n, std::span<const BigCount> x) {
  std::vector<std::vector<BigCount>> table(max_n + 1);
  table[0] = {BigCount(1)};
  for (unsigned n = 1; n <= max_n; ++n) {
    table[n].assign(n + 1, BigCount(0));
    for (unsigned k = 1; k <= n; ++k) {
      BigCount sum = 0;
      for (unsigned j = 1; j <= n - k + 1 && j <= x.size(); ++j) {
        const BigCount& previous = table[n - j][k - 1];
        if (previous == 0 || x[j - 1] == 0) continue;
        sum += binomial(n - 1, j - 1) * x[j - 1] * previous;
      }
      table[n][k] = std::move(sum);
    }
  }
  return table;
}

BigCount partial_bell_rec(unsigned n, unsigned k, std::span<const BigCount> x) {
  check_bell_index(n, k, x.size());
  return bell_triangle(n, x)[n][k];
}

std::vector<BigCount> scaled_colors(const ColorSequence& colors, unsigned n) {
  std::vector<BigCount> out;
  out.reserve(n);
  BigCount j_factorial = 1;
  for (unsigned j = 1; j <= n; ++j) {
    j_factorial *= j;
    out.push_back(j_factorial * color_at(colors, j));
  }
  return out;
}

}  // namespace cdyck
