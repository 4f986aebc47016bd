#pragma once

#include "cdyck/big.hpp"
#include "cdyck/core_model.hpp"

#include <vector>

namespace cdyck {

/// y_0..y_N for one (params, colors) pair; values[0] is always 1.
struct CountSeries {
  PathParams params;
  ColorSequence colors;
  std::vector<BigCount> values;
};

/// Refined counts for a fixed n: row[k-1] is the number of words with exactly k peaks.
struct PeakTable {
  unsigned n = 0;
  std::vector<BigCount> row;

  const BigCount& at(unsigned k) const { return row.at(k - 1); }
};

/// y_n from the convolution recurrence
///   y_n = sum_l c_l * y^{(a l + b)}_{n-l},
/// where y^{(r)} is the r-fold convolution power. Powers are maintained
/// incrementally as the series grows, never by enumerating compositions.
CountSeries count_recurrence(const PathParams& params, const ColorSequence& colors, unsigned max_n);

/// y_n = sum_k N(n, k) with N from peak_table. Every term is checked to be integral.
CountSeries count_bell(const PathParams& params, const ColorSequence& colors, unsigned max_n);

/// sum over m_1 + ... + m_r = n of z_{m_1} ... z_{m_r}, by iterated pairwise
/// convolution of the series. Throws Error(InvalidIndex) if r == 0 or the
/// series is shorter than n + 1.
BigCount convolution_power_direct(const CountSeries& series, unsigned r, unsigned n);

/// r * sum_k C(a n + b k + r - 1, k - 1) (k-1)!/n! B_{n,k}(1!c_1, 2!c_2, ...).
/// Requires r >= 1 and n >= 1 (InvalidIndex otherwise); throws NonIntegerTerm
/// if the quotient is not integral.
BigCount convolution_power_closed(const PathParams& params, const ColorSequence& colors,
                                  unsigned r, unsigned n);

/// N_{a,b}(n, k) = C(a n + b k, k - 1) (k-1)!/n! B_{n,k}(1!c_1, 2!c_2, ...) for k = 1..n.
PeakTable peak_table(const PathParams& params, const ColorSequence& colors, unsigned n);

}  // namespace cdyck
