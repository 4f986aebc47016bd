#include "cdyck/counting.hpp"

#include "cdyck/bell.hpp"
#include "cdyck/error.hpp"

#include <string>

namespace cdyck {

namespace {

// Multiplies (k-1)!/n! * C(upper, k-1) * bell and asserts the result is an integer.
BigCount bell_term(std::int64_t upper, unsigned n, unsigned k, const BigCount& bell) {
  if (bell == 0) return 0;
  BigRational term(binomial(upper, k - 1) * factorial(k - 1) * bell, factorial(n));
  return require_integer(term, "peak-refined Bell term");
}

}  // namespace

CountSeries count_recurrence(const PathParams& params, const ColorSequence& colors,
                             unsigned max_n) {
  CountSeries series{params, colors, {BigCount(1)}};
  std::vector<BigCount>& y = series.values;
  if (max_n == 0) return series;

  std::vector<BigCount> c(max_n + 1);
  for (unsigned l = 1; l <= max_n; ++l) c[l] = color_at(colors, l);

  // power[r][m] = y^{(r)}_m, extended one column per new y_n. power[0] is the unit series.
  const unsigned max_power = params.arity(max_n);
  std::vector<std::vector<BigCount>> power(max_power + 1);
  power[0] = {BigCount(1)};
  for (unsigned r = 1; r <= max_power; ++r) power[r] = {BigCount(1)};

  for (unsigned n = 1; n <= max_n; ++n) {
    BigCount total = 0;
    for (unsigned l = 1; l <= n; ++l) {
      if (c[l] == 0) continue;
      total += c[l] * power[params.arity(l)][n - l];
    }
    y.push_back(total);

    power[0].push_back(0);
    for (unsigned r = 1; r <= max_power; ++r) {
      BigCount value = 0;
      for (unsigned i = 0; i <= n; ++i) value += power[r - 1][i] * y[n - i];
      power[r].push_back(std::move(value));
    }
  }
  return series;
}

PeakTable peak_table(const PathParams& params, const ColorSequence& colors, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidIndex, "peak_table needs n >= 1");
  const std::vector<BigCount> x = scaled_colors(colors, n);
  PeakTable table{n, {}};
  table.row.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    std::int64_t upper = std::int64_t{params.a()} * n + std::int64_t{params.b()} * k;
    table.row.push_back(bell_term(upper, n, k, partial_bell_sum(n, k, x)));
  }
  return table;
}

CountSeries count_bell(const PathParams& params, const ColorSequence& colors, unsigned max_n) {
  CountSeries series{params, colors, {BigCount(1)}};
  for (unsigned n = 1; n <= max_n; ++n) {
    BigCount total = 0;
    for (const BigCount& term : peak_table(params, colors, n).row) total += term;
    series.values.push_back(std::move(total));
  }
  return series;
}

BigCount convolution_power_direct(const CountSeries& series, unsigned r, unsigned n) {
  if (r == 0) throw Error(ErrorKind::InvalidIndex, "convolution power needs r >= 1");
  if (series.values.size() <= n) {
    throw Error(ErrorKind::InvalidIndex, "series has no value at index " + std::to_string(n));
  }
  const std::vector<BigCount>& z = series.values;
  std::vector<BigCount> acc(z.begin(), z.begin() + n + 1);
  for (unsigned step = 1; step < r; ++step) {
    std::vector<BigCount> next(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
      for (unsigned i = 0; i <= m; ++i) next[m] += acc[i] * z[m - i];
    }
    acc = std::move(next);
  }
  return acc[n];
}

BigCount convolution_power_closed(const PathParams& params, const ColorSequence& colors,
                                  unsigned r, unsigned n) {
  if (r == 0 || n == 0) {
    throw Error(ErrorKind::InvalidIndex, "closed convolution power needs r >= 1 and n >= 1");
  }
  const std::vector<BigCount> x = scaled_colors(colors, n);
  BigRational total = 0;
  for (unsigned k = 1; k <= n; ++k) {
    BigCount bell = partial_bell_sum(n, k, x);
    if (bell == 0) continue;
    std::int64_t upper = std::int64_t{params.a()} * n + std::int64_t{params.b()} * k + r - 1;
    total += BigRational(binomial(upper, k - 1) * factorial(k - 1) * bell, factorial(n));
  }
  return require_integer(total * r, "closed convolution power");
}

}  // namespace cdyck
