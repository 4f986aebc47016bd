#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdyck/bell.hpp"
#include "cdyck/counting.hpp"
#include "cdyck/error.hpp"
#include "oracles.hpp"

using namespace cdyck;

namespace {

std::vector<BigCount> ints(std::initializer_list<long> values) {
  std::vector<BigCount> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<ColorSequence> colorings() {
  return {ColorSequence::ones(),
          ColorSequence::powers_of_two(),
          ColorSequence::catalan_pair_sum(),
          ColorSequence::explicit_prefix({1, 1}, 0),
          ColorSequence::explicit_prefix({2, 0, 1}, 0),
          ColorSequence::constant(3)};
}

}  // namespace

TEST_CASE("count_recurrence examples") {
  auto catalan = count_recurrence(PathParams(1, 0), ColorSequence::ones(), 5);
  CHECK(catalan.values == ints({1, 1, 2, 5, 14, 42}));

  auto doubling = count_recurrence(PathParams(0, 1), ColorSequence::ones(), 5);
  CHECK(doubling.values == ints({1, 1, 2, 4, 8, 16}));

  CHECK(count_recurrence(PathParams(2, 1), ColorSequence::ones(), 0).values == ints({1}));

  for (const ColorSequence& colors : colorings()) {
    for (unsigned a = 0; a <= 3; ++a) {
      for (unsigned b = 0; b <= 3; ++b) {
        if (a + b == 0) continue;
        CHECK(count_recurrence(PathParams(a, b), colors, 1).values[1] == color_at(colors, 1));
      }
    }
  }
}

TEST_CASE("count_bell examples") {
  CHECK(count_bell(PathParams(1, 0), ColorSequence::ones(), 5).values ==
        ints({1, 1, 2, 5, 14, 42}));
  CHECK(count_bell(PathParams(2, 0), ColorSequence::ones(), 4).values == ints({1, 1, 3, 12, 55}));
  CHECK(count_bell(PathParams(0, 2), ColorSequence::explicit_prefix({1, 1}, 0), 2).values[2] == 3);
  CHECK(count_bell(PathParams(0, 1), ColorSequence::ones(), 0).values == ints({1}));
}

TEST_CASE("convolution_power_direct examples") {
  auto series = count_recurrence(PathParams(1, 0), ColorSequence::ones(), 6);
  for (unsigned n = 0; n <= 6; ++n) CHECK(convolution_power_direct(series, 1, n) == series.values[n]);
  for (unsigned r = 1; r <= 5; ++r) CHECK(convolution_power_direct(series, r, 0) == 1);
  CHECK(convolution_power_direct(series, 2, 3) == 14);
  CHECK_THROWS_AS(convolution_power_direct(series, 0, 3), Error);
  CHECK_THROWS_AS(convolution_power_direct(series, 2, 7), Error);
}

TEST_CASE("convolution_power_closed examples") {
  PathParams p(1, 0);
  auto ones = ColorSequence::ones();
  CHECK(convolution_power_closed(p, ones, 2, 3) == 14);
  auto series = count_recurrence(p, ones, 8);
  for (unsigned n = 1; n <= 8; ++n) CHECK(convolution_power_closed(p, ones, 1, n) == series.values[n]);
  CHECK_THROWS_AS(convolution_power_closed(p, ones, 0, 3), Error);
  CHECK_THROWS_AS(convolution_power_closed(p, ones, 2, 0), Error);
}

TEST_CASE("peak_table examples") {
  auto row = peak_table(PathParams(1, 0), ColorSequence::ones(), 3).row;
  CHECK(row == ints({1, 3, 1}));

  for (unsigned n = 1; n <= 10; ++n) {
    auto table = peak_table(PathParams(1, 0), ColorSequence::ones(), n);
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(table.at(k) == binomial(n, k - 1) * binomial(n, k) / n);
    }
  }
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; n <= 8; ++n) {
      auto table = peak_table(PathParams(m, 0), ColorSequence::ones(), n);
      for (unsigned k = 1; k <= n; ++k) {
        CHECK(table.at(k) == binomial(std::int64_t{m} * n, k - 1) * binomial(n, k) / n);
      }
    }
  }
  CHECK_THROWS_AS(peak_table(PathParams(1, 0), ColorSequence::ones(), 0), Error);
}

TEST_CASE("property: routes, convolution powers and peak sums agree on the grid") {
  for (const ColorSequence& colors : colorings()) {
    for (unsigned a = 0; a <= 3; ++a) {
      for (unsigned b = 0; b <= 3; ++b) {
        if (a + b == 0) continue;
        PathParams params(a, b);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(colors.describe());
        auto recurrence = count_recurrence(params, colors, 8);
        auto bell = count_bell(params, colors, 8);
        CHECK(recurrence.values == bell.values);
        for (unsigned n = 1; n <= 6; ++n) {
          BigCount sum = 0;
          for (const BigCount& v : peak_table(params, colors, n).row) {
            CHECK(v >= 0);
            sum += v;
          }
          CHECK(sum == recurrence.values[n]);
          for (unsigned r = 1; r <= 4; ++r) {
            CHECK(convolution_power_closed(params, colors, r, n) ==
                  convolution_power_direct(recurrence, r, n));
          }
        }
      }
    }
  }
}

TEST_CASE("property: counts match brute-force word enumeration") {
  for (const ColorSequence& colors : colorings()) {
    auto c = [&](unsigned j) { return color_at(colors, j); };
    for (unsigned a = 0; a <= 3; ++a) {
      for (unsigned b = 0; b <= 3; ++b) {
        if (a + b == 0) continue;
        PathParams params(a, b);
        const unsigned max_n = 6 / (a + b);
        auto series = count_recurrence(params, colors, max_n);
        for (unsigned n = 1; n <= max_n; ++n) {
          auto brute = oracle::brute_force(a, b, c, n, false);
          CHECK(brute.total == series.values[n]);
          auto table = peak_table(params, colors, n);
          for (unsigned k = 1; k <= n; ++k) {
            auto it = brute.by_peaks.find(k);
            CHECK(table.at(k) == (it == brute.by_peaks.end() ? BigCount(0) : it->second));
          }
        }
      }
    }
  }
}

TEST_CASE("peak rows vanish where the Bell polynomial does") {
  auto motzkin = ColorSequence::explicit_prefix({1, 1}, 0);
  for (unsigned n = 1; n <= 10; ++n) {
    auto table = peak_table(PathParams(1, 0), motzkin, n);
    for (unsigned k = 1; 2 * k < n; ++k) CHECK(table.at(k) == 0);
  }
}

TEST_CASE("large values stay exact") {
  auto series = count_recurrence(PathParams(3, 3), ColorSequence::constant(3), 12);
  CHECK(series.values[12] == BigCount("207611485255868223"));
  CHECK(count_bell(PathParams(3, 3), ColorSequence::constant(3), 12).values[12] ==
        series.values[12]);
  // Fuss-Catalan growth passes 64 bits quickly.
  auto quaternary = count_recurrence(PathParams(4, 0), ColorSequence::ones(), 30);
  CHECK(quaternary.values[30] == binomial(150, 30) / 121);
}
