#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdyck/bell.hpp"
#include "cdyck/counting.hpp"
#include "cdyck/error.hpp"
#include "cdyck/sequences.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace cdyck;

TEST_CASE("narayana") {
  for (unsigned n = 1; n <= 10; ++n) CHECK(narayana(n, 1) == 1);
  CHECK(narayana(3, 2) == 3);
  CHECK(narayana(5, 3) == 20);
  for (unsigned n = 1; n <= 10; ++n) {
    auto table = peak_table(PathParams(1, 0), ColorSequence::ones(), n);
    for (unsigned k = 1; k <= n; ++k) CHECK(narayana(n, k) == table.at(k));
  }
  CHECK_THROWS_AS(narayana(3, 0), Error);
  CHECK_THROWS_AS(narayana(3, 4), Error);
}

TEST_CASE("motzkin_colored") {
  std::vector<BigCount> expected{1, 1, 2, 4, 9, 21};
  for (unsigned n = 0; n <= 5; ++n) CHECK(motzkin_colored(1, 1, n) == expected[n]);
  CHECK(motzkin_colored(4, 7, 0) == 1);
  CHECK(motzkin_colored(0, 0, 0) == 1);
  CHECK(motzkin_colored(2, 1, 2) == 5);
  for (unsigned n = 0; n <= 15; ++n) CHECK(motzkin_colored(1, 1, n) == oracle::motzkin_by_dp(n));

  // M_n = M_{n-1} + sum_i M_i M_{n-2-i}
  for (unsigned n = 2; n <= 15; ++n) {
    BigCount rhs = motzkin_colored(1, 1, n - 1);
    for (unsigned i = 0; i + 2 <= n; ++i) {
      rhs += motzkin_colored(1, 1, i) * motzkin_colored(1, 1, n - 2 - i);
    }
    CHECK(motzkin_colored(1, 1, n) == rhs);
  }
  for (std::uint64_t c1 : {0, 1, 2, 3}) {
    for (std::uint64_t c2 : {0, 1, 2, 5}) {
      auto instantiation =
          count_bell(PathParams(1, 0), ColorSequence::explicit_prefix({c1, c2}, 0), 10);
      for (unsigned n = 1; n <= 10; ++n) CHECK(motzkin_colored(c1, c2, n) == instantiation.values[n]);
    }
  }
}

TEST_CASE("schroeder_little") {
  CHECK(schroeder_little(1) == 1);
  CHECK(schroeder_little(2) == 3);
  CHECK(schroeder_little(3) == 11);
  auto instantiation = count_bell(PathParams(1, 0), ColorSequence::powers_of_two(), 10);
  for (unsigned n = 1; n <= 10; ++n) CHECK(schroeder_little(n) == instantiation.values[n]);
  CHECK_THROWS_AS(schroeder_little(0), Error);
}

TEST_CASE("fuss_catalan") {
  for (unsigned m = 1; m <= 4; ++m) CHECK(fuss_catalan(m, 0) == 1);
  CHECK(fuss_catalan(1, 4) == 14);
  CHECK(fuss_catalan(2, 2) == 3);
  for (unsigned n = 0; n <= 15; ++n) CHECK(fuss_catalan(1, n) == catalan(n));
  for (unsigned n = 0; n <= 12; ++n) CHECK(fuss_catalan(1, n) == oracle::catalan_by_dp(n));
  for (unsigned m = 1; m <= 4; ++m) {
    auto instantiation = count_bell(PathParams(m, 0), ColorSequence::ones(), 10);
    for (unsigned n = 1; n <= 10; ++n) {
      CHECK(fuss_catalan(m, n) == instantiation.values[n]);
      auto table = peak_table(PathParams(m, 0), ColorSequence::ones(), n);
      for (unsigned k = 1; k <= n; ++k) CHECK(fuss_catalan_peaks(m, n, k) == table.at(k));
    }
  }
  CHECK_THROWS_AS(fuss_catalan(0, 3), Error);
}

TEST_CASE("a052709 and a186997") {
  CHECK(a052709_closed(1) == 1);
  CHECK(a052709_closed(2) == 3);
  CHECK(a186997_closed(1) == 1);
  std::vector<BigCount> a052709{1, 3, 9, 31, 113, 431, 1697, 6847, 28161, 117631};
  std::vector<BigCount> a186997{1, 4, 19, 104, 614, 3816, 24595, 162896, 1101922, 7580904};
  auto first = count_bell(PathParams(0, 2), ColorSequence::explicit_prefix({1, 1}, 0), 10);
  auto second = count_bell(PathParams(1, 2), ColorSequence::explicit_prefix({1, 1}, 0), 10);
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(a052709_closed(n) == a052709[n - 1]);
    CHECK(a052709_closed(n) == first.values[n]);
    CHECK(a186997_closed(n) == a186997[n - 1]);
    CHECK(a186997_closed(n) == second.values[n]);
  }
  std::vector<LatticeStep> steps_a{{1, 1}, {1, -1}, {3, 1}};
  std::vector<LatticeStep> steps_b{{1, 2}, {1, -1}, {3, 3}};
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(step_lattice_count(steps_a, 2 * n) == a052709_closed(n));
    CHECK(step_lattice_count(steps_b, 3 * n) == a186997_closed(n));
  }
  CHECK_THROWS_AS(a052709_closed(0), Error);
  CHECK_THROWS_AS(a186997_closed(0), Error);
}

TEST_CASE("step_lattice_count") {
  std::vector<LatticeStep> dyck{{1, 1}, {1, -1}};
  CHECK(step_lattice_count(dyck, 6) == 5);
  CHECK(step_lattice_count(dyck, 5) == 0);
  for (unsigned n = 0; n <= 10; ++n) CHECK(step_lattice_count(dyck, 2 * n) == catalan(n));
  std::vector<LatticeStep> with_long{{1, 1}, {1, -1}, {3, 1}};
  CHECK(step_lattice_count(with_long, 4) == 3);
  CHECK(step_lattice_count(with_long, 0) == 1);
  std::vector<LatticeStep> motzkin{{1, 1}, {1, 0}, {1, -1}};
  for (unsigned n = 0; n <= 10; ++n) CHECK(step_lattice_count(motzkin, n) == oracle::motzkin_by_dp(n));
  std::vector<LatticeStep> bad{{0, 1}};
  CHECK_THROWS_AS(step_lattice_count(bad, 3), Error);
}

TEST_CASE("duchon_d and its alternative forms") {
  CHECK(duchon_d(1) == 2);
  std::vector<BigCount> expected{2, 23, 377, 7229, 151491, 3361598, 77635093, 1846620581};
  auto colored = count_bell(PathParams(5, 0), ColorSequence::catalan_pair_sum(), 8);
  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(duchon_d(n) == expected[n - 1]);
    CHECK(duchon_alt_falling(n) == duchon_d(n));
    CHECK(duchon_alt_binomial(n) == duchon_d(n));
    CHECK(duchon_alt(n) == duchon_d(n));
    CHECK(colored.values[n] == duchon_d(n));
  }
  CHECK_THROWS_AS(duchon_d(0), Error);
  CHECK_THROWS_AS(duchon_alt(0), Error);
}

TEST_CASE("rational 3/2 Dyck paths") {
  CHECK(is_rational_dyck("ababbaabbb"));
  auto words = rational_dyck_words(2);
  CHECK(std::find(words.begin(), words.end(), "ababbaabbb") != words.end());
  CHECK(rational_dyck_words(1) == std::vector<std::string>{"aabbb", "ababb"});

  CHECK_FALSE(is_rational_dyck(""));
  CHECK_FALSE(is_rational_dyck("abbab"));
  CHECK_FALSE(is_rational_dyck("aabb"));
  CHECK_FALSE(is_rational_dyck("babab"));
  CHECK_FALSE(is_rational_dyck("aabbc"));

  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(rational_dyck_count(n) == duchon_d(n));
    CHECK(BigCount(rational_dyck_words(n).size()) == rational_dyck_count(n));
    for (const std::string& w : rational_dyck_words(n)) REQUIRE(is_rational_dyck(w));
  }
}

TEST_CASE("factor_free_count") {
  CHECK(factor_free_count(1) == 2);
  CHECK(factor_free_count(2) == 3);
  CHECK(factor_free_count(3) == 7);
  for (unsigned n = 1; n <= 4; ++n) CHECK(factor_free_count(n) == catalan(n - 1) + catalan(n));
  CHECK_THROWS_AS(factor_free_count(4, 1000), Error);
}

TEST_CASE("sequence specs and closed forms") {
  auto schroeder = sequence_spec(Family::SchroederLittle);
  CHECK(schroeder.name == "schroeder_little");
  CHECK(schroeder.params == PathParams(1, 0));
  CHECK(schroeder.colors == ColorSequence::powers_of_two());
  CHECK(sequence_spec(Family::MAry, 3).name == "m_ary(3)");
  CHECK(sequence_spec(Family::Duchon32).params == PathParams(5, 0));
  CHECK_THROWS_AS(sequence_spec(Family::MAry, 0), Error);

  for (Family family : {Family::Narayana, Family::Motzkin, Family::SchroederLittle, Family::MAry,
                        Family::A052709, Family::A186997, Family::Duchon32}) {
    auto spec = sequence_spec(family, 3, 2, 3);
    auto colored = count_bell(spec.params, spec.colors, 8);
    CAPTURE(spec.name);
    for (unsigned n = 1; n <= 8; ++n) CHECK(closed_form(spec, n) == colored.values[n]);
  }
}
