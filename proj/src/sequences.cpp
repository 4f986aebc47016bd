#include "cdyck/sequences.hpp"

#include "cdyck/bell.hpp"
#include "cdyck/error.hpp"

#include <map>
#include <string>

namespace cdyck {

namespace {

using boost::multiprecision::pow;

void require_positive(unsigned n, const char* what) {
  if (n == 0) throw Error(ErrorKind::InvalidIndex, std::string(what) + " needs n >= 1");
}

std::int64_t as_signed(unsigned v) { return static_cast<std::int64_t>(v); }

// True when the step from (x, y) keeps the path weakly below y = 3x/2.
bool below_slope(std::int64_t x, std::int64_t y) { return 2 * y <= 3 * x; }

}  // namespace

SequenceSpec sequence_spec(Family family, unsigned m, std::uint64_t c1, std::uint64_t c2) {
  switch (family) {
    case Family::Narayana:
      return {family, "narayana", PathParams(1, 0), ColorSequence::ones()};
    case Family::Motzkin:
      return {family, "motzkin", PathParams(1, 0), ColorSequence::explicit_prefix({c1, c2}, 0)};
    case Family::SchroederLittle:
      return {family, "schroeder_little", PathParams(1, 0), ColorSequence::powers_of_two()};
    case Family::MAry:
      if (m == 0) throw Error(ErrorKind::InvalidParams, "m-ary paths need m >= 1");
      return {family, "m_ary(" + std::to_string(m) + ")", PathParams(m, 0), ColorSequence::ones()};
    case Family::A052709:
      return {family, "a052709", PathParams(0, 2), ColorSequence::explicit_prefix({1, 1}, 0)};
    case Family::A186997:
      return {family, "a186997", PathParams(1, 2), ColorSequence::explicit_prefix({1, 1}, 0)};
    case Family::Duchon32:
      return {family, "duchon_3_2", PathParams(5, 0), ColorSequence::catalan_pair_sum()};
  }
  throw Error(ErrorKind::InvalidParams, "unknown family");
}

BigCount closed_form(const SequenceSpec& spec, unsigned n) {
  switch (spec.family) {
    case Family::Narayana: {
      require_positive(n, "narayana row sum");
      BigCount total = 0;
      for (unsigned k = 1; k <= n; ++k) total += narayana(n, k);
      return total;
    }
    case Family::Motzkin: {
      const auto& rule = std::get<ColorSequence::Explicit>(spec.colors.rule());
      return motzkin_colored(rule.prefix.at(0), rule.prefix.at(1), n);
    }
    case Family::SchroederLittle: return schroeder_little(n);
    case Family::MAry: return fuss_catalan(spec.params.a(), n);
    case Family::A052709: return a052709_closed(n);
    case Family::A186997: return a186997_closed(n);
    case Family::Duchon32: return duchon_d(n);
  }
  throw Error(ErrorKind::InvalidParams, "unknown family");
}

BigCount narayana(unsigned n, unsigned k) {
  if (k < 1 || k > n) {
    throw Error(ErrorKind::InvalidIndex, "narayana needs 1 <= k <= n");
  }
  return require_integer(BigRational(binomial(n, k - 1) * binomial(n, k), n), "narayana");
}

BigCount motzkin_colored(std::uint64_t c1, std::uint64_t c2, unsigned n) {
  BigCount total = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    total += binomial(n, 2 * k) * catalan(k) * pow(BigCount(c1), n - 2 * k) * pow(BigCount(c2), k);
  }
  return total;
}

BigCount schroeder_little(unsigned n) {
  require_positive(n, "schroeder_little");
  BigCount total = 0;
  for (unsigned k = 1; k <= n; ++k) total += narayana(n, k) << (n - k);
  return total;
}

BigCount fuss_catalan(unsigned m, unsigned n) {
  if (m == 0) throw Error(ErrorKind::InvalidIndex, "fuss_catalan needs m >= 1");
  std::int64_t mn = as_signed(m) * n;
  return require_integer(BigRational(binomial(mn + n, n), mn + 1), "fuss_catalan");
}

BigCount fuss_catalan_peaks(unsigned m, unsigned n, unsigned k) {
  if (m == 0 || k < 1 || k > n) {
    throw Error(ErrorKind::InvalidIndex, "fuss_catalan_peaks needs m >= 1 and 1 <= k <= n");
  }
  return require_integer(BigRational(binomial(as_signed(m) * n, k - 1) * binomial(n, k), n),
                         "fuss_catalan_peaks");
}

BigCount a052709_closed(unsigned n) {
  require_positive(n, "a052709_closed");
  BigRational total = 0;
  for (unsigned k = (n + 1) / 2; k <= n; ++k) {
    total += BigRational(binomial(2 * as_signed(k), k - 1) * binomial(k, n - k), k);
  }
  return require_integer(total, "a052709_closed");
}

BigCount a186997_closed(unsigned n) {
  require_positive(n, "a186997_closed");
  BigRational total = 0;
  for (unsigned k = (n + 1) / 2; k <= n; ++k) {
    total += BigRational(binomial(as_signed(n) + 2 * as_signed(k), k - 1) * binomial(k, n - k), k);
  }
  return require_integer(total, "a186997_closed");
}

BigCount step_lattice_count(std::span<const LatticeStep> steps, unsigned end_x) {
  for (const LatticeStep& step : steps) {
    if (step.dx == 0) throw Error(ErrorKind::InvalidParams, "lattice steps need dx >= 1");
  }
  // layer[x] maps height to the number of paths ending at (x, height).
  std::vector<std::map<std::int64_t, BigCount>> layer(end_x + 1);
  layer[0][0] = 1;
  for (unsigned x = 0; x < end_x; ++x) {
    for (const auto& [y, count] : layer[x]) {
      for (const LatticeStep& step : steps) {
        std::int64_t next_y = y + step.dy;
        if (x + step.dx > end_x || next_y < 0) continue;
        layer[x + step.dx][next_y] += count;
      }
    }
  }
  auto it = layer[end_x].find(0);
  return it == layer[end_x].end() ? BigCount(0) : it->second;
}

BigCount duchon_d(unsigned n) {
  require_positive(n, "duchon_d");
  const std::int64_t five_n = 5 * as_signed(n);
  BigRational total = 0;
  for (std::int64_t j = 0; j <= n; ++j) {
    total += BigRational(binomial(five_n + 1, n - j) * binomial(five_n + 2 * j, j),
                         five_n + j + 1);
  }
  return require_integer(total, "duchon_d");
}

BigCount duchon_alt_falling(unsigned n) {
  require_positive(n, "duchon_alt_falling");
  const std::int64_t sn = as_signed(n);
  const BigCount n_factorial = factorial(n);
  BigRational total = 0;
  for (std::int64_t k = 1; k <= sn; ++k) {
    BigRational inner = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
      BigCount sign = (k - j) % 2 == 0 ? 1 : -1;
      inner += BigRational(sign * binomial(k, j) * (2 * j - k) *
                               falling_factorial(2 * j - k + 2 * sn - 1, n - 1),
                           n_factorial * k);
    }
    total += inner * binomial(5 * sn, k - 1);
  }
  return require_integer(total, "duchon_alt_falling");
}

BigCount duchon_alt_binomial(unsigned n) {
  require_positive(n, "duchon_alt_binomial");
  const std::int64_t sn = as_signed(n);
  BigRational total = 0;
  for (std::int64_t k = 1; k <= sn; ++k) {
    BigRational inner = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
      BigCount sign = (k - j) % 2 == 0 ? 1 : -1;
      inner += BigRational(sign * binomial(k, j) * (2 * j - k) *
                               binomial(2 * j - k + 2 * sn - 1, sn - 1),
                           sn * k);
    }
    total += inner * binomial(5 * sn, k - 1);
  }
  return require_integer(total, "duchon_alt_binomial");
}

BigCount duchon_alt(unsigned n) {
  require_positive(n, "duchon_alt");
  const std::int64_t sn = as_signed(n);
  BigRational total = 0;
  for (std::int64_t k = 1; k <= sn; ++k) {
    BigRational inner = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
      BigCount sign = j % 2 == 0 ? 1 : -1;
      BigCount bracket = binomial(k - 1, j) - (j == 0 ? BigCount(0) : binomial(k - 1, j - 1));
      inner += BigRational(sign * bracket * binomial(2 * sn + k - 2 * j - 1, sn - 1), sn);
    }
    total += inner * binomial(5 * sn, k - 1);
  }
  return require_integer(total, "duchon_alt");
}

BigCount rational_dyck_count(unsigned n) {
  require_positive(n, "rational_dyck_count");
  const std::int64_t width = 2 * as_signed(n);
  const std::int64_t height = 3 * as_signed(n);
  // paths[x][y] over the grid, filled in order of increasing x + y.
  std::vector<std::vector<BigCount>> paths(width + 1, std::vector<BigCount>(height + 1));
  paths[0][0] = 1;
  for (std::int64_t x = 0; x <= width; ++x) {
    for (std::int64_t y = 0; y <= height; ++y) {
      if ((x == 0 && y == 0) || !below_slope(x, y)) continue;
      BigCount value = 0;
      if (x > 0) value += paths[x - 1][y];
      if (y > 0) value += paths[x][y - 1];
      paths[x][y] = std::move(value);
    }
  }
  return paths[width][height];
}

namespace {

void collect_rational_words(std::string& prefix, std::int64_t x, std::int64_t y,
                            std::int64_t width, std::int64_t height,
                            std::vector<std::string>& out) {
  if (x == width && y == height) {
    out.push_back(prefix);
    return;
  }
  if (x < width) {
    prefix.push_back('a');
    collect_rational_words(prefix, x + 1, y, width, height, out);
    prefix.pop_back();
  }
  if (y < height && below_slope(x, y + 1)) {
    prefix.push_back('b');
    collect_rational_words(prefix, x, y + 1, width, height, out);
    prefix.pop_back();
  }
}

// True if some nonempty factor word[start, end) with end - start < word.size()
// lies in the language.
bool has_proper_factor(std::string_view word) {
  for (std::size_t start = 0; start < word.size(); ++start) {
    std::int64_t x = 0;
    std::int64_t y = 0;
    for (std::size_t end = start; end < word.size(); ++end) {
      (word[end] == 'a' ? x : y) += 1;
      if (!below_slope(x, y)) break;
      std::size_t length = end - start + 1;
      if (2 * y == 3 * x && length < word.size()) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::string> rational_dyck_words(unsigned n) {
  std::vector<std::string> out;
  std::string prefix;
  collect_rational_words(prefix, 0, 0, 2 * as_signed(n), 3 * as_signed(n), out);
  return out;
}

bool is_rational_dyck(std::string_view word) {
  std::int64_t x = 0;
  std::int64_t y = 0;
  for (char letter : word) {
    if (letter == 'a') {
      ++x;
    } else if (letter == 'b') {
      ++y;
    } else {
      return false;
    }
    if (!below_slope(x, y)) return false;
  }
  return !word.empty() && 2 * y == 3 * x;
}

BigCount factor_free_count(unsigned n, std::size_t cap) {
  require_positive(n, "factor_free_count");
  if (rational_dyck_count(n) > cap) {
    throw Error(ErrorKind::ResourceLimit,
                "D_{3/2}(" + std::to_string(5 * n) + ") has more than " + std::to_string(cap) +
                    " words");
  }
  BigCount count = 0;
  for (const std::string& word : rational_dyck_words(n)) {
    if (!has_proper_factor(word)) ++count;
  }
  return count;
}

}  // namespace cdyck
