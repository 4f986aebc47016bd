#pragma once

#include "cdyck/big.hpp"
#include "cdyck/core_model.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdyck {

/// Known families and the colored-path instantiation that should reproduce them.
enum class Family { Narayana, Motzkin, SchroederLittle, MAry, A052709, A186997, Duchon32 };

struct SequenceSpec {
  Family family;
  std::string name;  // narayana, motzkin, schroeder_little, m_ary(m), a052709, a186997, duchon_3_2
  PathParams params;
  ColorSequence colors;
};

/// `m` is used by MAry only; `c1`, `c2` by Motzkin only.
SequenceSpec sequence_spec(Family family, unsigned m = 1, std::uint64_t c1 = 1,
                           std::uint64_t c2 = 1);

/// The family's own formula for y_n, independent of the colored-path machinery.
/// For Narayana this is the row sum of N(n, k). Requires n >= 1 except for
/// Motzkin and MAry, which accept n = 0.
BigCount closed_form(const SequenceSpec& spec, unsigned n);

/// N(n, k) = C(n, k-1) C(n, k) / n. Throws Error(InvalidIndex) unless 1 <= k <= n.
BigCount narayana(unsigned n, unsigned k);

/// Motzkin paths of length n with c1-colored flat steps and c2-colored up steps:
/// sum_k C(n, 2k) C_k c1^{n-2k} c2^k.
BigCount motzkin_colored(std::uint64_t c1, std::uint64_t c2, unsigned n);

/// sum_k N(n, k) 2^{n-k}. Requires n >= 1.
BigCount schroeder_little(unsigned n);

/// C((m+1)n, n) / (mn + 1). Requires m >= 1.
BigCount fuss_catalan(unsigned m, unsigned n);

/// m-ary paths of index n with k peaks: C(mn, k-1) C(n, k) / n.
BigCount fuss_catalan_peaks(unsigned m, unsigned n, unsigned k);

/// sum_{k=ceil(n/2)}^{n} C(2k, k-1) C(k, n-k) / k. Requires n >= 1.
BigCount a052709_closed(unsigned n);

/// sum_{k=ceil(n/2)}^{n} C(n+2k, k-1) C(k, n-k) / k. Requires n >= 1.
BigCount a186997_closed(unsigned n);

struct LatticeStep {
  unsigned dx;
  int dy;
};

/// Paths from (0,0) to (end_x, 0) using `steps`, with y >= 0 at every step endpoint.
BigCount step_lattice_count(std::span<const LatticeStep> steps, unsigned end_x);

/// |D_{3/2}(5n)| by the closed sum over j of C(5n+1, n-j) C(5n+2j, j) / (5n+j+1).
BigCount duchon_d(unsigned n);

/// Alternative expression for d_n through the Catalan-pair coloring, in its
/// three successive algebraic forms: with a falling factorial, with a
/// binomial, and with a difference of binomials (the final one).
BigCount duchon_alt_falling(unsigned n);
BigCount duchon_alt_binomial(unsigned n);
BigCount duchon_alt(unsigned n);

/// Words over {a, b} (a = east step, b = north step) from (0,0) to (2n, 3n)
/// never going strictly above y = 3x/2.
BigCount rational_dyck_count(unsigned n);

/// All such words, in lexicographic order.
std::vector<std::string> rational_dyck_words(unsigned n);

/// True if `word` is a nonempty element of D_{3/2}(5m) for some m.
bool is_rational_dyck(std::string_view word);

/// Number of words in D_{3/2}(5n) with no proper nonempty contiguous factor
/// in any D_{3/2}(5m). Exhaustive; throws Error(ResourceLimit) if more than
/// `cap` words would have to be examined.
BigCount factor_free_count(unsigned n, std::size_t cap = 1'000'000);

}  // namespace cdyck
