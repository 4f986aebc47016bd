#pragma once

#include "cdyck/big.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cdyck {

/// Shape parameters (a, b). A rise of order j is u^{(a+b)j} d^{b(j-1)+1}.
class PathParams {
 public:
  /// Throws Error(InvalidParams) when a + b == 0.
  PathParams(unsigned a, unsigned b);

  unsigned a() const noexcept { return a_; }
  unsigned b() const noexcept { return b_; }
  /// Ascent length per unit of j, a + b.
  unsigned width() const noexcept { return a_ + b_; }
  /// Number of d steps forced after an ascent of order j.
  unsigned descent(unsigned j) const noexcept { return b_ * (j - 1) + 1; }
  /// Number of children a rise of order j splits off in the decomposition, a*j + b.
  unsigned arity(unsigned j) const noexcept { return a_ * j + b_; }

  friend bool operator==(const PathParams&, const PathParams&) = default;

 private:
  unsigned a_;
  unsigned b_;
};

/// The coloring multiplicities c_1, c_2, ...
class ColorSequence {
 public:
  struct Ones {
    friend bool operator==(const Ones&, const Ones&) = default;
  };
  struct PowersOfTwo {
    friend bool operator==(const PowersOfTwo&, const PowersOfTwo&) = default;
  };
  struct CatalanPairSum {
    friend bool operator==(const CatalanPairSum&, const CatalanPairSum&) = default;
  };
  struct Constant {
    std::uint64_t value;
    friend bool operator==(const Constant&, const Constant&) = default;
  };
  struct Explicit {
    std::vector<std::uint64_t> prefix;
    std::uint64_t tail;
    friend bool operator==(const Explicit&, const Explicit&) = default;
  };
  using Rule = std::variant<Ones, PowersOfTwo, CatalanPairSum, Constant, Explicit>;

  static ColorSequence ones() { return ColorSequence(Ones{}); }
  static ColorSequence powers_of_two() { return ColorSequence(PowersOfTwo{}); }
  static ColorSequence catalan_pair_sum() { return ColorSequence(CatalanPairSum{}); }
  static ColorSequence constant(std::uint64_t v) { return ColorSequence(Constant{v}); }
  static ColorSequence explicit_prefix(std::vector<std::uint64_t> prefix, std::uint64_t tail = 0) {
    return ColorSequence(Explicit{std::move(prefix), tail});
  }

  /// Parses the CLI grammar: ones | pow2 | catpair | const:V | explicit:c1,c2,...[+tail:T].
  /// Throws std::invalid_argument on anything else.
  static ColorSequence parse(std::string_view text);

  const Rule& rule() const noexcept { return rule_; }

  /// Inverse of parse.
  std::string describe() const;

  friend bool operator==(const ColorSequence&, const ColorSequence&) = default;

 private:
  explicit ColorSequence(Rule rule) : rule_(std::move(rule)) {}
  Rule rule_;
};

/// c_j for j >= 1. Throws Error(InvalidIndex) for j == 0.
BigCount color_at(const ColorSequence& colors, unsigned j);

/// Either the lone down step P_0 or a colored rise P_j.
struct Block {
  unsigned rise = 0;         // j; 0 marks the down step
  std::uint64_t color = 0;   // 1-based, meaningful for rises only

  static constexpr Block down() noexcept { return {}; }
  static constexpr Block make_rise(unsigned j, std::uint64_t color) noexcept { return {j, color}; }

  bool is_down() const noexcept { return rise == 0; }

  friend bool operator==(const Block&, const Block&) = default;
};

/// A colored Dyck path stored as its block sequence.
///
/// Construction checks the step-level invariants (balance and prefix
/// condition). Color ranges depend on a ColorSequence and are checked
/// separately by validate_colors.
class ColoredDyckWord {
 public:
  /// The empty word of index 0.
  explicit ColoredDyckWord(PathParams params) : params_(params) {}

  /// Throws Error(NotDyck) if the expansion is not a Dyck word.
  ColoredDyckWord(PathParams params, std::vector<Block> blocks);

  const PathParams& params() const noexcept { return params_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  /// Index n; the expansion has (a+b)n up steps.
  unsigned index() const noexcept { return index_; }
  bool empty() const noexcept { return blocks_.empty(); }

  friend bool operator==(const ColoredDyckWord&, const ColoredDyckWord&) = default;

 private:
  PathParams params_;
  std::vector<Block> blocks_;
  unsigned index_ = 0;
};

/// Throws Error(ColorOutOfRange) unless every rise P_j has 1 <= color <= c_j.
void validate_colors(const ColoredDyckWord& word, const ColorSequence& colors);

/// Serializes to the u/d alphabet. Every rise carries a "[k]" annotation
/// placed right after its forced descent, e.g. "uud[1]d".
std::string to_steps(const ColoredDyckWord& word);

/// Plain u/d expansion without annotations.
std::string to_plain_steps(const ColoredDyckWord& word);

/// Parses step text. An annotation "[k]" may sit either at the end of an
/// ascent or at the end of the rise's forced descent; a missing one means
/// color 1. Errors: NotDyck, BadAscent, TruncatedDescent, ColorOutOfRange,
/// MalformedAnnotation.
ColoredDyckWord parse_steps(std::string_view text, PathParams params, const ColorSequence& colors);

/// Number of peaks, which equals the number of rises.
unsigned peaks(const ColoredDyckWord& word) noexcept;

/// (a+b)n, the number of u steps.
unsigned semilength(const ColoredDyckWord& word) noexcept;

}  // namespace cdyck
