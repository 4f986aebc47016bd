#pragma once

#include "cdyck/core_model.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cdyck {

/// (l, C; D_1, ..., D_{a l + b}): the leading rise order and color plus the
/// subwords hanging off it.
struct DecompositionTuple {
  unsigned ell = 0;
  std::uint64_t color = 0;
  std::vector<ColoredDyckWord> children;

  friend bool operator==(const DecompositionTuple&, const DecompositionTuple&) = default;
};

/// Builds [Rise(ell, color)] ++ D_1 ++ [d] ++ D_2 ++ ... ++ [d] ++ D_{a ell + b}.
/// Throws Error(InvalidTuple) if the color is out of range, the child count is
/// not a*ell + b, or a child is not a valid word under (params, colors).
ColoredDyckWord compose(const DecompositionTuple& tuple, const PathParams& params,
                        const ColorSequence& colors);

/// Inverse of compose. Throws Error(EmptyWord) for the empty word and
/// Error(MalformedWord) if the word fails validation under (params, colors).
DecompositionTuple decompose(const ColoredDyckWord& word, const PathParams& params,
                             const ColorSequence& colors);

/// decompose plus the excess of the remainder before each split: the first
/// entry is the excess after stripping the leading rise, and there is one
/// entry per child.
struct TracedDecomposition {
  DecompositionTuple tuple;
  std::vector<std::size_t> excess;
};
TracedDecomposition decompose_traced(const ColoredDyckWord& word, const PathParams& params,
                                     const ColorSequence& colors);

/// Advances `parts` to the next weak composition of the same total in
/// lexicographic order. Returns false (leaving `parts` unspecified) after the last.
bool next_weak_composition(std::vector<unsigned>& parts);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Every word of index n, each once, ordered by leading rise order, then
/// color, then the children's index composition (lexicographic), then the
/// children themselves recursively in this same order with D_1 most
/// significant. Throws Error(ResourceLimit) if any intermediate list would
/// exceed `cap` words.
std::vector<ColoredDyckWord> enumerate_all(const PathParams& params, const ColorSequence& colors,
                                           unsigned n, std::size_t cap = kDefaultEnumerationCap);

}  // namespace cdyck
