#include "cdyck/bijection.hpp"

#include "cdyck/error.hpp"

#include <string>

namespace cdyck {

namespace {

// Appends the block expansion of the tuple; the caller has checked arity.
std::vector<Block> assemble(unsigned ell, std::uint64_t color,
                            const std::vector<const ColoredDyckWord*>& children) {
  std::size_t total = 1 + (children.empty() ? 0 : children.size() - 1);
  for (const ColoredDyckWord* child : children) total += child->blocks().size();

  std::vector<Block> blocks;
  blocks.reserve(total);
  blocks.push_back(Block::make_rise(ell, color));
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i != 0) blocks.push_back(Block::down());
    const auto& child = children[i]->blocks();
    blocks.insert(blocks.end(), child.begin(), child.end());
  }
  return blocks;
}

std::int64_t net_height(const PathParams& params, const Block& block) {
  if (block.is_down()) return -1;
  return std::int64_t{params.width()} * block.rise - params.descent(block.rise);
}

// Last position varies fastest, so D_1 is the most significant child.
bool advance_odometer(std::vector<std::size_t>& pick, const std::vector<unsigned>& sizes,
                      const std::vector<std::vector<ColoredDyckWord>>& by_index) {
  for (std::size_t i = pick.size(); i-- > 0;) {
    if (++pick[i] < by_index[sizes[i]].size()) return true;
    pick[i] = 0;
  }
  return false;
}

}  // namespace

ColoredDyckWord compose(const DecompositionTuple& tuple, const PathParams& params,
                        const ColorSequence& colors) {
  if (tuple.ell == 0) throw Error(ErrorKind::InvalidTuple, "ell must be positive");
  BigCount available = color_at(colors, tuple.ell);
  if (tuple.color == 0 || BigCount(tuple.color) > available) {
    throw Error(ErrorKind::InvalidTuple, "color " + std::to_string(tuple.color) +
                                             " outside 1.." + available.str());
  }
  if (tuple.children.size() != params.arity(tuple.ell)) {
    throw Error(ErrorKind::InvalidTuple,
                "expected " + std::to_string(params.arity(tuple.ell)) + " children, got " +
                    std::to_string(tuple.children.size()));
  }
  std::vector<const ColoredDyckWord*> children;
  for (const ColoredDyckWord& child : tuple.children) {
    if (!(child.params() == params)) {
      throw Error(ErrorKind::InvalidTuple, "child built for different (a, b)");
    }
    try {
      validate_colors(child, colors);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidTuple, std::string("child rejected: ") + e.what());
    }
    children.push_back(&child);
  }
  return ColoredDyckWord(params, assemble(tuple.ell, tuple.color, children));
}

TracedDecomposition decompose_traced(const ColoredDyckWord& word, const PathParams& params,
                                     const ColorSequence& colors) {
  if (word.empty()) throw Error(ErrorKind::EmptyWord, "the empty word has no decomposition");
  if (!(word.params() == params)) {
    throw Error(ErrorKind::MalformedWord, "word built for different (a, b)");
  }
  try {
    validate_colors(word, colors);
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedWord, e.what());
  }

  const std::vector<Block>& blocks = word.blocks();
  const Block& head = blocks.front();

  // suffix_excess[i] = (#d - #u) over blocks[i..].
  std::vector<std::int64_t> suffix_excess(blocks.size() + 1, 0);
  for (std::size_t i = blocks.size(); i-- > 0;) {
    suffix_excess[i] = suffix_excess[i + 1] - net_height(params, blocks[i]);
  }

  TracedDecomposition out;
  out.tuple.ell = head.rise;
  out.tuple.color = head.color;

  std::size_t start = 1;
  std::int64_t balance = 0;  // #u - #d since start
  out.excess.push_back(static_cast<std::size_t>(suffix_excess[start]));
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i].is_down() && balance == 0) {
      // First position where d outnumbers u: blocks[i] is a separator.
      out.tuple.children.emplace_back(
          params, std::vector<Block>(blocks.begin() + start, blocks.begin() + i));
      start = i + 1;
      out.excess.push_back(static_cast<std::size_t>(suffix_excess[start]));
      continue;
    }
    balance += net_height(params, blocks[i]);
  }
  out.tuple.children.emplace_back(params,
                                  std::vector<Block>(blocks.begin() + start, blocks.end()));

  if (out.tuple.children.size() != params.arity(head.rise)) {
    throw Error(ErrorKind::MalformedWord,
                "split into " + std::to_string(out.tuple.children.size()) + " children, expected " +
                    std::to_string(params.arity(head.rise)));
  }
  return out;
}

DecompositionTuple decompose(const ColoredDyckWord& word, const PathParams& params,
                             const ColorSequence& colors) {
  return decompose_traced(word, params, colors).tuple;
}

bool next_weak_composition(std::vector<unsigned>& parts) {
  if (parts.size() < 2) return false;
  unsigned suffix = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    if (suffix > 0) {
      ++parts[i];
      for (std::size_t k = i + 1; k + 1 < parts.size(); ++k) parts[k] = 0;
      parts.back() = suffix - 1;
      return true;
    }
    suffix += parts[i];
  }
  return false;
}

std::vector<ColoredDyckWord> enumerate_all(const PathParams& params, const ColorSequence& colors,
                                           unsigned n, std::size_t cap) {
  auto over_cap = [cap](unsigned index) {
    return Error(ErrorKind::ResourceLimit, "more than " + std::to_string(cap) +
                                               " words of index " + std::to_string(index));
  };

  // by_index[m] holds every word of index m in output order.
  std::vector<std::vector<ColoredDyckWord>> by_index(n + 1);
  by_index[0].emplace_back(params);

  for (unsigned m = 1; m <= n; ++m) {
    std::vector<ColoredDyckWord>& out = by_index[m];
    for (unsigned ell = 1; ell <= m; ++ell) {
      BigCount available = color_at(colors, ell);
      if (available == 0) continue;
      if (available > cap) throw over_cap(m);
      auto color_count = available.convert_to<std::uint64_t>();
      const unsigned arity = params.arity(ell);

      for (std::uint64_t color = 1; color <= color_count; ++color) {
        std::vector<unsigned> sizes(arity, 0);
        sizes.back() = m - ell;
        do {
          bool any_empty = false;
          for (unsigned s : sizes) any_empty = any_empty || by_index[s].empty();
          if (any_empty) continue;

          std::vector<std::size_t> pick(arity, 0);
          std::vector<const ColoredDyckWord*> children(arity);
          do {
            for (unsigned i = 0; i < arity; ++i) children[i] = &by_index[sizes[i]][pick[i]];
            if (out.size() >= cap) throw over_cap(m);
            out.emplace_back(params, assemble(ell, color, children));
          } while (advance_odometer(pick, sizes, by_index));
        } while (next_weak_composition(sizes));
      }
    }
  }
  return std::move(by_index[n]);
}

}  // namespace cdyck
