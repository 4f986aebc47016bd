#include "cdyck/core_model.hpp"

#include "cdyck/bell.hpp"
#include "cdyck/error.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cdyck {

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

std::uint64_t parse_u64_or_throw(std::string_view text, std::string_view context) {
  auto value = parse_u64(text);
  if (!value) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "' in color rule '" +
                                std::string(context) + "'");
  }
  return *value;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

PathParams::PathParams(unsigned a, unsigned b) : a_(a), b_(b) {
  if (a + b == 0) throw Error(ErrorKind::InvalidParams, "a + b must be at least 1");
}

ColorSequence ColorSequence::parse(std::string_view text) {
  if (text == "ones") return ones();
  if (text == "pow2") return powers_of_two();
  if (text == "catpair") return catalan_pair_sum();
  if (text.starts_with("const:")) {
    return constant(parse_u64_or_throw(text.substr(6), text));
  }
  if (text.starts_with("explicit:")) {
    std::string_view body = text.substr(9);
    std::uint64_t tail = 0;
    if (auto plus = body.find('+'); plus != std::string_view::npos) {
      std::string_view tail_part = body.substr(plus + 1);
      if (!tail_part.starts_with("tail:")) {
        throw std::invalid_argument("expected '+tail:T' in color rule '" + std::string(text) + "'");
      }
      tail = parse_u64_or_throw(tail_part.substr(5), text);
      body = body.substr(0, plus);
    }
    std::vector<std::uint64_t> prefix;
    while (true) {
      auto comma = body.find(',');
      prefix.push_back(parse_u64_or_throw(body.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    return explicit_prefix(std::move(prefix), tail);
  }
  throw std::invalid_argument("unknown color rule '" + std::string(text) + "'");
}

std::string ColorSequence::describe() const {
  return std::visit(
      overloaded{
          [](const Ones&) -> std::string { return "ones"; },
          [](const PowersOfTwo&) -> std::string { return "pow2"; },
          [](const CatalanPairSum&) -> std::string { return "catpair"; },
          [](const Constant& c) -> std::string { return "const:" + std::to_string(c.value); },
          [](const Explicit& e) -> std::string {
            std::string out = "explicit:";
            for (std::size_t i = 0; i < e.prefix.size(); ++i) {
              if (i != 0) out += ',';
              out += std::to_string(e.prefix[i]);
            }
            return out + "+tail:" + std::to_string(e.tail);
          },
      },
      rule_);
}

BigCount color_at(const ColorSequence& colors, unsigned j) {
  if (j == 0) throw Error(ErrorKind::InvalidIndex, "color index j must be positive");
  return std::visit(
      overloaded{
          [](const ColorSequence::Ones&) { return BigCount(1); },
          [j](const ColorSequence::PowersOfTwo&) { return BigCount(1) << (j - 1); },
          [j](const ColorSequence::CatalanPairSum&) { return catalan(j - 1) + catalan(j); },
          [](const ColorSequence::Constant& c) { return BigCount(c.value); },
          [j](const ColorSequence::Explicit& e) {
            return BigCount(j <= e.prefix.size() ? e.prefix[j - 1] : e.tail);
          },
      },
      colors.rule());
}

ColoredDyckWord::ColoredDyckWord(PathParams params, std::vector<Block> blocks)
    : params_(params), blocks_(std::move(blocks)) {
  // A rise never dips below its starting height, so checking heights at block
  // boundaries is enough for the prefix condition.
  std::int64_t height = 0;
  std::uint64_t ups = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& block = blocks_[i];
    if (block.is_down()) {
      if (--height < 0) {
        throw Error(ErrorKind::NotDyck, "prefix ending at block " + std::to_string(i) +
                                            " has more d than u");
      }
    } else {
      std::uint64_t ascent = std::uint64_t{params_.width()} * block.rise;
      ups += ascent;
      height += static_cast<std::int64_t>(ascent) - params_.descent(block.rise);
    }
  }
  if (height != 0) {
    throw Error(ErrorKind::NotDyck, "word ends at height " + std::to_string(height));
  }
  index_ = static_cast<unsigned>(ups / params_.width());
}

void validate_colors(const ColoredDyckWord& word, const ColorSequence& colors) {
  for (const Block& block : word.blocks()) {
    if (block.is_down()) continue;
    BigCount available = color_at(colors, block.rise);
    if (block.color == 0 || BigCount(block.color) > available) {
      throw Error(ErrorKind::ColorOutOfRange,
                  "rise of order " + std::to_string(block.rise) + " has color " +
                      std::to_string(block.color) + " but c_" + std::to_string(block.rise) +
                      " = " + available.str());
    }
  }
}

namespace {

void append_expansion(std::string& out, const PathParams& params, const Block& block,
                      bool annotate) {
  if (block.is_down()) {
    out += 'd';
    return;
  }
  out.append(std::size_t{params.width()} * block.rise, 'u');
  out.append(params.descent(block.rise), 'd');
  if (annotate) {
    out += '[';
    out += std::to_string(block.color);
    out += ']';
  }
}

}  // namespace

std::string to_steps(const ColoredDyckWord& word) {
  std::string out;
  for (const Block& block : word.blocks()) append_expansion(out, word.params(), block, true);
  return out;
}

std::string to_plain_steps(const ColoredDyckWord& word) {
  std::string out;
  for (const Block& block : word.blocks()) append_expansion(out, word.params(), block, false);
  return out;
}

namespace {

class StepParser {
 public:
  StepParser(std::string_view text, PathParams params, const ColorSequence& colors)
      : text_(text), params_(params), colors_(colors) {}

  ColoredDyckWord run() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == 'u') {
        read_rise();
      } else if (ch == 'd') {
        ++pos_;
        if (--height_ < 0) fail(ErrorKind::NotDyck, "prefix has more d than u");
        blocks_.push_back(Block::down());
      } else if (ch == '[') {
        fail(ErrorKind::MalformedAnnotation, "annotation does not follow a rise");
      } else {
        fail(ErrorKind::MalformedAnnotation, std::string("unexpected character '") + ch + "'");
      }
    }
    if (height_ != 0) {
      throw Error(ErrorKind::NotDyck, "word ends at height " + std::to_string(height_));
    }
    return ColoredDyckWord(params_, std::move(blocks_));
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& what) const {
    throw Error(kind, what + " at offset " + std::to_string(pos_));
  }

  void read_rise() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] == 'u') ++pos_;
    std::size_t length = pos_ - start;
    height_ += static_cast<std::int64_t>(length);
    if (length % params_.width() != 0) {
      pos_ = start;
      fail(ErrorKind::BadAscent, "maximal ascent of length " + std::to_string(length) +
                                     " is not a multiple of " + std::to_string(params_.width()));
    }
    auto j = static_cast<unsigned>(length / params_.width());

    std::optional<std::uint64_t> color = read_annotation();
    for (unsigned i = 0; i < params_.descent(j); ++i) {
      if (pos_ >= text_.size() || text_[pos_] != 'd') {
        fail(ErrorKind::TruncatedDescent, "ascent of order " + std::to_string(j) + " needs " +
                                              std::to_string(params_.descent(j)) + " down steps");
      }
      ++pos_;
      --height_;
    }
    if (!color) color = read_annotation();

    Block block = Block::make_rise(j, color.value_or(1));
    BigCount available = color_at(colors_, j);
    if (available == 0 || BigCount(block.color) > available) {
      fail(ErrorKind::ColorOutOfRange, "color " + std::to_string(block.color) + " for order " +
                                           std::to_string(j) + " exceeds c_j = " +
                                           available.str());
    }
    blocks_.push_back(block);
  }

  std::optional<std::uint64_t> read_annotation() {
    if (pos_ >= text_.size() || text_[pos_] != '[') return std::nullopt;
    std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) fail(ErrorKind::MalformedAnnotation, "unterminated '['");
    auto value = parse_u64(text_.substr(pos_ + 1, close - pos_ - 1));
    if (!value || *value == 0) {
      fail(ErrorKind::MalformedAnnotation, "color must be a positive decimal integer");
    }
    pos_ = close + 1;
    return value;
  }

  std::string_view text_;
  PathParams params_;
  const ColorSequence& colors_;
  std::size_t pos_ = 0;
  std::int64_t height_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace

ColoredDyckWord parse_steps(std::string_view text, PathParams params, const ColorSequence& colors) {
  return StepParser(text, params, colors).run();
}

unsigned peaks(const ColoredDyckWord& word) noexcept {
  unsigned count = 0;
  for (const Block& block : word.blocks()) count += block.is_down() ? 0 : 1;
  return count;
}

unsigned semilength(const ColoredDyckWord& word) noexcept {
  return word.params().width() * word.index();
}

}  // namespace cdyck
