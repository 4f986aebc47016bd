#include "cli.hpp"

#include "cdyck/bell.hpp"
#include "cdyck/bijection.hpp"
#include "cdyck/counting.hpp"
#include "cdyck/error.hpp"
#include "cdyck/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace cdyck::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { plain, bfile, jsonl };

struct CommonOptions {
  unsigned a = 1;
  unsigned b = 0;
  std::string colors = "ones";
  Format format = Format::plain;

  PathParams params() const {
    if (a + b == 0) throw UsageError("--a and --b cannot both be 0");
    return PathParams(a, b);
  }

  ColorSequence color_sequence() const {
    try {
      return ColorSequence::parse(colors);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

void add_common(CLI::App& command, CommonOptions& options) {
  command.add_option("--a", options.a, "ascent weight a")->capture_default_str();
  command.add_option("--b", options.b, "descent weight b")->capture_default_str();
  command
      .add_option("--colors", options.colors,
                  "ones | pow2 | catpair | const:V | explicit:c1,c2,...[+tail:T]")
      ->capture_default_str();
  command.add_option("--format", options.format, "plain | bfile | jsonl")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{
              {"plain", Format::plain}, {"bfile", Format::bfile}, {"jsonl", Format::jsonl}},
          CLI::ignore_case))
      ->default_str("plain");
}

std::string read_word(const std::optional<std::string>& word, std::istream& in) {
  std::string text;
  if (word) {
    text = *word;
  } else if (!std::getline(in, text)) {
    throw UsageError("no word given on --word or standard input");
  }
  auto is_space = [](unsigned char ch) { return std::isspace(ch) != 0; };
  text.erase(text.begin(), std::find_if_not(text.begin(), text.end(), is_space));
  text.erase(std::find_if_not(text.rbegin(), text.rend(), is_space).base(), text.end());
  return text;
}

Json word_record(const ColoredDyckWord& word) {
  Json blocks = Json::array();
  for (const Block& block : word.blocks()) {
    Json entry;
    if (block.is_down()) {
      entry["type"] = "down";
    } else {
      entry["type"] = "rise";
      entry["j"] = block.rise;
      entry["color"] = block.color;
    }
    blocks.push_back(std::move(entry));
  }
  Json record;
  record["n"] = word.index();
  record["blocks"] = std::move(blocks);
  record["peaks"] = peaks(word);
  record["steps"] = to_steps(word);
  return record;
}

// ---- count -----------------------------------------------------------------

struct CountOptions {
  CommonOptions common;
  unsigned max_n = 10;
  unsigned start = 0;
  std::string route = "both";
};

void run_count(const CountOptions& options, std::ostream& out) {
  PathParams params = options.common.params();
  ColorSequence colors = options.common.color_sequence();
  if (options.start > options.max_n) throw UsageError("--start exceeds --N");

  std::vector<BigCount> values;
  if (options.route == "recurrence") {
    values = count_recurrence(params, colors, options.max_n).values;
  } else if (options.route == "bell") {
    values = count_bell(params, colors, options.max_n).values;
  } else {
    values = count_recurrence(params, colors, options.max_n).values;
    std::vector<BigCount> bell = count_bell(params, colors, options.max_n).values;
    for (unsigned n = 0; n <= options.max_n; ++n) {
      if (values[n] != bell[n]) {
        throw InternalError("routes disagree at n=" + std::to_string(n) + ": recurrence " +
                            values[n].str() + ", bell " + bell[n].str());
      }
    }
  }

  for (unsigned n = options.start; n <= options.max_n; ++n) {
    switch (options.common.format) {
      case Format::bfile: out << n << ' ' << values[n] << '\n'; break;
      case Format::plain: out << "y[" << n << "] = " << values[n] << '\n'; break;
      case Format::jsonl: {
        Json record;
        record["n"] = n;
        record["value"] = values[n].str();
        out << record.dump() << '\n';
        break;
      }
    }
  }
}

// ---- peaks -----------------------------------------------------------------

struct PeaksOptions {
  CommonOptions common;
  unsigned n = 1;
};

void run_peaks(const PeaksOptions& options, std::ostream& out) {
  PeakTable table = peak_table(options.common.params(), options.common.color_sequence(), options.n);
  for (unsigned k = 1; k <= table.n; ++k) {
    if (options.common.format == Format::jsonl) {
      Json record;
      record["n"] = table.n;
      record["k"] = k;
      record["value"] = table.at(k).str();
      out << record.dump() << '\n';
    } else {
      out << k << ' ' << table.at(k) << '\n';
    }
  }
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateOptions {
  CommonOptions common;
  unsigned n = 0;
  std::size_t cap = kDefaultEnumerationCap;
};

// bfile is a two-column integer sequence; word listings have no such shape.
void reject_bfile(const CommonOptions& common, const char* command) {
  if (common.format == Format::bfile) {
    throw UsageError(std::string(command) + " supports --format plain or jsonl");
  }
}

void run_enumerate(const EnumerateOptions& options, std::ostream& out) {
  reject_bfile(options.common, "enumerate");
  auto words = enumerate_all(options.common.params(), options.common.color_sequence(), options.n,
                             options.cap);
  for (const ColoredDyckWord& word : words) {
    if (options.common.format == Format::jsonl) {
      out << word_record(word).dump() << '\n';
    } else {
      out << to_steps(word) << '\n';
    }
  }
}

// ---- decompose / validate --------------------------------------------------

struct WordOptions {
  CommonOptions common;
  std::optional<std::string> word;
};

void run_decompose(const WordOptions& options, std::istream& in, std::ostream& out) {
  reject_bfile(options.common, "decompose");
  PathParams params = options.common.params();
  ColorSequence colors = options.common.color_sequence();
  ColoredDyckWord word = parse_steps(read_word(options.word, in), params, colors);
  DecompositionTuple tuple = decompose(word, params, colors);

  if (options.common.format == Format::jsonl) {
    Json record;
    record["ell"] = tuple.ell;
    record["color"] = tuple.color;
    Json children = Json::array();
    for (const ColoredDyckWord& child : tuple.children) children.push_back(to_steps(child));
    record["children"] = std::move(children);
    out << record.dump() << '\n';
    return;
  }
  out << "ell " << tuple.ell << '\n' << "color " << tuple.color << '\n';
  for (std::size_t i = 0; i < tuple.children.size(); ++i) {
    const ColoredDyckWord& child = tuple.children[i];
    out << "child " << i + 1 << ' ' << (child.empty() ? "(empty)" : to_steps(child)) << '\n';
  }
}

void run_validate(const WordOptions& options, std::istream& in, std::ostream& out) {
  reject_bfile(options.common, "validate");
  ColoredDyckWord word = parse_steps(read_word(options.word, in), options.common.params(),
                                     options.common.color_sequence());
  if (options.common.format == Format::jsonl) {
    out << word_record(word).dump() << '\n';
  } else {
    out << "valid n=" << word.index() << " peaks=" << peaks(word) << '\n';
  }
}

// ---- preset ----------------------------------------------------------------

struct PresetOptions {
  CommonOptions common;
  std::string name;
  unsigned max_n = 10;
  unsigned m = 2;
  std::uint64_t c1 = 1;
  std::uint64_t c2 = 1;
};

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> names{
      {"narayana", Family::Narayana}, {"motzkin", Family::Motzkin},
      {"schroeder", Family::SchroederLittle}, {"mary", Family::MAry},
      {"a052709", Family::A052709}, {"a186997", Family::A186997},
      {"duchon", Family::Duchon32}};
  auto it = names.find(name);
  if (it == names.end()) throw UsageError("unknown preset '" + name + "'");
  return it->second;
}

struct PresetRow {
  unsigned n;
  std::optional<unsigned> k;
  std::vector<std::pair<std::string, BigCount>> columns;
};

std::vector<PresetRow> preset_rows(const SequenceSpec& spec, unsigned max_n) {
  std::vector<PresetRow> rows;
  if (spec.family == Family::Narayana) {
    for (unsigned n = 1; n <= max_n; ++n) {
      PeakTable table = peak_table(spec.params, spec.colors, n);
      for (unsigned k = 1; k <= n; ++k) {
        rows.push_back({n, k, {{"narayana", narayana(n, k)}, {"colored", table.at(k)}}});
      }
    }
    return rows;
  }
  CountSeries colored = count_bell(spec.params, spec.colors, max_n);
  for (unsigned n = 1; n <= max_n; ++n) {
    if (spec.family == Family::Duchon32) {
      rows.push_back({n, std::nullopt,
                      {{"duchon_d", duchon_d(n)},
                       {"duchon_alt", duchon_alt(n)},
                       {"colored", colored.values[n]}}});
    } else {
      rows.push_back(
          {n, std::nullopt, {{"closed", closed_form(spec, n)}, {"colored", colored.values[n]}}});
    }
  }
  return rows;
}

void run_preset(const PresetOptions& options, std::ostream& out) {
  Family family = family_from_name(options.name);
  SequenceSpec spec = [&] {
    try {
      return sequence_spec(family, options.m, options.c1, options.c2);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  std::vector<PresetRow> rows = preset_rows(spec, options.max_n);

  if (options.common.format == Format::plain) {
    out << "# " << spec.name << " a=" << spec.params.a() << " b=" << spec.params.b()
        << " colors=" << spec.colors.describe() << '\n';
    out << "# n" << (family == Family::Narayana ? " k" : "");
    for (const auto& column : rows.front().columns) out << ' ' << column.first;
    out << '\n';
  }

  std::optional<std::string> mismatch;
  for (const PresetRow& row : rows) {
    bool agree = std::all_of(row.columns.begin(), row.columns.end(),
                             [&](const auto& c) { return c.second == row.columns.front().second; });
    if (!agree && !mismatch) mismatch = "columns disagree at n=" + std::to_string(row.n);

    switch (options.common.format) {
      case Format::plain:
        out << row.n;
        if (row.k) out << ' ' << *row.k;
        for (const auto& column : row.columns) out << ' ' << column.second;
        out << '\n';
        break;
      case Format::bfile:
        if (row.k) {
          out << row.n << ' ' << *row.k << ' ' << row.columns.back().second << '\n';
        } else {
          out << row.n << ' ' << row.columns.back().second << '\n';
        }
        break;
      case Format::jsonl: {
        Json record;
        record["n"] = row.n;
        if (row.k) record["k"] = *row.k;
        for (const auto& column : row.columns) record[column.first] = column.second.str();
        out << record.dump() << '\n';
        break;
      }
    }
  }
  if (mismatch) throw InternalError(*mismatch);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Count, enumerate and decompose colored Dyck paths", "cdyck"};
  app.require_subcommand(1);

  CountOptions count;
  CLI::App* count_cmd = app.add_subcommand("count", "print y_0..y_N");
  add_common(*count_cmd, count.common);
  count_cmd->add_option("--N", count.max_n, "last index")->required();
  count_cmd->add_option("--start", count.start, "first index printed")->capture_default_str();
  count_cmd->add_option("--route", count.route, "both | recurrence | bell")
      ->check(CLI::IsMember({"both", "recurrence", "bell"}))
      ->capture_default_str();

  PeaksOptions peaks_opts;
  CLI::App* peaks_cmd = app.add_subcommand("peaks", "print the peak-refined counts for index n");
  add_common(*peaks_cmd, peaks_opts.common);
  peaks_cmd->add_option("--n", peaks_opts.n, "index")->required()->check(CLI::PositiveNumber);

  EnumerateOptions enumerate;
  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "list every word of index n");
  add_common(*enumerate_cmd, enumerate.common);
  enumerate_cmd->add_option("--n", enumerate.n, "index")->required();
  enumerate_cmd->add_option("--cap", enumerate.cap, "maximum number of words")
      ->capture_default_str();

  WordOptions decompose_opts;
  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "split a word into (ell, color; children)");
  add_common(*decompose_cmd, decompose_opts.common);
  decompose_cmd->add_option("--word", decompose_opts.word, "step text (default: read stdin)");

  WordOptions validate_opts;
  CLI::App* validate_cmd = app.add_subcommand("validate", "check a word");
  add_common(*validate_cmd, validate_opts.common);
  validate_cmd->add_option("--word", validate_opts.word, "step text (default: read stdin)");

  PresetOptions preset;
  CLI::App* preset_cmd = app.add_subcommand("preset", "compare a known family with its colored count");
  add_common(*preset_cmd, preset.common);
  preset_cmd->add_option("name", preset.name,
                         "narayana | motzkin | schroeder | mary | a052709 | a186997 | duchon")
      ->required();
  preset_cmd->add_option("--N", preset.max_n, "last index")->capture_default_str();
  preset_cmd->add_option("--m", preset.m, "arity for mary")->capture_default_str();
  preset_cmd->add_option("--c1", preset.c1, "flat-step colors for motzkin")->capture_default_str();
  preset_cmd->add_option("--c2", preset.c2, "up-step colors for motzkin")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*count_cmd) run_count(count, out);
    if (*peaks_cmd) run_peaks(peaks_opts, out);
    if (*enumerate_cmd) run_enumerate(enumerate, out);
    if (*decompose_cmd) run_decompose(decompose_opts, in, out);
    if (*validate_cmd) run_validate(validate_opts, in, out);
    if (*preset_cmd) run_preset(preset, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (e.kind() == ErrorKind::NonIntegerTerm) return kInternal;
    if (e.kind() == ErrorKind::InvalidParams) return kUsage;
    return kInvalidInput;
  }
  out.flush();
  return kOk;
}

}  // namespace cdyck::cli
