#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "powerfree/balanced_ternary.hpp"
#include "powerfree/power.hpp"
#include "powerfree/verifier.hpp"
#include "powerfree/word.hpp"

namespace powerfree::cli {
namespace {

// Raised for option values that parse but make no sense; always exit 2.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& message)
      : std::runtime_error(flag + ": " + message) {}
};

unsigned cap_from_environment() {
  const char* raw = std::getenv("POWERFREE_CAP");
  if (raw == nullptr) return kDefaultLevelCap;
  const std::string text(raw);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value > 39)
    throw UsageError("POWERFREE_CAP", "expected an integer level in 0..39, got '" + text + "'");
  return value;
}

std::string trim_trailing(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t'))
    text.pop_back();
  return text;
}

TernaryWord parse_word_option(const std::string& flag, const std::string& text) {
  try {
    return TernaryWord::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag, e.what());
  }
}

struct Options {
  std::string format = "plain";
  unsigned level = 0;
  bool spaced = false;
  std::int64_t index = 0;
  std::string word;
  bool from_stdin = false;
  std::optional<unsigned> level_max;
  std::vector<std::string> checks;
  int alphabet = 0;
  std::string threshold;
  std::string mode;
  std::size_t max_len = 0;
};

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();
}

int do_generate(const Options& opt, unsigned cap, std::ostream& out) {
  if (opt.level > cap)
    throw UsageError("--level", "level " + std::to_string(opt.level) + " exceeds cap " + std::to_string(cap));
  const TernaryWord w = generate(opt.level, cap);
  const std::string text = opt.spaced ? w.to_spaced_string() : w.to_string();
  if (opt.format == "json") {
    nlohmann::json j{{"level", opt.level}, {"length", w.size()}, {"word", text}};
    out << j.dump(2) << '\n';
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

int do_at(const Options& opt, std::ostream& out) {
  const Symbol s = symbol_at_infinite(opt.index);
  if (opt.format == "json") {
    nlohmann::json j{{"index", opt.index},
                     {"digits", to_balanced_ternary(opt.index).to_string()},
                     {"symbol", s.value()}};
    out << j.dump(2) << '\n';
  } else {
    out << s.to_char() << '\n';
  }
  return kExitOk;
}

int do_exponent(const Options& opt, std::istream& in, std::ostream& out) {
  TernaryWord w;
  if (opt.from_stdin) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    w = parse_word_option("--stdin", trim_trailing(std::move(text)));
  } else {
    w = parse_word_option("--word", opt.word);
  }
  if (w.empty()) throw UsageError(opt.from_stdin ? "--stdin" : "--word", "the word is empty");
  const std::size_t period = least_period(w);
  const Rational e = exponent(w);
  if (opt.format == "json") {
    nlohmann::json j{{"word", w.to_string()},
                     {"length", w.size()},
                     {"period", period},
                     {"exponent", e.to_string()}};
    out << j.dump(2) << '\n';
  } else {
    out << e.to_string() << " (period " << period << ")\n";
  }
  return kExitOk;
}

int do_verify(const Options& opt, unsigned cap, std::ostream& out) {
  const unsigned n_max = opt.level_max.value_or(8);
  if (n_max == 0) throw UsageError("--level-max", "must be at least 1");
  if (n_max > cap)
    throw UsageError("--level-max", "level " + std::to_string(n_max) + " exceeds cap " + std::to_string(cap));
  for (const auto& name : opt.checks)
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw UsageError("--checks", "unknown check '" + name + "'");
  const auto reports = run_all(n_max, opt.checks, cap);
  out << (opt.format == "json" ? render_json(reports) : render_table(reports));
  const bool all_passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return all_passed ? kExitOk : kExitViolation;
}

int do_search(const Options& opt, std::ostream& out) {
  if (opt.alphabet != 2 && opt.alphabet != 3) throw UsageError("--alphabet", "must be 2 or 3");
  Rational threshold;
  try {
    threshold = Rational::parse(opt.threshold);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--threshold", e.what());
  }
  if (threshold < Rational(1)) throw UsageError("--threshold", "must be at least 1");
  if (opt.max_len < 1) throw UsageError("--max-len", "must be at least 1");
  const Mode mode = parse_mode(opt.mode);

  const SearchSummary summary = avoidance_search(opt.alphabet, threshold, mode, opt.max_len);
  if (opt.format == "json") {
    std::vector<std::uint64_t> counts(summary.counts.begin() + 1, summary.counts.end());
    nlohmann::json j{{"alphabet", opt.alphabet},
                     {"threshold", threshold.to_string()},
                     {"mode", std::string(to_string(mode))},
                     {"max_len", opt.max_len},
                     {"terminated", summary.terminated},
                     {"longest_length", summary.longest.size()},
                     {"longest", summary.longest.to_string()},
                     {"counts", counts}};
    out << j.dump(2) << '\n';
  } else {
    out << "alphabet " << opt.alphabet << ", threshold " << threshold.to_string() << ", mode "
        << to_string(mode) << ", max-len " << opt.max_len << '\n';
    out << "terminated: " << (summary.terminated ? "yes" : "no") << '\n';
    out << "longest: " << summary.longest.size() << ' ' << summary.longest.to_string() << '\n';
    out << "length count\n";
    for (std::size_t len = 1; len < summary.counts.size(); ++len) {
      if (summary.counts[len] == 0) break;
      out << len << ' ' << summary.counts[len] << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kurosaki word generation, repetition analysis and verification", "powerfree"};
  app.require_subcommand(1, 1);
  Options opt;

  auto* generate_cmd = app.add_subcommand("generate", "Print phi^n(2)");
  generate_cmd->add_option("--level", opt.level, "Level n")->required();
  generate_cmd->add_flag("--spaced", opt.spaced, "Group triples with spaces");
  add_format(generate_cmd, opt);

  auto* at_cmd = app.add_subcommand("at", "Symbol of the bi-infinite word at a centered index");
  at_cmd->add_option("--index", opt.index, "Centered index (may be negative)")->required();
  add_format(at_cmd, opt);

  auto* exponent_cmd = app.add_subcommand("exponent", "Exponent and least period of a word");
  auto* input = exponent_cmd->add_option_group("input");
  input->add_option("--word", opt.word, "Word over 1,2,3");
  input->add_flag("--stdin", opt.from_stdin, "Read the word from stdin");
  input->require_option(1);
  add_format(exponent_cmd, opt);

  auto* verify_cmd = app.add_subcommand("verify", "Run the structural checks");
  verify_cmd->add_option("--level-max", opt.level_max, "Largest level checked (default 8)");
  verify_cmd->add_option("--checks", opt.checks, "Comma-separated subset of checks")->delimiter(',');
  add_format(verify_cmd, opt);

  auto* search_cmd = app.add_subcommand("search", "Backtracking search for power-free words");
  search_cmd->add_option("--alphabet", opt.alphabet, "Alphabet size (2 or 3)")->required();
  search_cmd->add_option("--threshold", opt.threshold, "Threshold p/q")->required();
  search_cmd->add_option("--mode", opt.mode, "strict or plus")
      ->required()
      ->check(CLI::IsMember({"strict", "plus"}));
  search_cmd->add_option("--max-len", opt.max_len, "Length at which to stop")->required();
  add_format(search_cmd, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const unsigned cap = cap_from_environment();
    if (generate_cmd->parsed()) return do_generate(opt, cap, out);
    if (at_cmd->parsed()) return do_at(opt, out);
    if (exponent_cmd->parsed()) return do_exponent(opt, in, out);
    if (verify_cmd->parsed()) return do_verify(opt, cap, out);
    if (search_cmd->parsed()) return do_search(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace powerfree::cli
