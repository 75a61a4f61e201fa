#include "cfdissect/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cfdissect/dissection.hpp"
#include "cfdissect/grammar.hpp"
#include "cfdissect/omega.hpp"
#include "cfdissect/oracle.hpp"
#include "cfdissect/recognizers.hpp"

namespace cfdissect {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t small_integer(const std::string& text, std::size_t max, const std::string& what) {
  BigInt v;
  try {
    v = parse_length(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
  if (v > max) throw UsageError(what + " must be at most " + std::to_string(max));
  return static_cast<std::size_t>(v);
}

int cmd_check(const std::string& lang, const std::string& text, std::ostream& out) {
  const Word w = Word::parse(text);
  bool member = false;
  if (lang == "enw") {
    member = is_enw(w);
  } else if (lang == "balanced") {
    member = is_balanced(w);
  } else if (lang == "omega") {
    member = is_omega(w);
  } else if (lang == "grammar-enw") {
    member = recognize(enw_grammar(), w).accepted;
  } else {
    member = recognize(balanced_grammar(), w).accepted;
  }
  out << (member ? "member" : "non-member");
  if (member && lang == "omega") out << " height=" << height(w) << " z=" << pi(w).len;
  out << '\n';
  return member ? kExitOk : kExitNo;
}

int cmd_gen(const std::string& n_text, bool all, std::ostream& out) {
  const std::size_t n = small_integer(n_text, std::size_t{1} << 24, "n");
  if (n < 2) throw UsageError("Ω(n) is empty for n < 2");
  if (!all) {
    out << construct_omega(n).str() << '\n';
    return kExitOk;
  }
  if (n > kMaxEnumeratedOmega) throw UsageError("--all requires n <= 64");
  for_each_omega(n, [&](std::string_view w, const OmegaScanner&) { out << w << '\n'; });
  return kExitOk;
}

int cmd_count(const std::string& kind, const std::string& n_text, std::ostream& out) {
  BigInt enumerated = 0;
  BigInt formula = 0;
  if (kind == "enw-leaves") {
    const std::size_t k = small_integer(n_text, 8, "leaf count");
    if (k < 2) throw UsageError("leaf count must lie in [2, 8]");
    for_each_enw(k, [&](std::string_view) { ++enumerated; });
    formula = (BigInt(1) << k) * catalan(k - 1);
  } else {
    const std::size_t n = small_integer(n_text, kMaxEnumeratedOmega, "n");
    if (n < 2) throw UsageError("n must lie in [2, 64]");
    std::uint64_t count = 0;
    for_each_omega(n, [&](std::string_view, const OmegaScanner&) { ++count; });
    enumerated = count;
    formula = omega_count_formula(n);
  }
  out << "enumerated=" << enumerated << " formula=" << formula << '\n';
  return enumerated == formula ? kExitOk : kExitNo;
}

UnaryLanguage read_lengths_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open lengths file '" + path + "'");
  std::vector<BigInt> lengths;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    try {
      lengths.push_back(parse_length(line));
    } catch (const std::invalid_argument& e) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  try {
    return UnaryLanguage::from_lengths(std::move(lengths));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void print_lengths(std::ostream& out, const char* label, const std::vector<BigInt>& v) {
  out << label << ':';
  for (const auto& m : v) out << ' ' << m;
  out << '\n';
}

int cmd_dissect(const std::string& builtin, const std::string& lengths_file, const std::string& c_text,
                const std::string& cap_text, bool json, std::size_t samples, std::ostream& out,
                std::ostream& err) {
  if (builtin.empty() == lengths_file.empty()) {
    throw UsageError("give exactly one of --builtin or --lengths-file");
  }
  Rational c;
  BigInt cap;
  try {
    c = parse_rational(c_text);
    cap = parse_length(cap_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c <= 1) throw UsageError("--c must exceed 1");
  UnaryLanguage lang = lengths_file.empty() ? UnaryLanguage::builtin(builtin)
                                            : read_lengths_file(lengths_file);
  DissectionReport report;
  try {
    report = dissect_geometric(lang, c, cap, samples);
  } catch (const PreconditionError& e) {
    throw UsageError(std::string("degenerate language: ") + e.what());
  } catch (const GrowthCheckFailed& e) {
    throw UsageError(e.what());
  }
  if (json) {
    out << to_json(report).dump() << '\n';
  } else {
    out << "language=" << lang.name() << " c=" << c << " cap=" << report.cap << '\n';
    out << "alpha=" << report.alpha << " g=" << report.g << '\n';
    out << "in=" << report.in_count << " out=" << report.out_count
        << " skipped_small=" << report.skipped_small << '\n';
    print_lengths(out, "samples_in", report.samples_in);
    print_lengths(out, "samples_out", report.samples_out);
    out << "growth_check=ok checked=" << report.growth_check.checked
        << " unverified=" << report.growth_check.unverified.size() << '\n';
  }
  if (!report.dissects()) {
    err << "one side of the partition is empty up to the cap; try a larger --cap\n";
    return kExitNo;
  }
  return kExitOk;
}

int cmd_oracle_diff(const std::string& max_text, const std::string& samples_text,
                    const std::string& seed_text, std::ostream& out) {
  const std::size_t max_exhaustive = small_integer(max_text, 12, "max_exhaustive");
  const std::size_t samples = small_integer(samples_text, std::size_t{1} << 40, "random_samples");
  const auto seed = static_cast<std::uint64_t>(
      small_integer(seed_text, std::numeric_limits<std::uint64_t>::max(), "seed"));
  const auto result = oracle_diff(max_exhaustive, samples, seed);
  for (const auto& m : result.examples) {
    out << "mismatch word=" << m.word << " enw=" << m.enw_direct << '/' << m.enw_chart
        << " balanced=" << m.balanced_direct << '/' << m.balanced_chart << '\n';
  }
  out << "words=" << result.words << " mismatches=" << result.mismatches << '\n';
  return result.mismatches == 0 ? kExitOk : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced extended non-associative words and unary language dissection",
               "cfdissect"};
  app.require_subcommand(1);

  std::string lang;
  std::string word;
  auto* check = app.add_subcommand("check", "Membership of a word; exit 0 member, 1 non-member");
  check->add_option("lang", lang, "enw | balanced | omega | grammar-enw | grammar-balanced")
      ->required()
      ->check(CLI::IsMember({"enw", "balanced", "omega", "grammar-enw", "grammar-balanced"}));
  check->add_option("word", word, "Word over x, y, z, p (may be empty)")->required();

  std::string n_text;
  bool all = false;
  auto* gen = app.add_subcommand("gen", "A word of Omega with n letters z, or all of them");
  gen->add_option("n", n_text, "Number of z letters")->required();
  gen->add_flag("--all", all, "Enumerate every word of Omega(n), n <= 64");

  std::string kind;
  std::string count_n;
  auto* count = app.add_subcommand("count", "Enumerated count next to its closed form");
  count->add_option("kind", kind, "enw-leaves | omega")
      ->required()
      ->check(CLI::IsMember({"enw-leaves", "omega"}));
  count->add_option("n", count_n, "Leaf count (2..8) or z count (2..64)")->required();

  std::string builtin;
  std::string lengths_file;
  std::string c_text;
  std::string cap_text;
  bool json = false;
  std::size_t samples = 10;
  auto* dissect = app.add_subcommand("dissect", "Partition a geometrically growing unary language");
  auto* builtin_opt = dissect->add_option("--builtin", builtin, "pow2 | pow3 | fib")
                          ->check(CLI::IsMember({"pow2", "pow3", "fib"}));
  dissect->add_option("--lengths-file", lengths_file, "One length per line, '#' comments")
      ->excludes(builtin_opt);
  dissect->add_option("--c", c_text, "Growth constant: integer, a/b or decimal")->required();
  dissect->add_option("--cap", cap_text, "Largest length considered: decimal or a^b")->required();
  dissect->add_flag("--json", json, "Emit the report as JSON");
  dissect->add_option("--samples", samples, "Sample lengths kept per side")->capture_default_str();

  std::string max_text;
  std::string random_text;
  std::string seed_text;
  auto* diff = app.add_subcommand("oracle-diff", "Direct recognizers against the chart recognizer");
  diff->add_option("max_exhaustive", max_text, "All words up to this length (<= 12)")->required();
  diff->add_option("random_samples", random_text, "Number of seeded random words")->required();
  diff->add_option("seed", seed_text, "Seed")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(lang, word, out);
    if (gen->parsed()) return cmd_gen(n_text, all, out);
    if (count->parsed()) return cmd_count(kind, count_n, out);
    if (dissect->parsed()) {
      return cmd_dissect(builtin, lengths_file, c_text, cap_text, json, samples, out, err);
    }
    if (diff->parsed()) return cmd_oracle_diff(max_text, random_text, seed_text, out);
  } catch (const AlphabetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cfdissect
