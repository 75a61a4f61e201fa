#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cfdissect {

// Cross-validation of the direct recognizers against the chart recognizer
// running the two grammars verbatim.

struct OracleMismatch {
  std::string word;
  bool enw_direct;
  bool enw_chart;
  bool balanced_direct;
  bool balanced_chart;
};

struct OracleDiffResult {
  std::size_t words = 0;
  std::size_t mismatches = 0;
  std::vector<OracleMismatch> examples;  // first few, for diagnostics
};

/// Compares on every word of length <= max_exhaustive, then on random_samples
/// seeded words of length <= kMaxRandomLength. Throws std::invalid_argument if
/// max_exhaustive > 12.
OracleDiffResult oracle_diff(std::size_t max_exhaustive, std::size_t random_samples,
                             std::uint64_t seed);

inline constexpr std::size_t kMaxRandomLength = 200;

/// The seeded sample stream used by oracle_diff: a quarter uniform words, the
/// rest built as ENW, balanced or Omega words, half of those then mutated by
/// one or two letter edits. Only raw engine output is used, so a seed yields
/// the same words on every platform.
class RandomWords {
 public:
  explicit RandomWords(std::uint64_t seed) : rng_(seed) {}

  std::string next();

  std::string uniform(std::size_t max_len);
  std::string enw(std::size_t leaves);
  std::string balanced();
  std::string omega(unsigned height);
  std::string mutate(std::string w);

 private:
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  void enw_into(std::size_t leaves, std::string& out);

  std::mt19937_64 rng_;
};

}  // namespace cfdissect
