#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cfdissect/recognizers.hpp"
#include "cfdissect/words.hpp"

namespace cfdissect {

// Omega = ENW ∩ Balanced: balanced extended non-associative words.

/// Raised when an operation's input is outside its documented domain.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class LeafKind : std::uint8_t { pzp, pzzp };

/// A perfect binary tree of the given height with 2^height labelled leaves.
struct PerfectTreeSpec {
  unsigned height = 1;
  std::vector<LeafKind> leaves;

  /// Throws PreconditionError unless height >= 1 and leaves.size() == 2^height.
  Word serialize() const;
  std::size_t z_count() const;
};

/// Runs the ENW and balanced recognizers side by side, plus the statistics the
/// height law talks about. Copy to checkpoint.
class OmegaScanner {
 public:
  bool feed(char c);
  bool feed(std::string_view s) {
    for (char c : s) {
      if (!feed(c)) return false;
    }
    return true;
  }

  bool accepts() const noexcept { return enw_.accepts() && balanced_.accepts(); }
  bool enw_accepts() const noexcept { return enw_.accepts(); }
  bool balanced_accepts() const noexcept { return balanced_.accepts(); }
  bool dead() const noexcept { return enw_.failed() || balanced_.failed(); }

  std::size_t height() const noexcept { return max_x_; }
  std::size_t leading_x() const noexcept { return lead_x_; }
  std::size_t trailing_y() const noexcept { return trail_y_; }
  std::size_t z_count() const noexcept { return z_; }

  /// x^h prefix, y^h suffix and 2^h <= z <= 2^(h+1) for h = height().
  bool height_law_holds() const noexcept;

 private:
  EnwScanner enw_;
  BalancedScanner balanced_;
  std::size_t lead_x_ = 0;
  std::size_t run_x_ = 0;
  std::size_t max_x_ = 0;
  std::size_t trail_y_ = 0;
  std::size_t z_ = 0;
  bool in_lead_ = true;
};

bool is_omega(std::string_view w);

/// {h >= 1 : 2^h <= n <= 2^(h+1)}, ascending. Throws PreconditionError for n < 2.
std::vector<unsigned> feasible_heights(const BigInt& n);

/// A member of Omega with exactly n letters z: the all-pzzp perfect tree with
/// 2^ceil(log2 n) letters z, followed by leftmost pzzp -> pzp replacements.
Word construct_omega(std::size_t n);

/// Sum over feasible heights h of binomial(2^h, n - 2^h).
BigInt omega_count_formula(std::size_t n);

inline constexpr std::size_t kMaxEnumeratedOmega = 64;

/// Streams every serialization of a perfect tree with n letters z, heights
/// ascending, labelings in binary-counter order (leftmost leaf most
/// significant, pzzp = 1). Each word reaches the visitor together with the
/// scanner state after reading it; words sharing a prefix share that part of
/// the scan. Throws std::logic_error if a candidate fails either recognizer.
void for_each_omega(std::size_t n,
                    const std::function<void(std::string_view, const OmegaScanner&)>& visit);

/// Materialized form of for_each_omega. Throws std::length_error when the
/// result would exceed max_words.
std::vector<Word> enumerate_omega(std::size_t n, std::size_t max_words = std::size_t{1} << 22);

/// Direct check of the height law on w; throws PreconditionError unless w is
/// in Omega.
bool verify_height_law(std::string_view w);

}  // namespace cfdissect
