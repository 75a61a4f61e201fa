#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfdissect/words.hpp"

namespace cfdissect {

// Direct recognizers for the two context-free languages. They never consult
// the grammar engine, so the chart recognizer can serve as an oracle for them.

/// Left-to-right recognizer for extended non-associative words: full binary
/// bracket trees x <left> <right> y whose leaves are pzp or pzzp.
///
/// The state is a stack of per-node child counts, so copying a scanner is a
/// cheap checkpoint for walks over words that share prefixes.
class EnwScanner {
 public:
  /// Returns false once the consumed prefix cannot be extended to a member.
  bool feed(char c);
  bool feed(std::string_view s) {
    for (char c : s) {
      if (!feed(c)) return false;
    }
    return true;
  }
  bool accepts() const noexcept { return !failed_ && closed_; }
  bool failed() const noexcept { return failed_; }
  std::size_t consumed() const noexcept { return consumed_; }

 private:
  enum class Leaf : std::uint8_t { none, p, pz, pzz };

  std::vector<std::uint8_t> children_;  // open nodes, innermost last
  Leaf leaf_ = Leaf::none;
  bool closed_ = false;
  bool failed_ = false;
  std::size_t consumed_ = 0;
};

/// Base-case convention for balanced words. The grammar admits pp as a block
/// (T -> eps) and words without outer brackets (S -> pZVZp); the strict mode
/// requires at least one bracket in both places instead.
enum class BalancedMode : std::uint8_t { grammar, strict };

/// Left-to-right recognizer for balanced words:
///   x^a p Z (p y^i x^i p Z)+ p y^a    with Z in {z, zz}
/// where a and each block's i are independent.
class BalancedScanner {
 public:
  explicit BalancedScanner(BalancedMode mode = BalancedMode::grammar) : mode_(mode) {}

  bool feed(char c);
  bool feed(std::string_view s) {
    for (char c : s) {
      if (!feed(c)) return false;
    }
    return true;
  }
  bool accepts() const noexcept;
  bool failed() const noexcept { return phase_ == Phase::failed; }

 private:
  enum class Phase : std::uint8_t { lead_x, z_run, block_y, block_x, after_block, failed };

  bool fail() {
    phase_ = Phase::failed;
    return false;
  }

  BalancedMode mode_;
  Phase phase_ = Phase::lead_x;
  bool seen_block_ = false;
  std::uint8_t z_run_ = 0;
  std::size_t outer_ = 0;   // a
  std::size_t ys_ = 0;      // y's after the latest block-opening p
  std::size_t xs_ = 0;
};

bool is_enw(std::string_view w);
bool is_balanced(std::string_view w, BalancedMode mode = BalancedMode::grammar);

/// For every factor p w' p (any two p positions), w' has as many x as y.
bool check_balanced_factors(std::string_view w);

/// Full binary tree behind an extended non-associative word.
struct EnwTree {
  enum class Kind : std::uint8_t { internal, pzp, pzzp };

  Kind kind = Kind::pzp;
  std::vector<EnwTree> children;  // exactly two for internal nodes

  static EnwTree leaf(Kind k) { return EnwTree{k, {}}; }
  static EnwTree node(EnwTree left, EnwTree right) {
    EnwTree t{Kind::internal, {}};
    t.children.reserve(2);
    t.children.push_back(std::move(left));
    t.children.push_back(std::move(right));
    return t;
  }

  std::size_t leaf_count() const;
  std::size_t internal_count() const;
  /// Depth (internal nodes above) of every leaf, left to right.
  std::vector<std::size_t> leaf_depths() const;
  Word serialize() const;

  friend bool operator==(const EnwTree&, const EnwTree&) = default;
};

class EnwParseError : public std::invalid_argument {
 public:
  EnwParseError(std::size_t position, const std::string& reason);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Throws EnwParseError naming the first offending position when w is not an
/// extended non-associative word.
EnwTree parse_enw(std::string_view w);

/// 2^leaves * Catalan(leaves - 1) words, in a fixed order: tree shapes first
/// (left subtree size ascending, recursively), then leaf labelings as a binary
/// counter with the leftmost leaf most significant and pzzp as 1.
std::vector<Word> enumerate_enw(std::size_t leaves);
void for_each_enw(std::size_t leaves, const std::function<void(std::string_view)>& visit);

/// Catalan numbers by the convolution recurrence.
BigInt catalan(std::size_t n);

}  // namespace cfdissect
