#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "cfdissect/omega.hpp"
#include "cfdissect/words.hpp"

namespace cfdissect {

using Rational = boost::multiprecision::cpp_rational;

/// Accepts "n", "a/b", "d.ddd" and "a^b" (integers only for the power form).
Rational parse_rational(std::string_view text);
/// Non-negative integer as decimal digits or "a^b".
BigInt parse_length(std::string_view text);

// --- growth -----------------------------------------------------------------

/// From every member of length >= c0 some member lies exactly k further, k in steps.
struct ConstantGrowth {
  BigInt c0;
  std::vector<BigInt> steps;
};

/// From every member u some member v has |u| < |v| <= c|u|.
struct GeometricGrowth {
  Rational c;
};

using GrowthSpec = std::variant<ConstantGrowth, GeometricGrowth>;

/// Throws std::invalid_argument if K is empty or has a non-positive step, or
/// c <= 1.
void validate(const GrowthSpec& spec);

/// A unary language as a strictly increasing set of lengths: either an explicit
/// finite sample or one of the built-in infinite generators.
class UnaryLanguage {
 public:
  enum class Generator { pow2, pow3, fib };

  static UnaryLanguage from_lengths(std::vector<BigInt> lengths);
  static UnaryLanguage generated(Generator kind);
  /// "pow2", "pow3" or "fib".
  static UnaryLanguage builtin(std::string_view name);

  /// Lengths up to and including cap, ascending.
  std::vector<BigInt> members_up_to(const BigInt& cap) const;
  std::string name() const;

 private:
  std::variant<std::vector<BigInt>, Generator> source_;
};

struct GrowthViolation {
  BigInt member;
  std::optional<BigInt> next;  // the nearest larger member, when one is <= cap

  friend bool operator==(const GrowthViolation&, const GrowthViolation&) = default;
};

struct GrowthCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<GrowthViolation> violations;
  /// Members whose witness would lie beyond the cap.
  std::vector<BigInt> unverified;

  friend bool operator==(const GrowthCheck&, const GrowthCheck&) = default;
};

/// Throws PreconditionError when fewer than two members are <= cap.
GrowthCheck check_growth(const UnaryLanguage& lang, const GrowthSpec& spec, const BigInt& cap);

// --- dissectors -------------------------------------------------------------

/// Least alpha >= 1 with 2^alpha >= c. Throws std::invalid_argument for c <= 1.
unsigned alpha_for(const Rational& c);

/// Unary regular language {x^h : h mod 2g < g}.
struct ResidueDissector {
  std::uint64_t g = 1;

  std::uint64_t modulus() const noexcept { return 2 * g; }
  bool accepts(std::uint64_t h) const noexcept { return h % (2 * g) < g; }
};

ResidueDissector residue_dissector(std::uint64_t g);

/// {x^h p v : h accepted by base, v any word} over {x,y,z,p}.
struct ThetaRegular {
  ResidueDissector base;

  bool contains(std::string_view w) const noexcept;
};

ThetaRegular lift_to_theta(const ResidueDissector& d);

/// Whether z^m lies in pi(R ∩ Omega) for R = lift_to_theta(d). Throws
/// PreconditionError for m < 2.
bool image_membership(const BigInt& m, const ResidueDissector& d);

/// An Omega word with m letters z inside lift_to_theta(d), smallest accepted
/// height first; std::nullopt when image_membership is false.
std::optional<Word> witness(const BigInt& m, const ResidueDissector& d);

// --- the pipeline -----------------------------------------------------------

struct DissectionReport {
  unsigned alpha = 0;
  std::uint64_t g = 0;
  BigInt cap;
  std::size_t in_count = 0;
  std::size_t out_count = 0;
  /// Members shorter than kSmallestPartitioned; not partitioned.
  std::size_t skipped_small = 0;
  std::vector<BigInt> samples_in;
  std::vector<BigInt> samples_out;
  GrowthCheck growth_check;

  bool dissects() const noexcept { return in_count > 0 && out_count > 0; }

  friend bool operator==(const DissectionReport&, const DissectionReport&) = default;
};

/// Members below this length are left out of the partition (log2 m >= 2).
inline constexpr unsigned kSmallestPartitioned = 4;

class GrowthCheckFailed : public std::runtime_error {
 public:
  explicit GrowthCheckFailed(GrowthCheck check);
  const GrowthCheck& check() const noexcept { return check_; }

 private:
  GrowthCheck check_;
};

/// Partitions the members of lang up to cap by image_membership under the
/// window g = alpha_for(c) + 1. Throws PreconditionError for fewer than two
/// members and GrowthCheckFailed when lang is not c-geometric up to cap.
DissectionReport dissect_geometric(const UnaryLanguage& lang, const Rational& c, const BigInt& cap,
                                   std::size_t sample_limit = 10);

nlohmann::json to_json(const DissectionReport& report);
DissectionReport report_from_json(const nlohmann::json& j);

}  // namespace cfdissect
