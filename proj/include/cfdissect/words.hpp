#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cfdissect {

using BigInt = boost::multiprecision::cpp_int;

/// The four-letter working alphabet. x/y are brackets, p delimits leaves,
/// z is the payload that survives the erasing homomorphism.
enum class Letter : char { x = 'x', y = 'y', z = 'z', p = 'p' };

inline constexpr Letter kAlphabet[] = {Letter::x, Letter::y, Letter::z, Letter::p};

constexpr bool is_letter(char c) noexcept {
  return c == 'x' || c == 'y' || c == 'z' || c == 'p';
}

constexpr char to_char(Letter l) noexcept { return static_cast<char>(l); }

/// Thrown when text contains a character outside {x,y,z,p}.
class AlphabetError : public std::invalid_argument {
 public:
  AlphabetError(std::size_t position, char found);

  std::size_t position() const noexcept { return position_; }
  char found() const noexcept { return found_; }

 private:
  std::size_t position_;
  char found_;
};

/// A finite word over {x,y,z,p}. Always holds validated letters.
class Word {
 public:
  Word() = default;

  /// Parses ASCII text; throws AlphabetError naming the first bad offset.
  static Word parse(std::string_view text);

  /// For internally built strings already known to be over the alphabet.
  static Word from_trusted(std::string letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>(letters_[i]);
  }

  const std::string& str() const noexcept { return letters_; }
  std::string_view view() const noexcept { return letters_; }
  operator std::string_view() const noexcept { return letters_; }

  Word operator+(const Word& rhs) const {
    return from_trusted(letters_ + rhs.letters_);
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.view(); }

 private:
  std::string letters_;
};

/// z^len over the one-letter alphabet {z}; only the length is stored.
struct UnaryWord {
  BigInt len;

  friend bool operator==(const UnaryWord&, const UnaryWord&) = default;
};

// Occurrences of t in w, overlapping ones included. Throws on empty t.
std::size_t occur(std::string_view w, std::string_view t);

std::vector<Word> prefixes(const Word& w);
std::vector<Word> suffixes(const Word& w);
/// All distinct factors, including the empty word and w itself, sorted.
std::vector<Word> factors(const Word& w);

/// Replaces the leftmost occurrence of v by u; w unchanged if v is absent.
Word replace(const Word& w, std::string_view v, std::string_view u);

/// Length of the longest run of x letters (0 when there is none).
std::size_t height(std::string_view w) noexcept;

/// Erases every letter except z.
UnaryWord pi(std::string_view w);

/// Length of the leading x-run of w.
std::size_t leading_run(std::string_view w, char c) noexcept;
std::size_t trailing_run(std::string_view w, char c) noexcept;

}  // namespace cfdissect
