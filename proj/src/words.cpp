#include "cfdissect/words.hpp"

#include <algorithm>
#include <set>

namespace cfdissect {

namespace {

std::string describe(std::size_t position, char found) {
  std::string msg = "invalid letter at offset " + std::to_string(position) + ": ";
  const auto byte = static_cast<unsigned char>(found);
  if (byte >= 0x20 && byte < 0x7f) {
    msg += '\'';
    msg += found;
    msg += '\'';
  } else {
    msg += "byte " + std::to_string(byte);
  }
  return msg + " (expected one of x, y, z, p)";
}

}  // namespace

AlphabetError::AlphabetError(std::size_t position, char found)
    : std::invalid_argument(describe(position, found)),
      position_(position),
      found_(found) {}

Word Word::parse(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_letter(text[i])) throw AlphabetError(i, text[i]);
  }
  return from_trusted(std::string(text));
}

std::size_t occur(std::string_view w, std::string_view t) {
  if (t.empty()) throw std::invalid_argument("occur: the counted factor must be nonempty");
  std::size_t count = 0;
  for (std::size_t pos = w.find(t); pos != std::string_view::npos; pos = w.find(t, pos + 1)) {
    ++count;
  }
  return count;
}

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t len = 0; len <= w.size(); ++len) {
    out.push_back(Word::from_trusted(w.str().substr(0, len)));
  }
  return out;
}

std::vector<Word> suffixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t len = 0; len <= w.size(); ++len) {
    out.push_back(Word::from_trusted(w.str().substr(w.size() - len)));
  }
  return out;
}

std::vector<Word> factors(const Word& w) {
  std::set<std::string> seen{std::string{}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) seen.insert(w.str().substr(i, len));
  }
  std::vector<Word> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(Word::from_trusted(s));
  return out;
}

Word replace(const Word& w, std::string_view v, std::string_view u) {
  if (v.empty()) throw std::invalid_argument("replace: the pattern must be nonempty");
  const auto pos = w.view().find(v);
  if (pos == std::string_view::npos) return w;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!is_letter(u[i])) throw AlphabetError(i, u[i]);
  }
  std::string out = w.str();
  out.replace(pos, v.size(), u);
  return Word::from_trusted(std::move(out));
}

std::size_t height(std::string_view w) noexcept {
  std::size_t best = 0;
  std::size_t run = 0;
  for (char c : w) {
    run = c == 'x' ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

UnaryWord pi(std::string_view w) {
  return UnaryWord{BigInt(std::count(w.begin(), w.end(), 'z'))};
}

std::size_t leading_run(std::string_view w, char c) noexcept {
  std::size_t i = 0;
  while (i < w.size() && w[i] == c) ++i;
  return i;
}

std::size_t trailing_run(std::string_view w, char c) noexcept {
  std::size_t i = 0;
  while (i < w.size() && w[w.size() - 1 - i] == c) ++i;
  return i;
}

}  // namespace cfdissect
