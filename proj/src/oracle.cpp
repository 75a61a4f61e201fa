#include "cfdissect/oracle.hpp"

#include <stdexcept>

#include "cfdissect/grammar.hpp"
#include "cfdissect/recognizers.hpp"

namespace cfdissect {

namespace {

constexpr char kLetters[] = {'x', 'y', 'z', 'p'};
constexpr std::size_t kKeptExamples = 10;

class Comparator {
 public:
  void compare(const std::string& w) {
    ++result.words;
    OracleMismatch m{w, is_enw(w), recognize(enw_, w).accepted, is_balanced(w),
                     recognize(balanced_, w).accepted};
    if (m.enw_direct != m.enw_chart || m.balanced_direct != m.balanced_chart) {
      ++result.mismatches;
      if (result.examples.size() < kKeptExamples) result.examples.push_back(std::move(m));
    }
  }

  OracleDiffResult result;

 private:
  Cfg enw_ = enw_grammar();
  Cfg balanced_ = balanced_grammar();
};

}  // namespace

OracleDiffResult oracle_diff(std::size_t max_exhaustive, std::size_t random_samples,
                             std::uint64_t seed) {
  if (max_exhaustive > 12) throw std::invalid_argument("oracle_diff: max_exhaustive must be <= 12");
  Comparator cmp;
  std::string w;
  for (std::size_t len = 0; len <= max_exhaustive; ++len) {
    // Odometer over {x,y,z,p}^len.
    std::vector<std::size_t> digits(len, 0);
    w.assign(len, kLetters[0]);
    while (true) {
      cmp.compare(w);
      std::size_t i = len;
      while (i > 0 && digits[i - 1] == 3) {
        digits[i - 1] = 0;
        w[i - 1] = kLetters[0];
        --i;
      }
      if (i == 0) break;
      w[i - 1] = kLetters[++digits[i - 1]];
    }
  }
  RandomWords gen(seed);
  for (std::size_t s = 0; s < random_samples; ++s) cmp.compare(gen.next());
  return cmp.result;
}

std::string RandomWords::next() {
  std::string w;
  switch (below(4)) {
    case 0:
      return uniform(kMaxRandomLength);
    case 1:
      w = enw(2 + below(30));
      break;
    case 2:
      w = balanced();
      break;
    default:
      w = omega(1 + static_cast<unsigned>(below(4)));
      break;
  }
  if (below(2) == 0) w = mutate(std::move(w));
  if (w.size() > kMaxRandomLength) w.resize(kMaxRandomLength);
  return w;
}

std::string RandomWords::uniform(std::size_t max_len) {
  std::string w(below(max_len + 1), 'x');
  for (auto& c : w) c = kLetters[below(4)];
  return w;
}

void RandomWords::enw_into(std::size_t leaves, std::string& out) {
  if (leaves == 1) {
    out += below(2) == 0 ? "pzp" : "pzzp";
    return;
  }
  const std::size_t left = 1 + below(leaves - 1);
  out += 'x';
  enw_into(left, out);
  enw_into(leaves - left, out);
  out += 'y';
}

std::string RandomWords::enw(std::size_t leaves) {
  std::string out;
  enw_into(leaves < 2 ? 2 : leaves, out);
  return out;
}

std::string RandomWords::balanced() {
  const std::size_t outer = below(7);
  std::string out(outer, 'x');
  const auto z_run = [&] { out += below(2) == 0 ? "z" : "zz"; };
  out += 'p';
  z_run();
  for (std::size_t blocks = 1 + below(8); blocks > 0; --blocks) {
    const std::size_t i = below(6);
    out += 'p';
    out.append(i, 'y');
    out.append(i, 'x');
    out += 'p';
    z_run();
  }
  out += 'p';
  out.append(outer, 'y');
  return out;
}

std::string RandomWords::omega(unsigned height) {
  if (height == 0) return below(2) == 0 ? "pzp" : "pzzp";
  std::string out = "x";
  out += omega(height - 1);
  out += omega(height - 1);
  return out + "y";
}

std::string RandomWords::mutate(std::string w) {
  for (std::uint64_t edits = 1 + below(2); edits > 0; --edits) {
    const std::size_t pos = below(w.size() + 1);
    switch (below(3)) {
      case 0:
        if (pos < w.size()) w[pos] = kLetters[below(4)];
        break;
      case 1:
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), kLetters[below(4)]);
        break;
      default:
        if (pos < w.size()) w.erase(pos, 1);
        break;
    }
  }
  return w;
}

}  // namespace cfdissect
