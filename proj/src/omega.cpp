#include "cfdissect/omega.hpp"

#include <bit>
#include <string>

#include <boost/multiprecision/integer.hpp>

namespace cfdissect {

namespace {

void write_perfect(unsigned height, const std::vector<LeafKind>& leaves, std::size_t& next,
                   std::string& out) {
  if (height == 0) {
    out += leaves[next++] == LeafKind::pzzp ? "pzzp" : "pzp";
    return;
  }
  out += 'x';
  write_perfect(height - 1, leaves, next, out);
  write_perfect(height - 1, leaves, next, out);
  out += 'y';
}

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace

Word PerfectTreeSpec::serialize() const {
  if (height < 1 || height > 30 || leaves.size() != (std::size_t{1} << height)) {
    throw PreconditionError("perfect tree needs height >= 1 and 2^height leaves");
  }
  std::string out;
  std::size_t next = 0;
  write_perfect(height, leaves, next, out);
  return Word::from_trusted(std::move(out));
}

std::size_t PerfectTreeSpec::z_count() const {
  std::size_t z = 0;
  for (auto k : leaves) z += k == LeafKind::pzzp ? 2 : 1;
  return z;
}

bool OmegaScanner::feed(char c) {
  if (c == 'x') {
    ++run_x_;
    if (run_x_ > max_x_) max_x_ = run_x_;
    if (in_lead_) ++lead_x_;
  } else {
    run_x_ = 0;
    in_lead_ = false;
  }
  trail_y_ = c == 'y' ? trail_y_ + 1 : 0;
  if (c == 'z') ++z_;
  const bool a = enw_.feed(c);
  const bool b = balanced_.feed(c);
  return a && b;
}

bool OmegaScanner::height_law_holds() const noexcept {
  const std::size_t h = max_x_;
  if (h >= 62) return false;
  const std::size_t low = std::size_t{1} << h;
  return lead_x_ >= h && trail_y_ >= h && low <= z_ && z_ <= 2 * low;
}

bool is_omega(std::string_view w) { return is_enw(w) && is_balanced(w); }

std::vector<unsigned> feasible_heights(const BigInt& n) {
  if (n < 2) throw PreconditionError("Omega(n) is empty for n < 2");
  const auto floor_log = static_cast<unsigned>(boost::multiprecision::msb(n));
  const bool power_of_two = boost::multiprecision::lsb(n) == floor_log;
  std::vector<unsigned> out;
  if (power_of_two && floor_log >= 2) out.push_back(floor_log - 1);
  out.push_back(floor_log);
  return out;
}

Word construct_omega(std::size_t n) {
  if (n < 2) throw PreconditionError("Omega(n) is empty for n < 2");
  if (n == 2) return Word::from_trusted("xpzppzpy");
  const auto j = static_cast<unsigned>(std::bit_width(n - 1));  // 2^(j-1) < n <= 2^j
  PerfectTreeSpec all_wide{j - 1, std::vector<LeafKind>(std::size_t{1} << (j - 1), LeafKind::pzzp)};
  std::string w = all_wide.serialize().str();
  // Iterated leftmost replace(w, pzzp, pzp). Each replacement leaves no pzzp
  // to the left of where it happened, so the search can resume there.
  std::size_t from = 0;
  for (std::size_t todo = (std::size_t{1} << j) - n; todo > 0; --todo) {
    const auto pos = w.find("pzzp", from);
    w.erase(pos + 1, 1);
    from = pos;
  }
  return Word::from_trusted(std::move(w));
}

BigInt omega_count_formula(std::size_t n) {
  BigInt total = 0;
  for (unsigned h : feasible_heights(BigInt(n))) {
    const std::size_t leaves = std::size_t{1} << h;
    total += binomial(leaves, n - leaves);
  }
  return total;
}

namespace {

class OmegaWalk {
 public:
  OmegaWalk(unsigned height, std::size_t wide,
            const std::function<void(std::string_view, const OmegaScanner&)>& visit)
      : leaves_(std::size_t{1} << height), visit_(visit), levels_(leaves_ + 1), separators_(leaves_) {
    for (std::size_t i = 0; i + 1 < leaves_; ++i) {
      const auto closed = static_cast<std::size_t>(std::countr_zero(i + 1));
      separators_[i] = std::string(closed, 'y') + std::string(closed, 'x');
    }
    separators_[leaves_ - 1] = std::string(height, 'y');
    word_.assign(height, 'x');
    levels_[0].feed(word_);
    step(0, wide);
  }

 private:
  void step(std::size_t leaf, std::size_t wide) {
    if (leaf == leaves_) {
      if (!levels_[leaf].accepts()) {
        throw std::logic_error("perfect-tree candidate rejected by a recognizer: " + word_);
      }
      visit_(word_, levels_[leaf]);
      return;
    }
    if (leaves_ - leaf - 1 >= wide) descend(leaf, wide, "pzp");
    if (wide > 0) descend(leaf, wide - 1, "pzzp");
  }

  void descend(std::size_t leaf, std::size_t wide, std::string_view text) {
    const auto mark = word_.size();
    word_ += text;
    word_ += separators_[leaf];
    OmegaScanner& next = levels_[leaf + 1];
    next = levels_[leaf];
    if (!next.feed(std::string_view(word_).substr(mark))) {
      throw std::logic_error("perfect-tree candidate rejected by a recognizer: " + word_);
    }
    step(leaf + 1, wide);
    word_.resize(mark);
  }

  std::size_t leaves_;
  const std::function<void(std::string_view, const OmegaScanner&)>& visit_;
  std::vector<OmegaScanner> levels_;
  std::vector<std::string> separators_;
  std::string word_;
};

}  // namespace

void for_each_omega(std::size_t n,
                    const std::function<void(std::string_view, const OmegaScanner&)>& visit) {
  if (n < 2 || n > kMaxEnumeratedOmega) {
    throw PreconditionError("enumerate_omega: n must lie in [2, 64]");
  }
  for (unsigned h : feasible_heights(BigInt(n))) {
    OmegaWalk(h, n - (std::size_t{1} << h), visit);
  }
}

std::vector<Word> enumerate_omega(std::size_t n, std::size_t max_words) {
  if (n >= 2 && n <= kMaxEnumeratedOmega && omega_count_formula(n) > max_words) {
    throw std::length_error("enumerate_omega: Omega(" + std::to_string(n) +
                            ") is too large to materialize; stream it with for_each_omega");
  }
  std::vector<Word> out;
  for_each_omega(n, [&](std::string_view w, const OmegaScanner&) {
    out.push_back(Word::from_trusted(std::string(w)));
  });
  return out;
}

bool verify_height_law(std::string_view w) {
  if (!is_omega(w)) throw PreconditionError("verify_height_law: word is not in Omega");
  const std::size_t h = height(w);
  if (h >= 62) return false;
  const std::size_t z = static_cast<std::size_t>(pi(w).len);
  const std::size_t low = std::size_t{1} << h;
  return leading_run(w, 'x') >= h && trailing_run(w, 'y') >= h && low <= z && z <= 2 * low;
}

}  // namespace cfdissect
