#include "cfdissect/recognizers.hpp"

#include <map>

namespace cfdissect {

// --- ENW --------------------------------------------------------------------

bool EnwScanner::feed(char c) {
  if (failed_) return false;
  ++consumed_;
  const auto fail = [this] {
    failed_ = true;
    return false;
  };
  switch (leaf_) {
    case Leaf::p:
      if (c != 'z') return fail();
      leaf_ = Leaf::pz;
      return true;
    case Leaf::pz:
      if (c == 'z') {
        leaf_ = Leaf::pzz;
      } else if (c == 'p') {
        leaf_ = Leaf::none;
      } else {
        return fail();
      }
      return true;
    case Leaf::pzz:
      if (c != 'p') return fail();
      leaf_ = Leaf::none;
      return true;
    case Leaf::none:
      break;
  }
  if (closed_) return fail();
  switch (c) {
    case 'x':
    case 'p':
      if (children_.empty()) {
        if (c == 'p' || consumed_ != 1) return fail();
      } else {
        if (children_.back() == 2) return fail();
        ++children_.back();
      }
      if (c == 'x') {
        children_.push_back(0);
      } else {
        leaf_ = Leaf::p;
      }
      return true;
    case 'y':
      if (children_.empty() || children_.back() != 2) return fail();
      children_.pop_back();
      closed_ = children_.empty();
      return true;
    default:
      return fail();
  }
}

bool is_enw(std::string_view w) {
  EnwScanner s;
  return s.feed(w) && s.accepts();
}

// --- Balanced ---------------------------------------------------------------

bool BalancedScanner::feed(char c) {
  switch (phase_) {
    case Phase::failed:
      return false;
    case Phase::lead_x:
      if (c == 'x') {
        ++outer_;
        return true;
      }
      if (c != 'p' || (mode_ == BalancedMode::strict && outer_ == 0)) return fail();
      phase_ = Phase::z_run;
      z_run_ = 0;
      return true;
    case Phase::z_run:
      if (c == 'z') {
        if (++z_run_ > 2) return fail();
        return true;
      }
      if (c != 'p' || z_run_ == 0) return fail();
      // Opens a block, or is the closing p when followed by y^a and the end.
      phase_ = Phase::block_y;
      ys_ = 0;
      return true;
    case Phase::block_y:
      if (c == 'y') {
        ++ys_;
        return true;
      }
      if (c == 'x') {
        if (ys_ == 0) return fail();
        phase_ = Phase::block_x;
        xs_ = 1;
        return true;
      }
      if (c == 'p' && ys_ == 0 && mode_ == BalancedMode::grammar) {
        phase_ = Phase::after_block;
        return true;
      }
      return fail();
    case Phase::block_x:
      if (c == 'x') {
        if (++xs_ > ys_) return fail();
        return true;
      }
      if (c != 'p' || xs_ != ys_) return fail();
      phase_ = Phase::after_block;
      return true;
    case Phase::after_block:
      if (c != 'z') return fail();
      seen_block_ = true;
      phase_ = Phase::z_run;
      z_run_ = 1;
      return true;
  }
  return fail();
}

bool BalancedScanner::accepts() const noexcept {
  return phase_ == Phase::block_y && seen_block_ && ys_ == outer_;
}

bool is_balanced(std::string_view w, BalancedMode mode) {
  BalancedScanner s(mode);
  return s.feed(w) && s.accepts();
}

bool check_balanced_factors(std::string_view w) {
  // Bracket difference x - y over each prefix; a factor between two p's is
  // balanced iff the difference agrees at both ends.
  std::vector<long> diff_at_p;
  long diff = 0;
  for (char c : w) {
    if (c == 'p') diff_at_p.push_back(diff);
    diff += c == 'x' ? 1 : c == 'y' ? -1 : 0;
  }
  for (std::size_t i = 0; i < diff_at_p.size(); ++i) {
    for (std::size_t j = i + 1; j < diff_at_p.size(); ++j) {
      if (diff_at_p[i] != diff_at_p[j]) return false;
    }
  }
  return true;
}

// --- Trees ------------------------------------------------------------------

std::size_t EnwTree::leaf_count() const {
  if (kind != Kind::internal) return 1;
  return children[0].leaf_count() + children[1].leaf_count();
}

std::size_t EnwTree::internal_count() const {
  if (kind != Kind::internal) return 0;
  return 1 + children[0].internal_count() + children[1].internal_count();
}

namespace {

void collect_depths(const EnwTree& t, std::size_t depth, std::vector<std::size_t>& out) {
  if (t.kind != EnwTree::Kind::internal) {
    out.push_back(depth);
    return;
  }
  collect_depths(t.children[0], depth + 1, out);
  collect_depths(t.children[1], depth + 1, out);
}

void write(const EnwTree& t, std::string& out) {
  switch (t.kind) {
    case EnwTree::Kind::pzp:
      out += "pzp";
      return;
    case EnwTree::Kind::pzzp:
      out += "pzzp";
      return;
    case EnwTree::Kind::internal:
      out += 'x';
      write(t.children[0], out);
      write(t.children[1], out);
      out += 'y';
      return;
  }
}

}  // namespace

std::vector<std::size_t> EnwTree::leaf_depths() const {
  std::vector<std::size_t> out;
  collect_depths(*this, 0, out);
  return out;
}

Word EnwTree::serialize() const {
  std::string out;
  write(*this, out);
  return Word::from_trusted(std::move(out));
}

EnwParseError::EnwParseError(std::size_t position, const std::string& reason)
    : std::invalid_argument("not an extended non-associative word: " + reason + " at offset " +
                            std::to_string(position)),
      position_(position) {}

namespace {

class EnwParser {
 public:
  explicit EnwParser(std::string_view w) : w_(w) {}

  EnwTree run() {
    if (w_.empty()) throw EnwParseError(0, "empty word");
    if (w_[0] != 'x') throw EnwParseError(0, "expected x");
    EnwTree t = node();
    if (pos_ != w_.size()) throw EnwParseError(pos_, "trailing letters after the root");
    return t;
  }

 private:
  EnwTree node() {
    ++pos_;  // x
    EnwTree left = child();
    EnwTree right = child();
    expect('y', "expected y closing a node with two children");
    return EnwTree::node(std::move(left), std::move(right));
  }

  EnwTree child() {
    if (pos_ >= w_.size()) throw EnwParseError(pos_, "unexpected end, expected x or p");
    if (w_[pos_] == 'x') return node();
    if (w_[pos_] != 'p') throw EnwParseError(pos_, "expected x or p");
    ++pos_;
    expect('z', "expected z inside a leaf");
    if (pos_ < w_.size() && w_[pos_] == 'z') {
      ++pos_;
      expect('p', "expected p closing a pzzp leaf");
      return EnwTree::leaf(EnwTree::Kind::pzzp);
    }
    expect('p', "expected p or z inside a leaf");
    return EnwTree::leaf(EnwTree::Kind::pzp);
  }

  void expect(char c, const char* reason) {
    if (pos_ >= w_.size() || w_[pos_] != c) throw EnwParseError(pos_, reason);
    ++pos_;
  }

  std::string_view w_;
  std::size_t pos_ = 0;
};

// Shapes with 'a' standing for a leaf; cached per leaf count.
const std::vector<std::string>& shapes(std::size_t leaves, std::map<std::size_t, std::vector<std::string>>& memo) {
  if (auto it = memo.find(leaves); it != memo.end()) return it->second;
  std::vector<std::string> out;
  if (leaves == 1) {
    out.emplace_back("a");
  } else {
    for (std::size_t left = 1; left < leaves; ++left) {
      const auto& ls = shapes(left, memo);
      const auto& rs = shapes(leaves - left, memo);
      for (const auto& l : ls) {
        for (const auto& r : rs) out.push_back("x" + l + r + "y");
      }
    }
  }
  return memo.emplace(leaves, std::move(out)).first->second;
}

}  // namespace

EnwTree parse_enw(std::string_view w) { return EnwParser(w).run(); }

void for_each_enw(std::size_t leaves, const std::function<void(std::string_view)>& visit) {
  if (leaves < 2) throw std::invalid_argument("enumerate_enw: at least two leaves are required");
  if (leaves > 20) throw std::invalid_argument("enumerate_enw: leaf count too large to enumerate");
  std::map<std::size_t, std::vector<std::string>> memo;
  std::string word;
  for (const auto& shape : shapes(leaves, memo)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << leaves); ++mask) {
      word.clear();
      std::size_t leaf = 0;
      for (char c : shape) {
        if (c != 'a') {
          word += c;
          continue;
        }
        const bool wide = (mask >> (leaves - 1 - leaf)) & 1U;
        word += wide ? "pzzp" : "pzp";
        ++leaf;
      }
      visit(word);
    }
  }
}

std::vector<Word> enumerate_enw(std::size_t leaves) {
  std::vector<Word> out;
  for_each_enw(leaves, [&](std::string_view w) { out.push_back(Word::from_trusted(std::string(w))); });
  return out;
}

BigInt catalan(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c[n];
}

}  // namespace cfdissect
