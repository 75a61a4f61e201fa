#include "cfdissect/grammar.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace cfdissect {

namespace {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

}  // namespace

Cfg::Cfg(std::vector<std::string> nonterminals, std::string start, const std::vector<Rule>& rules)
    : names_(std::move(nonterminals)) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].size() == 1 && is_letter(names_[i][0])) {
      throw GrammarError("nonterminal '" + names_[i] + "' collides with a terminal");
    }
    if (names_[i] == "eps") throw GrammarError("'eps' is reserved for the empty body");
    if (!index.emplace(names_[i], static_cast<int>(i)).second) {
      throw GrammarError("duplicate nonterminal '" + names_[i] + "'");
    }
  }
  const auto start_it = index.find(start);
  if (start_it == index.end()) throw GrammarError("start symbol '" + start + "' is not declared");
  start_ = start_it->second;

  by_head_.resize(names_.size());
  for (const auto& rule : rules) {
    const auto head = index.find(rule.head);
    if (head == index.end()) throw GrammarError("undeclared head '" + rule.head + "'");
    Production prod{head->second, {}};
    const auto tokens = tokenize(rule.body);
    for (const auto& tok : tokens) {
      if (tok == "eps") {
        if (tokens.size() != 1) throw GrammarError("'eps' must stand alone in a body");
        continue;
      }
      if (tok.size() == 1 && is_letter(tok[0])) {
        prod.body.push_back({true, tok[0]});
        continue;
      }
      const auto nt = index.find(tok);
      if (nt == index.end()) {
        throw GrammarError("undeclared symbol '" + tok + "' in body of " + rule.head);
      }
      prod.body.push_back({false, nt->second});
    }
    by_head_[prod.head].push_back(static_cast<int>(productions_.size()));
    productions_.push_back(std::move(prod));
  }

  std::vector<bool> reached(names_.size(), false);
  std::vector<int> stack{start_};
  reached[start_] = true;
  while (!stack.empty()) {
    const int nt = stack.back();
    stack.pop_back();
    if (by_head_[nt].empty()) throw GrammarError("no production for '" + names_[nt] + "'");
    for (int p : by_head_[nt]) {
      for (const auto& sym : productions_[p].body) {
        if (!sym.terminal && !reached[sym.id]) {
          reached[sym.id] = true;
          stack.push_back(sym.id);
        }
      }
    }
  }

  // Shortest yields by Bellman-Ford style relaxation; nullable == yield 0.
  min_yield_.assign(names_.size(), kUnreachable);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& prod : productions_) {
      std::size_t total = 0;
      for (const auto& sym : prod.body) {
        const std::size_t y = sym.terminal ? 1 : min_yield_[sym.id];
        if (y == kUnreachable) {
          total = kUnreachable;
          break;
        }
        total += y;
      }
      if (total < min_yield_[prod.head]) {
        min_yield_[prod.head] = total;
        changed = true;
      }
    }
  }
  nullable_.resize(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) nullable_[i] = min_yield_[i] == 0;
}

std::string Cfg::to_bnf() const {
  std::string out;
  for (std::size_t nt = 0; nt < names_.size(); ++nt) {
    if (by_head_[nt].empty()) continue;
    out += names_[nt] + " ->";
    bool first = true;
    for (int p : by_head_[nt]) {
      if (!first) out += " |";
      first = false;
      if (productions_[p].body.empty()) out += " eps";
      for (const auto& sym : productions_[p].body) {
        out += ' ';
        out += sym.terminal ? std::string(1, static_cast<char>(sym.id)) : names_[sym.id];
      }
    }
    out += '\n';
  }
  return out;
}

Cfg enw_grammar() {
  return Cfg({"S", "P"}, "S",
             {{"S", "x P P y"}, {"P", "S"}, {"P", "p z p"}, {"P", "p z z p"}});
}

Cfg balanced_grammar() {
  return Cfg({"S", "V", "T", "Z"}, "S",
             {{"S", "x S y"},
              {"S", "p Z V Z p"},
              {"V", "V Z V"},
              {"V", "p T p"},
              {"T", "y T x"},
              {"T", "eps"},
              {"Z", "z"},
              {"Z", "z z"}});
}

// --- Earley -----------------------------------------------------------------

EarleyChart::EarleyChart(const Cfg& grammar) : grammar_(&grammar) {
  sets_.emplace_back();
  for (int p : grammar.productions_of(grammar.start())) add(sets_[0], {p, 0, 0});
  close(0);
}

void EarleyChart::add(ItemSet& set, Item item) {
  const auto key = (static_cast<std::uint64_t>(item.origin) << 40) |
                   (static_cast<std::uint64_t>(item.production) << 16) |
                   static_cast<std::uint64_t>(item.dot);
  if (set.seen.insert(key).second) set.items.push_back(item);
}

void EarleyChart::close(std::size_t index) {
  const auto& prods = grammar_->productions();
  // sets_ is not resized in here, so references stay valid.
  ItemSet& set = sets_[index];
  for (std::size_t i = 0; i < set.items.size(); ++i) {
    const Item item = set.items[i];
    const auto& body = prods[item.production].body;
    if (item.dot == static_cast<int>(body.size())) {
      const int head = prods[item.production].head;
      const ItemSet& from = sets_[item.origin];
      // Index-based: `from` may be `set` itself and grow while we iterate.
      for (std::size_t j = 0; j < from.items.size(); ++j) {
        const Item waiting = from.items[j];
        const auto& wbody = prods[waiting.production].body;
        if (waiting.dot < static_cast<int>(wbody.size()) && !wbody[waiting.dot].terminal &&
            wbody[waiting.dot].id == head) {
          add(set, {waiting.production, waiting.dot + 1, waiting.origin});
        }
      }
      continue;
    }
    const auto next = body[item.dot];
    if (next.terminal) continue;
    for (int p : grammar_->productions_of(next.id)) add(set, {p, 0, static_cast<int>(index)});
    if (grammar_->nullable(next.id)) add(set, {item.production, item.dot + 1, item.origin});
  }
}

bool EarleyChart::push(char letter) {
  const auto& prods = grammar_->productions();
  const std::size_t k = sets_.size();
  sets_.emplace_back();
  const ItemSet& prev = sets_[k - 1];
  ItemSet& next = sets_[k];
  for (const Item& item : prev.items) {
    const auto& body = prods[item.production].body;
    if (item.dot < static_cast<int>(body.size()) && body[item.dot].terminal &&
        body[item.dot].id == letter) {
      add(next, {item.production, item.dot + 1, item.origin});
    }
  }
  close(k);
  return alive();
}

void EarleyChart::pop() {
  if (sets_.size() <= 1) throw std::logic_error("EarleyChart::pop on an empty input");
  sets_.pop_back();
}

bool EarleyChart::accepts() const {
  const auto& prods = grammar_->productions();
  for (const Item& item : sets_.back().items) {
    if (item.origin == 0 && prods[item.production].head == grammar_->start() &&
        item.dot == static_cast<int>(prods[item.production].body.size())) {
      return true;
    }
  }
  return false;
}

std::size_t EarleyChart::item_count() const {
  std::size_t n = 0;
  for (const auto& s : sets_) n += s.items.size();
  return n;
}

ChartRecognition recognize(const Cfg& grammar, std::string_view w) {
  EarleyChart chart(grammar);
  for (char c : w) {
    if (!chart.push(c)) return {false, chart.item_count()};
  }
  return {chart.accepts(), chart.item_count()};
}

// --- Enumeration ------------------------------------------------------------
//
// Words of each exact length are built bottom-up: level n of every
// nonterminal only depends on shorter levels, except through bodies whose other
// symbols are nullable, so each level is iterated to a fixpoint on its own.

namespace {

using Level = std::unordered_set<std::string>;

struct Enumerator {
  const Cfg& g;
  std::vector<std::vector<Level>> lang;  // [nonterminal][length]

  void expand(const std::vector<Cfg::Symbol>& body, const std::vector<std::size_t>& suffix_min,
              std::size_t idx, std::size_t remaining, std::string& prefix, Level& out) {
    if (idx == body.size()) {
      if (remaining == 0) out.insert(prefix);
      return;
    }
    if (suffix_min[idx] > remaining) return;
    const auto sym = body[idx];
    if (sym.terminal) {
      prefix.push_back(static_cast<char>(sym.id));
      expand(body, suffix_min, idx + 1, remaining - 1, prefix, out);
      prefix.pop_back();
      return;
    }
    const std::size_t most = remaining - suffix_min[idx + 1];
    for (std::size_t len = g.min_yield(sym.id); len <= most; ++len) {
      // Snapshot: the level being filled may be the one we read from.
      const std::vector<std::string> words(lang[sym.id][len].begin(), lang[sym.id][len].end());
      for (const auto& w : words) {
        const auto mark = prefix.size();
        prefix += w;
        expand(body, suffix_min, idx + 1, remaining - len, prefix, out);
        prefix.resize(mark);
      }
    }
  }
};

}  // namespace

std::vector<Word> enumerate_derivations(const Cfg& grammar, std::size_t max_len) {
  const auto& prods = grammar.productions();
  std::vector<std::vector<std::size_t>> suffix_min(prods.size());
  for (std::size_t p = 0; p < prods.size(); ++p) {
    const auto& body = prods[p].body;
    auto& sm = suffix_min[p];
    sm.assign(body.size() + 1, 0);
    for (std::size_t i = body.size(); i-- > 0;) {
      const std::size_t y = body[i].terminal ? 1 : grammar.min_yield(body[i].id);
      sm[i] = y == kUnreachable || sm[i + 1] == kUnreachable ? kUnreachable : sm[i + 1] + y;
    }
  }

  Enumerator en{grammar, std::vector<std::vector<Level>>(grammar.nonterminals().size(),
                                                         std::vector<Level>(max_len + 1))};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t p = 0; p < prods.size(); ++p) {
        if (suffix_min[p][0] == kUnreachable) continue;
        Level fresh;
        std::string prefix;
        en.expand(prods[p].body, suffix_min[p], 0, len, prefix, fresh);
        auto& level = en.lang[prods[p].head][len];
        for (auto& w : fresh) changed |= level.insert(std::move(w)).second;
      }
    }
  }

  std::vector<Word> out;
  for (const auto& level : en.lang[grammar.start()]) {
    for (const auto& w : level) out.push_back(Word::from_trusted(w));
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.str() < b.str();
  });
  return out;
}

}  // namespace cfdissect
