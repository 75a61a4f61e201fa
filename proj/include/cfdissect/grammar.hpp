#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cfdissect/words.hpp"

namespace cfdissect {

class GrammarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A context-free grammar over the terminals {x,y,z,p}.
///
/// Productions are written as whitespace-separated tokens: a single letter
/// from the alphabet is a terminal, `eps` is the empty body, anything else
/// must name a declared nonterminal. Immutable once constructed.
class Cfg {
 public:
  struct Symbol {
    bool terminal;
    int id;  // terminal: the letter's char code; nonterminal: index

    friend bool operator==(const Symbol&, const Symbol&) = default;
  };

  struct Production {
    int head;
    std::vector<Symbol> body;
  };

  struct Rule {
    std::string head;
    std::string body;
  };

  /// Throws GrammarError when the start symbol or a body token is undeclared,
  /// or when a nonterminal reachable from the start has no production.
  Cfg(std::vector<std::string> nonterminals, std::string start, const std::vector<Rule>& rules);

  const std::vector<std::string>& nonterminals() const noexcept { return names_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  int start() const noexcept { return start_; }
  const std::string& name(int nonterminal) const { return names_.at(nonterminal); }

  const std::vector<int>& productions_of(int nonterminal) const { return by_head_[nonterminal]; }
  bool nullable(int nonterminal) const { return nullable_[nonterminal]; }
  /// Shortest terminal yield of a nonterminal.
  std::size_t min_yield(int nonterminal) const { return min_yield_[nonterminal]; }

  /// One line per nonterminal, `A -> body | body`, `eps` for the empty body.
  std::string to_bnf() const;

 private:
  std::vector<std::string> names_;
  std::vector<Production> productions_;
  std::vector<std::vector<int>> by_head_;
  std::vector<bool> nullable_;
  std::vector<std::size_t> min_yield_;
  int start_ = 0;
};

/// S -> x P P y ; P -> S | p z p | p z z p
Cfg enw_grammar();

/// S -> x S y | p Z V Z p ; V -> V Z V | p T p ; T -> y T x | eps ; Z -> z | z z
Cfg balanced_grammar();

struct ChartRecognition {
  bool accepted = false;
  std::size_t item_count = 0;
};

/// Incremental Earley recognizer. Letters are pushed one at a time and can be
/// popped again, which lets callers walk a tree of words sharing prefixes.
/// Nullable nonterminals are completed at prediction time (Aycock-Horspool),
/// so epsilon bodies and left recursion need no grammar rewriting.
class EarleyChart {
 public:
  explicit EarleyChart(const Cfg& grammar);

  /// Returns false once no item survives, i.e. no extension can be accepted.
  bool push(char letter);
  void pop();

  bool accepts() const;
  bool alive() const { return !sets_.back().items.empty(); }
  std::size_t length() const { return sets_.size() - 1; }
  std::size_t item_count() const;

 private:
  struct Item {
    int production;
    int dot;
    int origin;
  };
  struct ItemSet {
    std::vector<Item> items;
    std::unordered_set<std::uint64_t> seen;
  };

  void add(ItemSet& set, Item item);
  void close(std::size_t index);

  const Cfg* grammar_;
  std::vector<ItemSet> sets_;
};

ChartRecognition recognize(const Cfg& grammar, std::string_view w);

/// Every distinct word of length at most max_len derivable from the start
/// symbol, sorted shortlex.
std::vector<Word> enumerate_derivations(const Cfg& grammar, std::size_t max_len);

}  // namespace cfdissect
