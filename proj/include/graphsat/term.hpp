#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "graphsat/label.hpp"

namespace graphsat {

/// Relational term: a relation symbol, or converse / composition /
/// intersection applied to terms. Immutable; cheap to copy.
class Term {
 public:
  enum class Kind { Sym, Converse, Compose, Intersect };

  static Term sym(Label l);
  static Term converse(Term t);
  static Term compose(Term a, Term b);
  static Term intersect(Term a, Term b);

  Kind kind() const { return node_->kind; }
  const Label& symbol() const;  // Kind::Sym
  Term operand() const;         // Kind::Converse
  Term left() const;            // Compose / Intersect
  Term right() const;

  /// Number of operator nodes (Converse/Compose/Intersect).
  std::size_t operator_count() const;
  /// Height of the tree; a bare symbol has depth 0.
  std::size_t depth() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  /// Collects every label occurring at the leaves into `out`.
  void collect_labels(std::set<Label>& out) const;

 private:
  struct Node {
    Kind kind;
    Label sym;
    std::shared_ptr<const Node> a, b;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Fully parenthesized concrete syntax; parse_term round-trips it.
std::string print_term(const Term& t);
/// Concrete syntax with minimal parentheses; also round-trips.
std::string display_term(const Term& t);

struct Sentence {
  enum class Kind { Eq, Sub };
  Kind kind;
  Term lhs, rhs;

  static Sentence eq(Term a, Term b) { return {Kind::Eq, std::move(a), std::move(b)}; }
  static Sentence sub(Term a, Term b) { return {Kind::Sub, std::move(a), std::move(b)}; }
};

std::string display_sentence(const Sentence& s);

/// A list of sentences plus the atoms and constants they mention.
struct Theory {
  std::vector<Sentence> sentences;
  std::set<std::string> constants;  // constant names, ascending
  std::set<Label> atoms;            // Atom labels, ascending

  static Theory from_sentences(std::vector<Sentence> sentences);
  /// True when some term mentions the reserved goal label.
  bool mentions_goal() const;
};

}  // namespace graphsat
