#include "graphsat/term.hpp"

#include <stdexcept>

namespace graphsat {

Term Term::sym(Label l) {
  return Term(std::make_shared<Node>(Node{Kind::Sym, std::move(l), nullptr, nullptr}));
}

Term Term::converse(Term t) {
  return Term(std::make_shared<Node>(Node{Kind::Converse, Label(), std::move(t.node_), nullptr}));
}

Term Term::compose(Term a, Term b) {
  return Term(
      std::make_shared<Node>(Node{Kind::Compose, Label(), std::move(a.node_), std::move(b.node_)}));
}

Term Term::intersect(Term a, Term b) {
  return Term(std::make_shared<Node>(
      Node{Kind::Intersect, Label(), std::move(a.node_), std::move(b.node_)}));
}

const Label& Term::symbol() const {
  if (node_->kind != Kind::Sym) throw std::logic_error("symbol() on a non-symbol term");
  return node_->sym;
}

Term Term::operand() const {
  if (node_->kind != Kind::Converse) throw std::logic_error("operand() on a non-converse term");
  return Term(node_->a);
}

Term Term::left() const {
  if (node_->kind != Kind::Compose && node_->kind != Kind::Intersect)
    throw std::logic_error("left() on a non-binary term");
  return Term(node_->a);
}

Term Term::right() const {
  if (node_->kind != Kind::Compose && node_->kind != Kind::Intersect)
    throw std::logic_error("right() on a non-binary term");
  return Term(node_->b);
}

std::size_t Term::operator_count() const {
  switch (kind()) {
    case Kind::Sym: return 0;
    case Kind::Converse: return 1 + operand().operator_count();
    default: return 1 + left().operator_count() + right().operator_count();
  }
}

std::size_t Term::depth() const {
  switch (kind()) {
    case Kind::Sym: return 0;
    case Kind::Converse: return 1 + operand().depth();
    default: return 1 + std::max(left().depth(), right().depth());
  }
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Sym: return symbol() == o.symbol();
    case Kind::Converse: return operand() == o.operand();
    default: return left() == o.left() && right() == o.right();
  }
}

void Term::collect_labels(std::set<Label>& out) const {
  switch (kind()) {
    case Kind::Sym: out.insert(symbol()); return;
    case Kind::Converse: operand().collect_labels(out); return;
    default:
      left().collect_labels(out);
      right().collect_labels(out);
      return;
  }
}

std::string print_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Sym: return t.symbol().to_string();
    case Term::Kind::Converse: return "(" + print_term(t.operand()) + "~)";
    case Term::Kind::Compose:
      return "(" + print_term(t.left()) + " ; " + print_term(t.right()) + ")";
    case Term::Kind::Intersect:
      return "(" + print_term(t.left()) + " & " + print_term(t.right()) + ")";
  }
  return "";
}

namespace {

// Binding strength: intersection 1, composition 2, converse 3, symbol 4.
int precedence(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Sym: return 4;
    case Term::Kind::Converse: return 3;
    case Term::Kind::Compose: return 2;
    case Term::Kind::Intersect: return 1;
  }
  return 4;
}

std::string display(const Term& t, int context, bool right_operand) {
  int p = precedence(t);
  std::string s;
  switch (t.kind()) {
    case Term::Kind::Sym: s = t.symbol().to_string(); break;
    case Term::Kind::Converse: s = display(t.operand(), p, false) + "~"; break;
    case Term::Kind::Compose:
      s = display(t.left(), p, false) + " ; " + display(t.right(), p, true);
      break;
    case Term::Kind::Intersect:
      s = display(t.left(), p, false) + " & " + display(t.right(), p, true);
      break;
  }
  // Both infix operators associate to the left, so an equal-strength right
  // operand still needs parentheses.
  if (p < context || (p == context && right_operand)) return "(" + s + ")";
  return s;
}

}  // namespace

std::string display_term(const Term& t) { return display(t, 0, false); }

std::string display_sentence(const Sentence& s) {
  const char* op = s.kind == Sentence::Kind::Eq ? " = " : " <= ";
  return display_term(s.lhs) + op + display_term(s.rhs);
}

namespace {

void collect_from_sentence(const Sentence& s, std::set<Label>& labels) {
  s.lhs.collect_labels(labels);
  s.rhs.collect_labels(labels);
}

}  // namespace

Theory Theory::from_sentences(std::vector<Sentence> sentences) {
  Theory t;
  t.sentences = std::move(sentences);
  std::set<Label> labels;
  for (const Sentence& s : t.sentences) collect_from_sentence(s, labels);
  for (const Label& l : labels) {
    if (l.kind() == LabelKind::Atom) t.atoms.insert(l);
    if (l.kind() == LabelKind::Const) t.constants.insert(l.name());
  }
  return t;
}

bool Theory::mentions_goal() const {
  std::set<Label> labels;
  for (const Sentence& s : sentences) collect_from_sentence(s, labels);
  return labels.count(Label::goal()) != 0;
}

}  // namespace graphsat
