#include "graphsat/corpus.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "graphsat/parser.hpp"

namespace graphsat {
namespace corpus {

void CFG::validate() const {
  if (nonterminals.count(start) == 0)
    throw std::invalid_argument("start symbol '" + start + "' is not a nonterminal");
  for (const std::string& n : nonterminals)
    if (terminals.count(n) != 0)
      throw std::invalid_argument("symbol '" + n + "' is both terminal and nonterminal");
  for (const auto& [head, body] : productions) {
    if (nonterminals.count(head) == 0)
      throw std::invalid_argument("production head '" + head + "' is not a nonterminal");
    if (body.empty())
      throw std::invalid_argument("production for '" + head + "' has an empty right-hand side");
    for (const std::string& sym : body)
      if (nonterminals.count(sym) == 0 && terminals.count(sym) == 0)
        throw std::invalid_argument("production symbol '" + sym + "' is undeclared");
  }
}

namespace {

Term atom_term(const std::string& name) { return Term::sym(Label::atom(name)); }

Term compose_all(const std::vector<std::string>& symbols) {
  Term t = atom_term(symbols.front());
  for (std::size_t i = 1; i < symbols.size(); ++i)
    t = Term::compose(std::move(t), atom_term(symbols[i]));
  return t;
}

}  // namespace

Theory encode_cfg_intersection(const CFG& g1, const CFG& g2) {
  g1.validate();
  g2.validate();
  for (const std::string& n : g1.nonterminals)
    if (g2.nonterminals.count(n) != 0)
      throw std::invalid_argument("nonterminal '" + n + "' appears in both grammars");
  std::set<std::string> terminals = g1.terminals;
  terminals.insert(g2.terminals.begin(), g2.terminals.end());
  for (const std::string& t : terminals)
    if (g1.nonterminals.count(t) != 0 || g2.nonterminals.count(t) != 0)
      throw std::invalid_argument("symbol '" + t + "' is a terminal of one grammar and a "
                                  "nonterminal of the other");

  std::vector<Sentence> sentences;
  for (const CFG* g : {&g1, &g2})
    for (const auto& [head, body] : g->productions)
      sentences.push_back(Sentence::sub(compose_all(body), atom_term(head)));
  for (const std::string& t : terminals)
    sentences.push_back(Sentence::sub(
        Term::sym(Label::id()),
        Term::compose(atom_term(t), Term::converse(atom_term(t)))));

  Term eps = Term::sym(Label::constant("eps"));
  Term common = Term::compose(
      Term::compose(Term::compose(eps, atom_term(g1.start)), Term::converse(atom_term(g2.start))),
      eps);
  sentences.push_back(Sentence::sub(std::move(common), Term::sym(Label::bot())));

  return Theory::from_sentences(std::move(sentences));
}

CFG parse_cfg(std::string_view text) {
  CFG g;
  std::set<std::string> heads;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (row >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens[1] != "->")
      throw std::runtime_error("grammar line " + std::to_string(lineno) +
                               ": expected 'HEAD -> SYMBOL...'");
    if (tokens.size() == 2)
      throw std::runtime_error("grammar line " + std::to_string(lineno) +
                               ": empty right-hand sides are not supported");
    for (const std::string& sym : tokens)
      if (sym != "->" && !is_valid_atom_name(sym))
        throw std::runtime_error("grammar line " + std::to_string(lineno) +
                                 ": invalid symbol '" + sym + "'");
    heads.insert(tokens[0]);
    seen.insert(tokens[0]);
    std::vector<std::string> body(tokens.begin() + 2, tokens.end());
    for (const std::string& sym : body) seen.insert(sym);
    if (g.start.empty()) g.start = tokens[0];
    g.productions.emplace_back(tokens[0], std::move(body));
  }
  if (g.productions.empty()) throw std::runtime_error("grammar has no productions");
  g.nonterminals = heads;
  for (const std::string& sym : seen)
    if (heads.count(sym) == 0) g.terminals.insert(sym);
  g.validate();
  return g;
}

namespace {

// mt19937 is fully pinned by the standard; the modulo mapping keeps the
// generated theories bit-stable across platforms.
std::uint32_t below(std::mt19937& rng, std::uint32_t n) { return n == 0 ? 0 : rng() % n; }

Term random_term(std::mt19937& rng, const std::vector<Label>& leaves, unsigned depth) {
  if (depth == 0 || below(rng, 3) == 0)
    return Term::sym(leaves[below(rng, static_cast<std::uint32_t>(leaves.size()))]);
  switch (below(rng, 3)) {
    case 0: return Term::converse(random_term(rng, leaves, depth - 1));
    case 1:
      return Term::compose(random_term(rng, leaves, depth - 1),
                           random_term(rng, leaves, depth - 1));
    default:
      return Term::intersect(random_term(rng, leaves, depth - 1),
                             random_term(rng, leaves, depth - 1));
  }
}

}  // namespace

Theory generate_random_theory(std::uint64_t seed, const TheoryLimits& limits) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (seed >> 32) ^ 0x9e3779b9u));

  static const char* kAtomNames[] = {"a", "b", "c", "d"};
  static const char* kConstNames[] = {"A", "B"};
  unsigned atoms = limits.max_atoms == 0 ? 0 : 1 + below(rng, limits.max_atoms);
  unsigned consts = below(rng, limits.max_constants + 1);
  atoms = std::min<unsigned>(atoms, 4);
  consts = std::min<unsigned>(consts, 2);

  std::vector<Label> lhs_leaves;
  for (unsigned i = 0; i < atoms; ++i) lhs_leaves.push_back(Label::atom(kAtomNames[i]));
  for (unsigned i = 0; i < consts; ++i) lhs_leaves.push_back(Label::constant(kConstNames[i]));
  lhs_leaves.push_back(Label::id());
  lhs_leaves.push_back(Label::top());

  // Half of the seeds may use bot on right-hand sides, which balances
  // consistent and inconsistent instances.
  std::vector<Label> rhs_leaves = lhs_leaves;
  if (below(rng, 2) == 0) rhs_leaves.push_back(Label::bot());

  unsigned sentences = below(rng, limits.max_sentences + 1);
  std::vector<Sentence> out;
  for (unsigned i = 0; i < sentences; ++i) {
    Term lhs = random_term(rng, lhs_leaves, limits.max_term_depth);
    Term rhs = random_term(rng, rhs_leaves, limits.max_term_depth);
    if (below(rng, 3) == 0)
      out.push_back(Sentence::eq(std::move(lhs), std::move(rhs)));
    else
      out.push_back(Sentence::sub(std::move(lhs), std::move(rhs)));
  }
  return Theory::from_sentences(std::move(out));
}

namespace fixtures {

Theory roommates() { return parse_theory(kRoommates); }
Theory roommates_loose() { return parse_theory(kRoommatesLoose); }
Theory liz_jon() { return parse_theory(kLizJon); }
Theory liz_jon_full() { return parse_theory(kLizJonFull); }
Theory grow() { return parse_theory(kGrow); }
Sentence transitivity_goal() { return parse_sentence(kTransitivityGoal); }

}  // namespace fixtures

}  // namespace corpus
}  // namespace graphsat
