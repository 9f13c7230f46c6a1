#include "graphsat/translate.hpp"

#include <stdexcept>

#include "graphsat/semantics.hpp"

namespace graphsat {

Graph translate_term(const Term& e) {
  switch (e.kind()) {
    case Term::Kind::Sym:
      return Graph({0, 1}, {Edge{e.symbol(), 0, 1}});
    case Term::Kind::Converse: {
      Graph inner = translate_term(e.operand());
      return relabel([](VertexId v) { return v < 2 ? 1 - v : v; }, inner);
    }
    case Term::Kind::Compose: {
      Graph g1 = translate_term(e.left());
      Graph g2 = translate_term(e.right());
      VertexId m2 = static_cast<VertexId>(g2.vertex_count());
      Graph left = relabel([m2](VertexId v) { return v == 0 ? 0 : v + m2 - 1; }, g1);
      Graph right = relabel([m2](VertexId v) { return v == 0 ? m2 : v; }, g2);
      return graph_union(left, right);
    }
    case Term::Kind::Intersect: {
      Graph g1 = translate_term(e.left());
      Graph g2 = translate_term(e.right());
      VertexId m1 = static_cast<VertexId>(g1.vertex_count());
      Graph right = relabel([m1](VertexId v) { return v < 2 ? v : v + m1 - 2; }, g2);
      return graph_union(g1, right);
    }
  }
  return Graph();
}

GraphRule translate_subsumption(const Term& el, const Term& er) {
  GraphRule rule;
  rule.lhs = translate_term(el);
  rule.rhs = translate_term(Term::intersect(el, er));
  rule.origin = display_term(el) + " <= " + display_term(er);
  if (!is_subgraph(rule.lhs, rule.rhs))
    throw std::logic_error("translation bug: lhs is not a subgraph of rhs for " + rule.origin);
  return rule;
}

namespace {

GraphRule named(GraphRule rule, std::string origin) {
  rule.origin = std::move(origin);
  return rule;
}

}  // namespace

std::vector<GraphRule> standard_rules(const std::set<Label>& labels,
                                      const std::set<std::string>& constants) {
  for (const Label& required : {Label::id(), Label::top(), Label::bot()})
    if (labels.count(required) == 0)
      throw std::invalid_argument("standard_rules: label set misses " + required.to_string());
  for (const std::string& c : constants)
    if (labels.count(Label::constant(c)) == 0)
      throw std::invalid_argument("standard_rules: label set misses constant '" + c + "'");

  const Term id = Term::sym(Label::id());
  const Term top = Term::sym(Label::top());
  const Term bot = Term::sym(Label::bot());

  std::vector<GraphRule> rules;
  rules.push_back({Graph({0, 1}, {}), Graph({0, 1}, {Edge{Label::top(), 0, 1}}), "top-rule", 0});
  rules.push_back({Graph(), Graph({0}, {}), "nonempty-rule", 0});
  rules.push_back(
      {Graph({0}, {}), Graph({0}, {Edge{Label::id(), 0, 0}}), "identity-rule-1", 0});
  rules.push_back(named(translate_subsumption(Term::converse(id), id), "identity-rule-2"));
  rules.push_back(named(translate_subsumption(Term::compose(id, id), id), "identity-rule-3"));
  for (const Label& l : labels) {
    Term sym = Term::sym(l);
    rules.push_back(named(translate_subsumption(Term::compose(Term::compose(id, sym), id), sym),
                          "identity-rule-4(" + l.to_string() + ")"));
  }
  for (const std::string& name : constants) {
    Term c = Term::sym(Label::constant(name));
    rules.push_back(named(translate_subsumption(top, Term::compose(Term::compose(top, c), top)),
                          "constant-rule-5('" + name + "')"));
  }
  for (const std::string& name : constants) {
    Term c = Term::sym(Label::constant(name));
    rules.push_back(named(translate_subsumption(Term::compose(Term::compose(c, top), c), c),
                          "constant-rule-6('" + name + "')"));
  }
  for (const std::string& name : constants) {
    Term c = Term::sym(Label::constant(name));
    rules.push_back(named(translate_subsumption(c, id), "constant-rule-7('" + name + "')"));
  }
  for (const std::string& n1 : constants) {
    for (const std::string& n2 : constants) {
      if (n1 == n2) continue;
      Term c1 = Term::sym(Label::constant(n1));
      Term c2 = Term::sym(Label::constant(n2));
      rules.push_back(named(translate_subsumption(Term::compose(c1, c2), bot),
                            "constant-rule-8('" + n1 + "','" + n2 + "')"));
    }
  }
  for (std::size_t i = 0; i < rules.size(); ++i) rules[i].index = i;
  return rules;
}

RuleSet compile_theory(const Theory& t, bool goal_label_in_use) {
  if (!goal_label_in_use && t.mentions_goal())
    throw std::invalid_argument("theory uses the reserved goal label");

  RuleSet rs;
  rs.constants = t.constants;
  rs.labels = {Label::id(), Label::top(), Label::bot()};
  for (const Label& a : t.atoms) rs.labels.insert(a);
  for (const std::string& c : t.constants) rs.labels.insert(Label::constant(c));
  if (goal_label_in_use) rs.labels.insert(Label::goal());

  rs.rules = standard_rules(rs.labels, rs.constants);
  for (const auto& [el, er] : normalize_to_subsumptions(t))
    rs.rules.push_back(translate_subsumption(el, er));
  for (std::size_t i = 0; i < rs.rules.size(); ++i) rs.rules[i].index = i;
  return rs;
}

}  // namespace graphsat
