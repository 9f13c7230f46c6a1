#include "graphsat/procedures.hpp"

#include <stdexcept>

namespace graphsat {

namespace {

Graph strip_goal_edges(const Graph& g) {
  Graph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  g.for_each_edge([&](const Edge& e) {
    if (e.label.kind() != LabelKind::Goal) out.add_edge(e);
  });
  return out;
}

bool sentence_mentions_goal(const Sentence& s) {
  std::set<Label> labels;
  s.lhs.collect_labels(labels);
  s.rhs.collect_labels(labels);
  return labels.count(Label::goal()) != 0;
}

/// Saturation for one subsumption direction e1 <= e2 of the goal.
struct DirectionResult {
  SaturationResult sat;
  std::optional<StandardModel> countermodel;
  std::optional<std::pair<std::string, std::string>> witness;
};

DirectionResult run_direction(const Theory& t, const Term& e1, const Term& e2,
                              std::uint64_t budget) {
  std::vector<Sentence> sentences = t.sentences;
  Term goal = Term::sym(Label::goal());
  sentences.push_back(Sentence::sub(goal, e1));
  sentences.push_back(Sentence::sub(Term::intersect(e2, goal), Term::sym(Label::bot())));
  RuleSet rules = compile_theory(Theory::from_sentences(std::move(sentences)), true);

  Graph start({0, 1}, {Edge{Label::goal(), 0, 1}});
  DirectionResult result{saturate(ChainState::from_graph(std::move(start)), rules, budget), {}, {}};

  if (result.sat.outcome == Outcome::Fixpoint) {
    StandardModel model =
        extract_standard_model(strip_goal_edges(result.sat.final_state.graph), t.constants);
    result.witness = {model.name_of_original(0), model.name_of_original(1)};
    result.countermodel = std::move(model);
  }
  return result;
}

}  // namespace

ConsistencyVerdict check_consistency(const Theory& t, std::uint64_t budget) {
  RuleSet rules = compile_theory(t, false);
  SaturationResult sat = saturate(ChainState::empty(), rules, budget);
  switch (sat.outcome) {
    case Outcome::Conflict:
      return {ConsistencyVerdict::Kind::Inconsistent, std::nullopt, sat.conflict_witness,
              std::move(sat.final_state)};
    case Outcome::Fixpoint: {
      StandardModel model = extract_standard_model(sat.final_state.graph, t.constants);
      return {ConsistencyVerdict::Kind::Consistent, std::move(model), std::nullopt,
              std::move(sat.final_state)};
    }
    case Outcome::BudgetExhausted:
      return {ConsistencyVerdict::Kind::Unknown, std::nullopt, std::nullopt,
              std::move(sat.final_state)};
  }
  throw std::logic_error("unreachable");
}

EntailmentVerdict check_entailment(const Theory& t, const Sentence& goal, std::uint64_t budget) {
  if (t.mentions_goal() || sentence_mentions_goal(goal))
    throw std::invalid_argument("the goal label $goal is reserved");

  std::vector<std::pair<Term, Term>> directions;
  directions.emplace_back(goal.lhs, goal.rhs);
  if (goal.kind == Sentence::Kind::Eq) directions.emplace_back(goal.rhs, goal.lhs);

  std::vector<std::uint64_t> budgets;
  if (directions.size() == 1) {
    budgets = {budget};
  } else {
    budgets = {budget / 2, budget - budget / 2};
  }

  EntailmentVerdict verdict;
  verdict.kind = EntailmentVerdict::Kind::Entailed;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const auto& [e1, e2] = directions[i];
    DirectionResult r = run_direction(t, e1, e2, budgets[i]);
    verdict.runs.push_back(
        {display_term(e1) + " <= " + display_term(e2), std::move(r.sat.final_state)});
    if (r.sat.outcome == Outcome::Fixpoint) {
      verdict.kind = EntailmentVerdict::Kind::NotEntailed;
      verdict.countermodel = std::move(r.countermodel);
      verdict.witness = std::move(r.witness);
      return verdict;  // one falsified direction settles the goal
    }
    if (r.sat.outcome == Outcome::BudgetExhausted)
      verdict.kind = EntailmentVerdict::Kind::Unknown;
  }
  return verdict;
}

std::optional<bool> self_check_lemma2(const Theory& t, std::uint64_t budget) {
  ConsistencyVerdict consistency = check_consistency(t, budget);
  if (consistency.kind == ConsistencyVerdict::Kind::Unknown) return std::nullopt;
  Sentence goal = Sentence::sub(Term::sym(Label::top()), Term::sym(Label::bot()));
  EntailmentVerdict entailment = check_entailment(t, goal, budget);
  if (entailment.kind == EntailmentVerdict::Kind::Unknown) return std::nullopt;
  bool consistent = consistency.kind == ConsistencyVerdict::Kind::Consistent;
  bool not_entailed = entailment.kind == EntailmentVerdict::Kind::NotEntailed;
  return consistent == not_entailed;
}

}  // namespace graphsat
