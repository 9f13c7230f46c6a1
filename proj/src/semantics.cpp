#include "graphsat/semantics.hpp"

#include <algorithm>
#include <map>

namespace graphsat {

PairSet eval_semantics(const Term& e, const Graph& g) {
  switch (e.kind()) {
    case Term::Kind::Sym: {
      PairSet out;
      for (const auto& p : g.label_pairs(e.symbol())) out.insert(p);
      return out;
    }
    case Term::Kind::Intersect: {
      PairSet a = eval_semantics(e.left(), g);
      PairSet b = eval_semantics(e.right(), g);
      PairSet out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::inserter(out, out.end()));
      return out;
    }
    case Term::Kind::Converse: {
      PairSet out;
      for (const auto& [x, y] : eval_semantics(e.operand(), g)) out.emplace(y, x);
      return out;
    }
    case Term::Kind::Compose: {
      PairSet a = eval_semantics(e.left(), g);
      PairSet b = eval_semantics(e.right(), g);
      std::map<VertexId, std::vector<VertexId>> by_src;
      for (const auto& [z, y] : b) by_src[z].push_back(y);
      PairSet out;
      for (const auto& [x, z] : a) {
        auto it = by_src.find(z);
        if (it == by_src.end()) continue;
        for (VertexId y : it->second) out.emplace(x, y);
      }
      return out;
    }
  }
  return {};
}

bool holds(const Sentence& s, const Graph& g) {
  PairSet lhs = eval_semantics(s.lhs, g);
  PairSet rhs = eval_semantics(s.rhs, g);
  if (s.kind == Sentence::Kind::Eq) return lhs == rhs;
  return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

std::vector<std::pair<Term, Term>> normalize_to_subsumptions(const Theory& t) {
  std::vector<std::pair<Term, Term>> out;
  for (const Sentence& s : t.sentences) {
    out.emplace_back(s.lhs, s.rhs);
    if (s.kind == Sentence::Kind::Eq) out.emplace_back(s.rhs, s.lhs);
  }
  return out;
}

}  // namespace graphsat
