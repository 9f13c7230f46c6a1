#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphsat/term.hpp"

namespace graphsat {
namespace corpus {

struct CFG {
  std::set<std::string> nonterminals;
  std::set<std::string> terminals;
  std::vector<std::pair<std::string, std::vector<std::string>>> productions;
  std::string start;

  /// start in nonterminals, symbols drawn from the declared sets,
  /// nonterminals and terminals disjoint, no empty right-hand sides.
  /// Throws std::invalid_argument naming the offending symbol.
  void validate() const;
};

/// Theory that is consistent exactly when the two grammars generate disjoint
/// languages: one subsumption per production, a successor rule per terminal,
/// and a final rule forbidding a common parse from the empty-word constant.
Theory encode_cfg_intersection(const CFG& g1, const CFG& g2);

/// Text format: one production per line, `S -> a S b`; `#` comments.
/// The first left-hand side is the start symbol; symbols never appearing on
/// a left-hand side are the terminals.
CFG parse_cfg(std::string_view text);

struct TheoryLimits {
  unsigned max_atoms = 4;
  unsigned max_constants = 2;
  unsigned max_sentences = 5;
  unsigned max_term_depth = 3;
};

/// Deterministic pseudo-random theory; identical output for identical
/// arguments on every platform.
Theory generate_random_theory(std::uint64_t seed, const TheoryLimits& limits = {});

// The worked examples used across the test suites.
namespace fixtures {
inline constexpr std::string_view kRoommates = "r = i ; i~\ni~ ; i <= id\n";
inline constexpr std::string_view kRoommatesLoose = "r = i ; i~\n";
inline constexpr std::string_view kLizJon =
    "r = i ; i~\ni~ ; i <= id\n'Liz' ; top ; 'Jon' <= r\n";
inline constexpr std::string_view kLizJonFull =
    "r = i ; i~\ni~ ; i <= id\n'Liz' ; top ; 'Jon' <= r\n"
    "'Liz' ; top ; 'Batcave' <= i\n'Jon' ; top ; 'Room 11' <= i\n";
inline constexpr std::string_view kGrow = "l <= l ; l\n";
inline constexpr std::string_view kTransitivityGoal = "r ; r <= r";

Theory roommates();
Theory roommates_loose();
Theory liz_jon();
Theory liz_jon_full();
Theory grow();
Sentence transitivity_goal();
}  // namespace fixtures

}  // namespace corpus
}  // namespace graphsat
