#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "graphsat/term.hpp"

namespace graphsat {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Grammar, loosest to tightest: `&` (intersection), `;` (composition),
/// postfix `~` (converse); both infix operators associate to the left.
/// Atoms are identifiers, constants are 'single-quoted', and `id`, `top`,
/// `bot` are reserved symbols.
Term parse_term(std::string_view text);

/// `TERM = TERM` or `TERM <= TERM`. `line` seeds error positions.
Sentence parse_sentence(std::string_view text, int line = 1);

/// One sentence per line; `#` starts a comment; blank lines are ignored.
Theory parse_theory(std::string_view text);

/// Reads and parses a `.rel` file; throws std::runtime_error on I/O failure.
Theory parse_theory_file(const std::string& path);

}  // namespace graphsat
