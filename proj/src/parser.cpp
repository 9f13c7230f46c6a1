#include "graphsat/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace graphsat {

namespace {

enum class Tok { Ident, Quoted, Semi, Amp, Tilde, LParen, RParen, Eq, Le, End };

struct Token {
  Tok type;
  std::string text;
  int column;  // 1-based
};

class Lexer {
 public:
  Lexer(std::string_view text, int line) : text_(text), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      int col = static_cast<int>(pos_) + 1;
      if (pos_ >= text_.size() || text_[pos_] == '#') {
        out.push_back({Tok::End, "", col});
        return out;
      }
      char c = text_[pos_];
      if (c == ';') { out.push_back({Tok::Semi, ";", col}); ++pos_; continue; }
      if (c == '&') { out.push_back({Tok::Amp, "&", col}); ++pos_; continue; }
      if (c == '~') { out.push_back({Tok::Tilde, "~", col}); ++pos_; continue; }
      if (c == '(') { out.push_back({Tok::LParen, "(", col}); ++pos_; continue; }
      if (c == ')') { out.push_back({Tok::RParen, ")", col}); ++pos_; continue; }
      if (c == '=') { out.push_back({Tok::Eq, "=", col}); ++pos_; continue; }
      if (c == '<') {
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
          out.push_back({Tok::Le, "<=", col});
          pos_ += 2;
          continue;
        }
        throw ParseError("expected '<=' after '<'", line_, col);
      }
      if (c == '\'') {
        std::size_t end = text_.find('\'', pos_ + 1);
        if (end == std::string_view::npos)
          throw ParseError("unterminated constant quote", line_, col);
        std::string name(text_.substr(pos_ + 1, end - pos_ - 1));
        if (name.empty()) throw ParseError("constant name must be nonempty", line_, col);
        out.push_back({Tok::Quoted, std::move(name), col});
        pos_ = end + 1;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
          ++pos_;
        out.push_back({Tok::Ident, std::string(text_.substr(start, pos_ - start)), col});
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

class TermParser {
 public:
  TermParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  Term parse_full_term() {
    Term t = intersection();
    expect_end();
    return t;
  }

  Sentence parse_full_sentence() {
    Term lhs = intersection();
    const Token& t = peek();
    Sentence::Kind kind;
    if (t.type == Tok::Eq) kind = Sentence::Kind::Eq;
    else if (t.type == Tok::Le) kind = Sentence::Kind::Sub;
    else throw ParseError("expected '=' or '<='", line_, t.column);
    ++pos_;
    Term rhs = intersection();
    expect_end();
    return {kind, std::move(lhs), std::move(rhs)};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void expect_end() {
    if (peek().type != Tok::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'", line_, peek().column);
  }

  Term intersection() {
    Term t = composition();
    while (peek().type == Tok::Amp) {
      ++pos_;
      t = Term::intersect(std::move(t), composition());
    }
    return t;
  }

  Term composition() {
    Term t = postfix();
    while (peek().type == Tok::Semi) {
      ++pos_;
      t = Term::compose(std::move(t), postfix());
    }
    return t;
  }

  Term postfix() {
    Term t = primary();
    while (peek().type == Tok::Tilde) {
      ++pos_;
      t = Term::converse(std::move(t));
    }
    return t;
  }

  Term primary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Ident: {
        ++pos_;
        if (t.text == "id") return Term::sym(Label::id());
        if (t.text == "top") return Term::sym(Label::top());
        if (t.text == "bot") return Term::sym(Label::bot());
        return Term::sym(Label::atom(t.text));
      }
      case Tok::Quoted:
        ++pos_;
        return Term::sym(Label::constant(t.text));
      case Tok::LParen: {
        ++pos_;
        Term inner = intersection();
        if (peek().type != Tok::RParen)
          throw ParseError("expected ')'", line_, peek().column);
        ++pos_;
        return inner;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", line_, t.column);
      default:
        throw ParseError("unexpected token '" + t.text + "'", line_, t.column);
    }
  }

  std::vector<Token> tokens_;
  int line_;
  std::size_t pos_ = 0;
};

bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Term parse_term(std::string_view text) {
  return TermParser(Lexer(text, 1).run(), 1).parse_full_term();
}

Sentence parse_sentence(std::string_view text, int line) {
  return TermParser(Lexer(text, line).run(), line).parse_full_sentence();
}

Theory parse_theory(std::string_view text) {
  std::vector<Sentence> sentences;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view row =
        text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    ++line;
    if (!blank_or_comment(row)) sentences.push_back(parse_sentence(row, line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Theory::from_sentences(std::move(sentences));
}

Theory parse_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open theory file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str());
}

}  // namespace graphsat
