#include "graphsat/label.hpp"

#include <cctype>
#include <stdexcept>

namespace graphsat {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !is_ident_start(name[0])) return false;
  for (char c : name)
    if (!is_ident_char(c)) return false;
  return name != "id" && name != "top" && name != "bot";
}

Label Label::atom(std::string name) {
  if (!is_valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  return Label(LabelKind::Atom, std::move(name));
}

Label Label::constant(std::string name) {
  if (name.empty()) throw std::invalid_argument("constant name must be nonempty");
  if (name.find('\'') != std::string::npos)
    throw std::invalid_argument("constant name must not contain a quote: " + name);
  return Label(LabelKind::Const, std::move(name));
}

std::string Label::to_string() const {
  switch (kind_) {
    case LabelKind::Id: return "id";
    case LabelKind::Top: return "top";
    case LabelKind::Bot: return "bot";
    case LabelKind::Goal: return "$goal";
    case LabelKind::Atom: return name_;
    case LabelKind::Const: return "'" + name_ + "'";
  }
  return "";
}

Label Label::from_string(std::string_view text) {
  if (text == "id") return id();
  if (text == "top") return top();
  if (text == "bot") return bot();
  if (text == "$goal") return goal();
  if (text.size() >= 3 && text.front() == '\'' && text.back() == '\'')
    return constant(std::string(text.substr(1, text.size() - 2)));
  if (is_valid_atom_name(text)) return atom(std::string(text));
  throw std::invalid_argument("malformed label: '" + std::string(text) + "'");
}

}  // namespace graphsat
