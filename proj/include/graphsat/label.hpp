#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace graphsat {

/// Relation symbols: user atoms, the builtins id/top/bot, named constants,
/// and the reserved goal label used by the entailment reduction.
enum class LabelKind : std::uint8_t { Id, Top, Bot, Goal, Atom, Const };

class Label {
 public:
  Label() = default;  // defaults to id

  static Label id() { return Label(LabelKind::Id, ""); }
  static Label top() { return Label(LabelKind::Top, ""); }
  static Label bot() { return Label(LabelKind::Bot, ""); }
  static Label goal() { return Label(LabelKind::Goal, ""); }
  static Label atom(std::string name);      // validated identifier
  static Label constant(std::string name);  // nonempty, no quote chars

  LabelKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_builtin() const {
    return kind_ == LabelKind::Id || kind_ == LabelKind::Top || kind_ == LabelKind::Bot;
  }

  /// Concrete form: "id", "top", "bot", "$goal", "'Name'" or a bare identifier.
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on malformed input.
  static Label from_string(std::string_view text);

  // Total order: variant rank, then name. Keeps every iteration deterministic.
  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

 private:
  Label(LabelKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  LabelKind kind_ = LabelKind::Id;
  std::string name_;
};

/// True for [A-Za-z_][A-Za-z0-9_]* that is not a reserved word.
bool is_valid_atom_name(std::string_view name);

}  // namespace graphsat
