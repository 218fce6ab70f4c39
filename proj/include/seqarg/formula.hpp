#ifndef SEQARG_FORMULA_HPP
#define SEQARG_FORMULA_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace seqarg {

enum class Connective : std::uint8_t { Atom, Not, And, Or, Implies, Iff };

// Immutable propositional formula over atoms with ~, &, |, -> and <->.
//
// Nodes are shared, so copies are cheap. Every node caches its canonical
// serialization; since parse(str()) reproduces the formula exactly, two
// formulas are structurally equal iff their serializations are equal, and the
// canonical order used throughout the library is the lexicographic order of
// serializations.
class Formula {
 public:
  // Throws PreconditionError if `name` does not match [a-z][a-z0-9_]*.
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula biconditional(Formula left, Formula right);

  Connective connective() const noexcept;
  bool is_atom() const noexcept { return connective() == Connective::Atom; }

  // Atom name; empty for compound formulas.
  const std::string& name() const noexcept;
  // Operand of a negation.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;

  // Canonical serialization in the input grammar with minimal parentheses.
  const std::string& str() const noexcept;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

  friend bool operator==(const Formula& a, const Formula& b) noexcept {
    return a.node_ == b.node_ || a.str() == b.str();
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
    return a.str() <=> b.str();
  }

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Connective c, Formula left, Formula right);

  std::shared_ptr<const Node> node_;
};

// Parses the grammar
//   formula := iff ; iff := impl ('<->' iff)? ; impl := or ('->' impl)? ;
//   or := and ('|' and)* ; and := unary ('&' unary)* ;
//   unary := '~' unary | '(' formula ')' | atom ; atom := [a-z][a-z0-9_]*
// Throws ParseError carrying the byte offset of the offending token.
Formula parse(std::string_view text);

bool is_valid_atom_name(std::string_view name) noexcept;

}  // namespace seqarg

template <>
struct std::hash<seqarg::Formula> {
  std::size_t operator()(const seqarg::Formula& f) const noexcept {
    return std::hash<std::string>{}(f.str());
  }
};

#endif  // SEQARG_FORMULA_HPP
