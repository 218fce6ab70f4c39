#include "seqarg/formula.hpp"

#include <cctype>
#include <vector>

#include "seqarg/error.hpp"

namespace seqarg {

struct Formula::Node {
  Connective connective;
  std::string name;
  std::vector<Formula> children;
  std::string text;
};

namespace {

// Binding strength; larger binds tighter.
int precedence(Connective c) {
  switch (c) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not: return 5;
    case Connective::Atom: return 6;
  }
  return 0;
}

bool right_associative(Connective c) {
  return c == Connective::Implies || c == Connective::Iff;
}

const char* symbol(Connective c) {
  switch (c) {
    case Connective::And: return " & ";
    case Connective::Or: return " | ";
    case Connective::Implies: return " -> ";
    case Connective::Iff: return " <-> ";
    default: return "";
  }
}

std::string wrap(const Formula& f, bool parens) {
  return parens ? "(" + f.str() + ")" : f.str();
}

}  // namespace

namespace {

bool is_atom_tail(char ch) { return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_'; }

}  // namespace

bool is_valid_atom_name(std::string_view name) noexcept {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  for (char ch : name) {
    if (!is_atom_tail(ch)) return false;
  }
  return true;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) throw PreconditionError("invalid atom name '" + name + "'");
  auto node = std::make_shared<Node>();
  node->connective = Connective::Atom;
  node->text = name;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->connective = Connective::Not;
  node->text = "~" + wrap(operand, precedence(operand.connective()) < precedence(Connective::Not));
  node->children.push_back(std::move(operand));
  return Formula(std::move(node));
}

Formula Formula::binary(Connective c, Formula left, Formula right) {
  const int p = precedence(c);
  const int pl = precedence(left.connective());
  const int pr = precedence(right.connective());
  // A same-precedence child keeps its parentheses on the side the grammar does
  // not fold towards.
  const bool lp = right_associative(c) ? pl <= p : pl < p;
  const bool rp = right_associative(c) ? pr < p : pr <= p;
  auto node = std::make_shared<Node>();
  node->connective = c;
  node->text = wrap(left, lp) + symbol(c) + wrap(right, rp);
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula l, Formula r) { return binary(Connective::And, std::move(l), std::move(r)); }
Formula Formula::disjunction(Formula l, Formula r) { return binary(Connective::Or, std::move(l), std::move(r)); }
Formula Formula::implication(Formula l, Formula r) { return binary(Connective::Implies, std::move(l), std::move(r)); }
Formula Formula::biconditional(Formula l, Formula r) { return binary(Connective::Iff, std::move(l), std::move(r)); }

Connective Formula::connective() const noexcept { return node_->connective; }
const std::string& Formula::name() const noexcept { return node_->name; }
const std::string& Formula::str() const noexcept { return node_->text; }

const Formula& Formula::operand() const {
  if (connective() != Connective::Not) throw PreconditionError("operand() on a non-negation: " + str());
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (node_->children.size() != 2) throw PreconditionError("left() on a non-binary formula: " + str());
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() != 2) throw PreconditionError("right() on a non-binary formula: " + str());
  return node_->children[1];
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  if (is_atom()) {
    out.insert(name());
    return;
  }
  for (const auto& child : node_->children) child.collect_atoms(out);
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

namespace {

enum class Tok { Atom, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (true) {
      while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
      if (i >= text_.size()) {
        out.push_back({Tok::End, i, ""});
        return out;
      }
      const char ch = text_[i];
      if (ch >= 'a' && ch <= 'z') {
        std::size_t j = i + 1;
        while (j < text_.size() && is_atom_tail(text_[j])) ++j;
        out.push_back({Tok::Atom, i, std::string(text_.substr(i, j - i))});
        i = j;
        continue;
      }
      switch (ch) {
        case '~': out.push_back({Tok::Not, i, "~"}); ++i; continue;
        case '&': out.push_back({Tok::And, i, "&"}); ++i; continue;
        case '|': out.push_back({Tok::Or, i, "|"}); ++i; continue;
        case '(': out.push_back({Tok::LParen, i, "("}); ++i; continue;
        case ')': out.push_back({Tok::RParen, i, ")"}); ++i; continue;
        default: break;
      }
      if (text_.substr(i, 2) == "->") {
        out.push_back({Tok::Implies, i, "->"});
        i += 2;
        continue;
      }
      if (text_.substr(i, 3) == "<->") {
        out.push_back({Tok::Iff, i, "<->"});
        i += 3;
        continue;
      }
      throw ParseError(i, "atom, connective or parenthesis", "'" + std::string(1, ch) + "'");
    }
  }

 private:
  std::string_view text_;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = iff();
    if (peek().kind != Tok::End) {
      throw ParseError(peek().offset, "binary connective or end of input", describe(peek()));
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Formula iff() {
    Formula left = impl();
    if (accept(Tok::Iff)) return Formula::biconditional(std::move(left), iff());
    return left;
  }

  Formula impl() {
    Formula left = disj();
    if (accept(Tok::Implies)) return Formula::implication(std::move(left), impl());
    return left;
  }

  Formula disj() {
    Formula acc = conj();
    while (accept(Tok::Or)) acc = Formula::disjunction(std::move(acc), conj());
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (accept(Tok::And)) acc = Formula::conjunction(std::move(acc), unary());
    return acc;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        ++pos_;
        return Formula::negation(unary());
      case Tok::LParen: {
        ++pos_;
        Formula inner = iff();
        if (!accept(Tok::RParen)) throw ParseError(peek().offset, "')'", describe(peek()));
        return inner;
      }
      case Tok::Atom:
        ++pos_;
        return Formula::atom(t.text);
      default:
        throw ParseError(t.offset, "atom, '~' or '('", describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

}  // namespace seqarg
