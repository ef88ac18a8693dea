#include "boxdot/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace boxdot {

struct Formula::Node {
  Connective connective;
  std::string name;
  std::vector<Formula> children;
  std::size_t hash;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_unary(Connective c) {
  return c == Connective::Not || c == Connective::Box || c == Connective::Dia;
}

bool is_binary(Connective c) {
  return c == Connective::And || c == Connective::Or || c == Connective::Imp ||
         c == Connective::Iff;
}

}  // namespace

Formula Formula::var(std::string name) {
  if (!is_valid_variable_name(name)) {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  std::size_t h = mix(static_cast<std::size_t>(Connective::Var), std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Connective::Var, std::move(name), {}, h, 1}));
}

Formula Formula::falsum() {
  static const Formula f(std::make_shared<const Node>(
      Node{Connective::Falsum, {}, {}, mix(0, static_cast<std::size_t>(Connective::Falsum)), 1}));
  return f;
}

Formula Formula::verum() {
  static const Formula f(std::make_shared<const Node>(
      Node{Connective::Verum, {}, {}, mix(0, static_cast<std::size_t>(Connective::Verum)), 1}));
  return f;
}

Formula::Formula() : Formula(verum()) {}

Formula Formula::unary(Connective c, Formula arg) {
  if (!is_unary(c)) throw std::invalid_argument("not a unary connective");
  std::size_t h = mix(static_cast<std::size_t>(c), arg.hash());
  std::size_t n = arg.size() + 1;
  return Formula(std::make_shared<const Node>(Node{c, {}, {std::move(arg)}, h, n}));
}

Formula Formula::binary(Connective c, Formula lhs, Formula rhs) {
  if (!is_binary(c)) throw std::invalid_argument("not a binary connective");
  std::size_t h = mix(mix(static_cast<std::size_t>(c), lhs.hash()), rhs.hash());
  std::size_t n = lhs.size() + rhs.size() + 1;
  return Formula(
      std::make_shared<const Node>(Node{c, {}, {std::move(lhs), std::move(rhs)}, h, n}));
}

Connective Formula::connective() const { return node_->connective; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::arg() const { return node_->children.at(0); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size ||
      a.node_->connective != b.node_->connective || a.node_->name != b.node_->name) {
    return false;
  }
  return a.node_->children == b.node_->children;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->connective <=> b.node_->connective; c != 0) return c;
  if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
  const auto& x = a.node_->children;
  const auto& y = b.node_->children;
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

Formula var(std::string name) { return Formula::var(std::move(name)); }
Formula top() { return Formula::verum(); }
Formula bottom() { return Formula::falsum(); }
Formula neg(Formula f) { return Formula::unary(Connective::Not, std::move(f)); }
Formula conj(Formula a, Formula b) {
  return Formula::binary(Connective::And, std::move(a), std::move(b));
}
Formula disj(Formula a, Formula b) {
  return Formula::binary(Connective::Or, std::move(a), std::move(b));
}
Formula implies(Formula a, Formula b) {
  return Formula::binary(Connective::Imp, std::move(a), std::move(b));
}
Formula iff(Formula a, Formula b) {
  return Formula::binary(Connective::Iff, std::move(a), std::move(b));
}
Formula box(Formula f) { return Formula::unary(Connective::Box, std::move(f)); }
Formula dia(Formula f) { return Formula::unary(Connective::Dia, std::move(f)); }

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || name == "true" || name == "false") return false;
  if (name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength; larger binds tighter.
int precedence(Connective c) {
  switch (c) {
    case Connective::Iff: return 1;
    case Connective::Imp: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not:
    case Connective::Box:
    case Connective::Dia: return 5;
    default: return 6;
  }
}

std::string_view symbol(Connective c) {
  switch (c) {
    case Connective::Not: return "~";
    case Connective::Box: return "[]";
    case Connective::Dia: return "<>";
    case Connective::And: return " & ";
    case Connective::Or: return " | ";
    case Connective::Imp: return " -> ";
    case Connective::Iff: return " <-> ";
    default: return "";
  }
}

void print(const Formula& f, std::string& out);

void print_child(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
  const Connective c = f.connective();
  switch (c) {
    case Connective::Var: out += f.name(); return;
    case Connective::Falsum: out += "false"; return;
    case Connective::Verum: out += "true"; return;
    case Connective::Not:
    case Connective::Box:
    case Connective::Dia:
      out += symbol(c);
      print_child(f.arg(), precedence(f.arg().connective()) < precedence(c), out);
      return;
    default: break;
  }
  // & | <-> associate to the left, -> to the right.
  const int p = precedence(c);
  const int lp = precedence(f.lhs().connective());
  const int rp = precedence(f.rhs().connective());
  const bool right_assoc = c == Connective::Imp;
  print_child(f.lhs(), right_assoc ? lp <= p : lp < p, out);
  out += symbol(c);
  print_child(f.rhs(), right_assoc ? rp < p : rp <= p, out);
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Syntactic transformations

Formula dotted_box(Formula f) {
  Formula boxed = box(f);
  return conj(std::move(f), std::move(boxed));
}

Formula boxdot_translate(const Formula& f) {
  switch (f.connective()) {
    case Connective::Var:
    case Connective::Falsum:
    case Connective::Verum: return f;
    case Connective::Not: return neg(boxdot_translate(f.arg()));
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
    case Connective::Iff:
      return Formula::binary(f.connective(), boxdot_translate(f.lhs()),
                             boxdot_translate(f.rhs()));
    case Connective::Box: return dotted_box(boxdot_translate(f.arg()));
    case Connective::Dia: return neg(dotted_box(boxdot_translate(neg(f.arg()))));
  }
  throw std::logic_error("unreachable connective");
}

namespace {

template <typename Visit>
void preorder(const Formula& f, Visit&& visit) {
  visit(f);
  switch (f.connective()) {
    case Connective::Not:
    case Connective::Box:
    case Connective::Dia: preorder(f.arg(), visit); break;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
    case Connective::Iff:
      preorder(f.lhs(), visit);
      preorder(f.rhs(), visit);
      break;
    default: break;
  }
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  preorder(f, [&](const Formula& g) {
    if (seen.insert(g).second) out.push_back(g);
  });
  return out;
}

std::size_t modal_degree(const Formula& f) {
  switch (f.connective()) {
    case Connective::Not: return modal_degree(f.arg());
    case Connective::Box:
    case Connective::Dia: return modal_degree(f.arg()) + 1;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
    case Connective::Iff: return std::max(modal_degree(f.lhs()), modal_degree(f.rhs()));
    default: return 0;
  }
}

bool is_modal_free(const Formula& f) { return modal_degree(f) == 0; }

std::set<std::string, std::less<>> variables(const Formula& f) {
  std::set<std::string, std::less<>> out;
  preorder(f, [&](const Formula& g) {
    if (g.is(Connective::Var)) out.insert(g.name());
  });
  return out;
}

bool occurs(std::string_view variable, const Formula& f) {
  bool found = false;
  preorder(f, [&](const Formula& g) {
    if (g.is(Connective::Var) && g.name() == variable) found = true;
  });
  return found;
}

Formula box_n(std::size_t n, Formula f) {
  for (std::size_t i = 0; i < n; ++i) f = box(std::move(f));
  return f;
}

Formula box_le_n(std::size_t n, const Formula& f) {
  Formula acc = box_n(n, f);
  for (std::size_t i = n; i-- > 0;) acc = conj(box_n(i, f), std::move(acc));
  return acc;
}

Formula conjunction(std::span<const Formula> items) {
  if (items.empty()) return top();
  Formula acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) acc = conj(items[i], std::move(acc));
  return acc;
}

Formula literal(std::string_view q, Polarity e) {
  Formula v = var(std::string(q));
  return e == Polarity::positive ? v : neg(std::move(v));
}

std::vector<Formula> boxed_operands(const Formula& phi) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  for (const Formula& g : subformulas(phi)) {
    if (g.is(Connective::Box)) {
      if (seen.insert(g.arg()).second) out.push_back(g.arg());
    } else if (g.is(Connective::Dia)) {
      Formula operand = neg(g.arg());
      if (seen.insert(operand).second) out.push_back(std::move(operand));
    }
  }
  return out;
}

std::vector<Formula> build_X(const Formula& phi, std::string_view q) {
  if (occurs(q, phi)) {
    throw std::invalid_argument("variable '" + std::string(q) + "' occurs in " + to_string(phi));
  }
  std::vector<Formula> out;
  for (const Formula& psi : boxed_operands(phi)) {
    for (Polarity e : {Polarity::positive, Polarity::negative}) {
      out.push_back(implies(box(implies(literal(q, e), psi)), psi));
    }
  }
  return out;
}

Formula build_chi(const Formula& phi, std::span<const Formula> X, std::size_t n) {
  return implies(box_n(n, conjunction(X)), phi);
}

std::string fresh_variable(std::span<const Formula> avoid) {
  std::set<std::string, std::less<>> used;
  for (const Formula& f : avoid) used.merge(variables(f));
  if (!used.contains("q")) return "q";
  for (std::size_t i = 1;; ++i) {
    std::string candidate = "q" + std::to_string(i);
    if (!used.contains(candidate)) return candidate;
  }
}

}  // namespace boxdot
