#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boxdot {

enum class Connective : std::uint8_t {
  Var,
  Falsum,
  Verum,
  Not,
  And,
  Or,
  Imp,
  Iff,
  Box,
  Dia,
};

/// Immutable monomodal formula. Copies share structure; equality and
/// ordering are structural.
class Formula {
 public:
  /// The constant `true`.
  Formula();

  static Formula var(std::string name);
  static Formula falsum();
  static Formula verum();
  static Formula unary(Connective c, Formula arg);
  static Formula binary(Connective c, Formula lhs, Formula rhs);

  Connective connective() const;
  bool is(Connective c) const { return connective() == c; }

  /// Variable name. Only meaningful for Var.
  const std::string& name() const;
  /// Operand of Not, Box or Dia.
  const Formula& arg() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::size_t hash() const;
  /// Number of nodes in the syntax tree.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

Formula var(std::string name);
Formula top();
Formula bottom();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula box(Formula f);
Formula dia(Formula f);

/// True for identifiers accepted as variable names: [a-z][a-zA-Z0-9_]*,
/// excluding the keywords "true" and "false".
bool is_valid_variable_name(std::string_view name);

/// ASCII rendering with the minimal parentheses the grammar needs.
std::string to_string(const Formula& f);

/// Maps []A to the dotted box of the translated operand. <>A is read as
/// ~[]~A before translating.
Formula boxdot_translate(const Formula& f);

/// f & []f
Formula dotted_box(Formula f);

/// Distinct subformulas in first-occurrence order of a left-to-right
/// pre-order traversal. The formula itself comes first.
std::vector<Formula> subformulas(const Formula& f);

std::size_t modal_degree(const Formula& f);

/// True when no Box or Dia occurs in f.
bool is_modal_free(const Formula& f);

std::set<std::string, std::less<>> variables(const Formula& f);
bool occurs(std::string_view variable, const Formula& f);

/// n boxes in front of f.
Formula box_n(std::size_t n, Formula f);
/// f & ([]f & ( ... & []^n f)), right nested.
Formula box_le_n(std::size_t n, const Formula& f);
/// Right-nested conjunction in list order; the empty conjunction is `true`.
Formula conjunction(std::span<const Formula> items);

enum class Polarity : std::uint8_t { negative = 0, positive = 1 };

/// q^1 = q, q^0 = ~q.
Formula literal(std::string_view q, Polarity e);

/// Operands A of every boxed subformula []A of phi, deduplicated, in
/// first-occurrence order. A diamond <>A contributes ~A, since the
/// translation reads it as ~[]~A.
std::vector<Formula> boxed_operands(const Formula& phi);

/// The formulas [](q^e -> A) -> A for each boxed operand A of phi,
/// e = 1 before e = 0. Throws std::invalid_argument when q occurs in phi.
std::vector<Formula> build_X(const Formula& phi, std::string_view q);

/// []^n (/\ X) -> phi
Formula build_chi(const Formula& phi, std::span<const Formula> X, std::size_t n);

/// "q" unless used by some formula in avoid, otherwise the first unused of
/// "q1", "q2", ...
std::string fresh_variable(std::span<const Formula> avoid);

}  // namespace boxdot
