#pragma once

// Internal tableau engine behind prove(). Formulas are converted to negation
// normal form and hash-consed into a term table; labels are sets of term ids.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "boxdot/formula.hpp"
#include "boxdot/prover.hpp"

namespace boxdot::detail {

enum class TermKind : std::uint8_t { Top, Bot, Pos, Neg, And, Or, Box, Dia };

struct Term {
  TermKind kind;
  int var;
  int a;
  int b;
};

class TermTable {
 public:
  /// NNF of f (positive) or of ~f (negative).
  int from_formula(const Formula& f, bool positive);
  int negation(int t);
  /// Memoizes the complement of every term, so the table stops growing.
  void close_under_negation();

  const Term& operator[](int t) const { return terms_[static_cast<std::size_t>(t)]; }
  std::size_t size() const { return terms_.size(); }
  std::optional<int> variable_id(const std::string& name) const;

 private:
  int intern(TermKind kind, int var, int a, int b);
  int variable(const std::string& name);

  std::vector<Term> terms_;
  std::vector<int> negation_;
  std::map<std::tuple<TermKind, int, int, int>, int> index_;
  std::map<std::string, int> variables_;
};

struct TableauWorld {
  std::vector<int> label;
  std::vector<std::size_t> successors;
  std::size_t depth = 0;
};

class Tableau {
 public:
  Tableau(LogicId logic, TermTable& terms, std::uint64_t node_budget);

  /// Builds an open tableau for the label {root}; on success worlds() holds
  /// the model skeleton with world 0 as root.
  bool satisfiable(int root);

  const std::vector<TableauWorld>& worlds() const { return worlds_; }
  ProofStats stats() const { return {nodes_, max_depth_}; }

 private:
  struct State {
    std::vector<char> in;
    std::vector<int> order;
  };

  std::optional<std::size_t> open_world(std::vector<int> initial, std::size_t depth);
  bool saturate(std::size_t world, State state, std::vector<int> pending);
  bool expand_modal(std::size_t world, const State& state);
  void tick();

  LogicId logic_;
  TermTable& terms_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t max_depth_ = 0;
  std::vector<TableauWorld> worlds_;
  std::vector<std::pair<std::size_t, std::vector<int>>> path_;
  std::set<std::vector<int>> unsatisfiable_;
};

}  // namespace boxdot::detail
