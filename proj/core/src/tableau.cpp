#include "tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxdot::detail {

int TermTable::intern(TermKind kind, int var, int a, int b) {
  auto key = std::make_tuple(kind, var, a, b);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const int id = static_cast<int>(terms_.size());
  terms_.push_back({kind, var, a, b});
  negation_.push_back(-1);
  index_.emplace(key, id);
  return id;
}

int TermTable::variable(const std::string& name) {
  auto [it, inserted] = variables_.emplace(name, static_cast<int>(variables_.size()));
  return it->second;
}

std::optional<int> TermTable::variable_id(const std::string& name) const {
  auto it = variables_.find(name);
  if (it == variables_.end()) return std::nullopt;
  return it->second;
}

int TermTable::from_formula(const Formula& f, bool positive) {
  switch (f.connective()) {
    case Connective::Var:
      return intern(positive ? TermKind::Pos : TermKind::Neg, variable(f.name()), -1, -1);
    case Connective::Verum: return intern(positive ? TermKind::Top : TermKind::Bot, -1, -1, -1);
    case Connective::Falsum: return intern(positive ? TermKind::Bot : TermKind::Top, -1, -1, -1);
    case Connective::Not: return from_formula(f.arg(), !positive);
    case Connective::And: {
      int a = from_formula(f.lhs(), positive);
      int b = from_formula(f.rhs(), positive);
      return intern(positive ? TermKind::And : TermKind::Or, -1, a, b);
    }
    case Connective::Or: {
      int a = from_formula(f.lhs(), positive);
      int b = from_formula(f.rhs(), positive);
      return intern(positive ? TermKind::Or : TermKind::And, -1, a, b);
    }
    case Connective::Imp: {
      int a = from_formula(f.lhs(), !positive);
      int b = from_formula(f.rhs(), positive);
      return intern(positive ? TermKind::Or : TermKind::And, -1, a, b);
    }
    case Connective::Iff: {
      int pa = from_formula(f.lhs(), true);
      int na = from_formula(f.lhs(), false);
      int pb = from_formula(f.rhs(), true);
      int nb = from_formula(f.rhs(), false);
      if (positive) {
        return intern(TermKind::And, -1, intern(TermKind::Or, -1, na, pb),
                      intern(TermKind::Or, -1, pa, nb));
      }
      return intern(TermKind::Or, -1, intern(TermKind::And, -1, pa, nb),
                    intern(TermKind::And, -1, na, pb));
    }
    case Connective::Box: {
      int a = from_formula(f.arg(), positive);
      return intern(positive ? TermKind::Box : TermKind::Dia, -1, a, -1);
    }
    case Connective::Dia: {
      int a = from_formula(f.arg(), positive);
      return intern(positive ? TermKind::Dia : TermKind::Box, -1, a, -1);
    }
  }
  throw std::logic_error("unreachable connective");
}

int TermTable::negation(int t) {
  const auto idx = static_cast<std::size_t>(t);
  if (negation_[idx] >= 0) return negation_[idx];
  const Term term = terms_[idx];
  int result = -1;
  switch (term.kind) {
    case TermKind::Top: result = intern(TermKind::Bot, -1, -1, -1); break;
    case TermKind::Bot: result = intern(TermKind::Top, -1, -1, -1); break;
    case TermKind::Pos: result = intern(TermKind::Neg, term.var, -1, -1); break;
    case TermKind::Neg: result = intern(TermKind::Pos, term.var, -1, -1); break;
    case TermKind::And:
    case TermKind::Or: {
      int a = negation(term.a);
      int b = negation(term.b);
      result = intern(term.kind == TermKind::And ? TermKind::Or : TermKind::And, -1, a, b);
      break;
    }
    case TermKind::Box:
    case TermKind::Dia: {
      int a = negation(term.a);
      result = intern(term.kind == TermKind::Box ? TermKind::Dia : TermKind::Box, -1, a, -1);
      break;
    }
  }
  negation_[idx] = result;
  negation_[static_cast<std::size_t>(result)] = t;
  return result;
}

void TermTable::close_under_negation() {
  for (std::size_t i = 0; i < terms_.size(); ++i) negation(static_cast<int>(i));
}

Tableau::Tableau(LogicId logic, TermTable& terms, std::uint64_t node_budget)
    : logic_(logic), terms_(terms), budget_(node_budget) {}

void Tableau::tick() {
  if (++nodes_ > budget_) {
    throw BudgetExceeded("tableau exceeded " + std::to_string(budget_) + " nodes", nodes_,
                         budget_);
  }
}

bool Tableau::satisfiable(int root) {
  terms_.close_under_negation();
  worlds_.clear();
  path_.clear();
  return open_world({root}, 0).has_value();
}

std::optional<std::size_t> Tableau::open_world(std::vector<int> initial, std::size_t depth) {
  if (unsatisfiable_.contains(initial)) return std::nullopt;
  tick();
  max_depth_ = std::max(max_depth_, depth);
  const std::size_t idx = worlds_.size();
  worlds_.push_back({{}, {}, depth});
  path_.emplace_back(idx, initial);

  State state{std::vector<char>(terms_.size(), 0), {}};
  const bool ok = saturate(idx, std::move(state), initial);

  path_.pop_back();
  if (!ok) {
    worlds_.resize(idx);
    unsatisfiable_.insert(std::move(initial));
    return std::nullopt;
  }
  return idx;
}

bool Tableau::saturate(std::size_t world, State state, std::vector<int> pending) {
  const bool reflexive = is_reflexive_logic(logic_);
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const int t = pending[i];
    const auto ti = static_cast<std::size_t>(t);
    if (state.in[ti]) continue;
    const Term& term = terms_[t];
    if (term.kind == TermKind::Bot) return false;
    if (state.in[static_cast<std::size_t>(terms_.negation(t))]) return false;
    state.in[ti] = 1;
    state.order.push_back(t);
    if (term.kind == TermKind::And) {
      pending.push_back(term.a);
      pending.push_back(term.b);
    } else if (term.kind == TermKind::Box && reflexive) {
      pending.push_back(term.a);
    }
  }

  for (int t : state.order) {
    const Term& term = terms_[t];
    if (term.kind != TermKind::Or) continue;
    const auto a = static_cast<std::size_t>(term.a);
    const auto b = static_cast<std::size_t>(term.b);
    if (state.in[a] || state.in[b]) continue;
    if (state.in[static_cast<std::size_t>(terms_.negation(term.a))]) {
      return saturate(world, std::move(state), {term.b});
    }
    if (state.in[static_cast<std::size_t>(terms_.negation(term.b))]) {
      return saturate(world, std::move(state), {term.a});
    }
    tick();
    const std::size_t mark = worlds_.size();
    if (saturate(world, state, {term.a})) return true;
    worlds_.resize(mark);
    // Semantic branching: the second branch also assumes the first disjunct fails.
    return saturate(world, std::move(state), {terms_.negation(term.a), term.b});
  }

  return expand_modal(world, state);
}

bool Tableau::expand_modal(std::size_t world, const State& state) {
  const bool reflexive = is_reflexive_logic(logic_);
  const bool transitive = is_transitive_logic(logic_);

  std::vector<int> carried;
  for (int t : state.order) {
    const Term& term = terms_[t];
    if (term.kind != TermKind::Box) continue;
    switch (logic_) {
      case LogicId::K:
      case LogicId::T: carried.push_back(term.a); break;
      case LogicId::K4:
        carried.push_back(term.a);
        carried.push_back(t);
        break;
      case LogicId::S4: carried.push_back(t); break;
    }
  }

  const std::size_t mark = worlds_.size();
  const std::size_t depth = worlds_[world].depth;
  std::vector<std::size_t> successors;
  for (int t : state.order) {
    const Term& term = terms_[t];
    if (term.kind != TermKind::Dia) continue;
    if (reflexive && state.in[static_cast<std::size_t>(term.a)]) continue;

    std::vector<int> child = carried;
    child.push_back(term.a);
    std::sort(child.begin(), child.end());
    child.erase(std::unique(child.begin(), child.end()), child.end());

    if (transitive) {
      auto blocked = std::find_if(path_.begin(), path_.end(),
                                  [&](const auto& entry) { return entry.second == child; });
      if (blocked != path_.end()) {
        successors.push_back(blocked->first);
        continue;
      }
    }
    auto created = open_world(std::move(child), depth + 1);
    if (!created) {
      worlds_.resize(mark);
      return false;
    }
    successors.push_back(*created);
  }

  worlds_[world].label = state.order;
  worlds_[world].successors = std::move(successors);
  return true;
}

}  // namespace boxdot::detail
