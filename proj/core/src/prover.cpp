#include "boxdot/prover.hpp"

#include <stdexcept>

#include "tableau.hpp"

namespace boxdot {

std::string_view to_string(LogicId logic) {
  switch (logic) {
    case LogicId::K: return "K";
    case LogicId::T: return "T";
    case LogicId::K4: return "K4";
    case LogicId::S4: return "S4";
  }
  return "?";
}

std::optional<LogicId> parse_logic(std::string_view name) {
  for (LogicId l : {LogicId::K, LogicId::T, LogicId::K4, LogicId::S4}) {
    if (to_string(l) == name) return l;
  }
  return std::nullopt;
}

bool is_reflexive_logic(LogicId logic) { return logic == LogicId::T || logic == LogicId::S4; }
bool is_transitive_logic(LogicId logic) { return logic == LogicId::K4 || logic == LogicId::S4; }

bool satisfies_frame_condition(LogicId logic, const KripkeFrame& frame) {
  if (is_reflexive_logic(logic) && !is_reflexive(frame)) return false;
  if (is_transitive_logic(logic) && !is_transitive(frame)) return false;
  return true;
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::proved ? "proved" : "refuted";
}

namespace {

Model extract_countermodel(LogicId logic, const detail::TermTable& terms,
                           const std::vector<detail::TableauWorld>& worlds, const Formula& f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < worlds.size(); ++i) names.push_back("c" + std::to_string(i));
  KripkeFrame frame(std::move(names));
  for (std::size_t w = 0; w < worlds.size(); ++w) {
    for (std::size_t v : worlds[w].successors) frame.relate(w, v);
  }
  if (is_reflexive_logic(logic)) {
    for (std::size_t w = 0; w < frame.size(); ++w) frame.relate(w, w);
  }
  if (is_transitive_logic(logic)) {
    for (std::size_t k = 0; k < frame.size(); ++k) {
      for (std::size_t i = 0; i < frame.size(); ++i) {
        if (!frame.related(i, k)) continue;
        for (std::size_t j = 0; j < frame.size(); ++j) {
          if (frame.related(k, j)) frame.relate(i, j);
        }
      }
    }
  }

  Valuation valuation;
  for (const std::string& name : variables(f)) {
    WorldSet s = frame.empty_set();
    if (auto id = terms.variable_id(name)) {
      for (std::size_t w = 0; w < worlds.size(); ++w) {
        for (int t : worlds[w].label) {
          if (terms[t].kind == detail::TermKind::Pos && terms[t].var == *id) s[w] = true;
        }
      }
    }
    valuation.emplace(name, std::move(s));
  }
  return Model{std::move(frame), std::move(valuation), World{0}};
}

}  // namespace

ProofResult prove(LogicId logic, const Formula& f, std::uint64_t node_budget) {
  detail::TermTable terms;
  const int root = terms.from_formula(f, false);
  detail::Tableau tableau(logic, terms, node_budget);
  ProofResult result;
  result.logic = logic;
  if (tableau.satisfiable(root)) {
    result.verdict = Verdict::refuted;
    result.countermodel = extract_countermodel(logic, terms, tableau.worlds(), f);
  } else {
    result.verdict = Verdict::proved;
  }
  result.stats = tableau.stats();
  return result;
}

std::optional<std::size_t> global_consequence(LogicId logic, std::span<const Formula> X,
                                              const Formula& goal, std::size_t n_max,
                                              std::uint64_t node_budget) {
  const Formula assumptions = conjunction(X);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (prove(logic, implies(box_le_n(n, assumptions), goal), node_budget).verdict ==
        Verdict::proved) {
      return n;
    }
  }
  return std::nullopt;
}

bool boxdot_member(LogicId logic, const Formula& f, std::uint64_t node_budget) {
  return prove(logic, boxdot_translate(f), node_budget).verdict == Verdict::proved;
}

bool certify(const ProofResult& result, const Formula& f) {
  if (result.verdict != Verdict::refuted) {
    throw std::logic_error("certify called on a proved result");
  }
  if (!result.countermodel) return false;
  const Model& m = *result.countermodel;
  if (!m.root || m.root->index >= m.kripke().size()) return false;
  if (!satisfies_frame_condition(result.logic, m.kripke())) return false;
  return !eval(m, *m.root, f);
}

}  // namespace boxdot
