#include "boxdot/theorem_engine.hpp"

#include <array>
#include <string_view>

#include "boxdot/parser.hpp"

namespace boxdot {

namespace {

bool theorem_of(const LogicSource& L, const Formula& f, const Budgets& budgets) {
  if (const auto* logic = std::get_if<LogicId>(&L)) {
    return prove(*logic, f, budgets.tableau_nodes).verdict == Verdict::proved;
  }
  for (const Frame& frame : std::get<std::vector<Frame>>(L)) {
    if (!valid_in_frame(frame, f, budgets.valuations).valid) return false;
  }
  return true;
}

std::optional<std::size_t> least_n(const LogicSource& L, std::span<const Formula> X,
                                   const Formula& goal, std::size_t n_max,
                                   const Budgets& budgets) {
  if (const auto* logic = std::get_if<LogicId>(&L)) {
    return global_consequence(*logic, X, goal, n_max, budgets.tableau_nodes);
  }
  const Formula assumptions = conjunction(X);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (theorem_of(L, implies(box_le_n(n, assumptions), goal), budgets)) return n;
  }
  return std::nullopt;
}

[[noreturn]] void precondition(const std::string& what) {
  throw WitnessError(WitnessError::Kind::precondition, what);
}

}  // namespace

XCheck verify_X_holds(const Model& doubled, std::span<const Formula> X) {
  for (const Formula& x : X) {
    WorldSet truth = truth_set(doubled, x);
    if (!truth.all()) {
      std::size_t w = 0;
      while (truth[w]) ++w;
      return {false, x, World{w}};
    }
  }
  return {};
}

WitnessReport witness(const Formula& phi, const Model& m, World w0, const LogicSource& L,
                      std::span<const Formula> L0_axioms, std::size_t n_max,
                      const Budgets& budgets) {
  try {
    check_model(m);
  } catch (const std::invalid_argument& e) {
    precondition(std::string("malformed source model: ") + e.what());
  }
  if (w0.index >= m.kripke().size()) precondition("root world out of range");
  if (eval(m, w0, phi)) {
    precondition(to_string(phi) + " holds at " + m.kripke().name(w0.index) +
                 " in the source model");
  }
  if (LFrameResult r = is_L_frame(m.frame, L0_axioms, budgets.valuations); !r.ok) {
    precondition("source frame refutes L0 axiom " + to_string(L0_axioms[*r.failed_axiom]));
  }
  if (!theorem_of(L, phi, budgets)) precondition(to_string(phi) + " is not a theorem of L");

  WitnessReport report;
  report.phi = phi;
  report.evidence =
      std::holds_alternative<LogicId>(L) ? Evidence::prover : Evidence::frames_soundness_only;

  std::vector<Formula> avoid{phi};
  avoid.insert(avoid.end(), L0_axioms.begin(), L0_axioms.end());
  for (const auto& entry : m.valuation) avoid.push_back(var(entry.first));
  report.q = fresh_variable(avoid);
  report.X = build_X(phi, report.q);

  std::vector<Formula> X_bd;
  for (const Formula& x : report.X) X_bd.push_back(boxdot_translate(x));
  const Formula phi_bd = boxdot_translate(phi);
  std::optional<std::size_t> n = least_n(L, X_bd, phi_bd, n_max, budgets);
  if (!n) {
    throw WitnessError(WitnessError::Kind::no_n_found,
                       "no n <= " + std::to_string(n_max) +
                           " derives the translated formula from the translated X");
  }
  report.n = *n;
  report.chi = build_chi(phi, report.X, report.n);
  report.chi_bd = boxdot_translate(report.chi);

  report.source_model = m;
  report.source_model.root = w0;
  report.doubled_model = double_model(report.source_model, report.q);
  const Model& doubled = report.doubled_model;

  WitnessChecks& c = report.checks;
  c.X_translation_consequence =
      theorem_of(L, implies(box_le_n(report.n, conjunction(X_bd)), phi_bd), budgets);
  report.x_check = verify_X_holds(doubled, report.X);
  c.two_m_satisfies_X = report.x_check.holds;
  c.two_m_refutes_phi = !eval(doubled, World{doubled_index({w0, 0})}, phi);

  WorldSet chi_truth = truth_set(doubled, report.chi);
  if (!chi_truth.all()) {
    std::size_t w = 0;
    while (chi_truth[w]) ++w;
    report.chi_refuting_world = World{w};
    c.chi_refuted_in_doubled_frame = true;
  }
  c.doubled_frame_is_L0_frame = is_L_frame(doubled.frame, L0_axioms, budgets.valuations).ok;
  c.chi_bd_proved_in_L = theorem_of(L, report.chi_bd, budgets);

  report.X_not_derivable_in_L0 =
      c.two_m_satisfies_X && c.two_m_refutes_phi && c.doubled_frame_is_L0_frame;
  return report;
}

KripkeFrame frame_I2() {
  KripkeFrame f({"w0", "w1"});
  f.relate(0, 1);
  f.relate(1, 0);
  return f;
}

KripkeFrame frame_C2() {
  KripkeFrame f({"w0", "w1"});
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t v = 0; v < 2; ++v) f.relate(w, v);
  }
  return f;
}

std::vector<Formula> example31_corpus() {
  static constexpr std::array<std::string_view, 50> kCorpus{
      "[]p -> p",
      "p -> []<>p",
      "[]p -> [][]p",
      "<>p -> []<>p",
      "[]p -> <>p",
      "p & []([]p -> p) -> []p",
      "[](p -> q) -> []p -> []q",
      "<>true",
      "[]false",
      "[]p | []~p",
      "<>[]p -> []<>p",
      "[]([]p -> p) -> []p",
      "p -> []p",
      "<>p -> p",
      "[]<>p -> <>[]p",
      "[](p | q) -> []p | []q",
      "<>p & <>q -> <>(p & q)",
      "[][]p -> []p",
      "<><>p -> <>p",
      "p -> <>p",
      "[]p & []q <-> [](p & q)",
      "<>(p | q) <-> <>p | <>q",
      "[](p -> []p) -> p -> []p",
      "[]([]p -> q) | []([]q -> p)",
      "[](<>p -> q) -> []p -> q",
      "~[]false -> <>true",
      "[]p -> []<>p",
      "<>[]p -> p",
      "p & <>~p -> <>(~p & <>p)",
      "[]<>p -> <>p",
      "[](p <-> q) -> ([]p <-> []q)",
      "<>p -> [](p | <>p)",
      "[]p -> [](q -> p)",
      "[][]p -> [][][]p",
      "<>~p | []p",
      "[](p -> q) & <>p -> <>q",
      "~<>p <-> []~p",
      "[]p -> p & [][]p",
      "<>(p & []q) -> <>q",
      "[]<>[]p -> []p",
      "<>p & []q -> <>(p & q)",
      "[](p | ~p)",
      "[]p | <>~p",
      "p -> [](<>p | q)",
      "<>(p & ~p)",
      "[]<>p & []<>q -> [](<>p & <>q)",
      "[]p <-> [][]p",
      "<><>p <-> <>p",
      "q & []q -> [](q | p)",
      "[.]p -> p",
  };
  std::vector<Formula> out;
  out.reserve(kCorpus.size());
  for (std::string_view text : kCorpus) out.push_back(parse_formula(text));
  return out;
}

Example31Report example_31(std::uint64_t valuation_budget) {
  Example31Report r;
  r.I2 = frame_I2();
  r.C2 = frame_C2();
  r.reflexivization_is_C2 = reflexivize(r.I2) == r.C2;
  r.formula = parse_formula("p & []([]p -> p) -> []p");
  r.valid_on_I2 = valid_in_frame(r.I2, r.formula, valuation_budget).valid;
  ValidityResult on_c2 = valid_in_frame(r.C2, r.formula, valuation_budget);
  r.valid_on_C2 = on_c2.valid;
  r.C2_counter = std::move(on_c2.counter);

  r.corpus_agrees = true;
  for (const Formula& f : example31_corpus()) {
    Example31Row row{f, valid_in_frame(r.I2, boxdot_translate(f), valuation_budget).valid,
                     valid_in_frame(r.C2, f, valuation_budget).valid};
    r.corpus_agrees = r.corpus_agrees && row.translated_valid_on_I2 == row.valid_on_C2;
    r.corpus.push_back(std::move(row));
  }
  return r;
}

AssumptionReport check_assumption(std::span<const std::pair<std::string, Frame>> frames,
                                  std::span<const Formula> L0_axioms,
                                  std::uint64_t valuation_budget) {
  AssumptionReport report;
  for (const auto& [name, frame] : frames) {
    report.rows.push_back({name, is_L_frame(frame, L0_axioms, valuation_budget),
                           is_L_frame(double_frame(frame), L0_axioms, valuation_budget)});
  }
  return report;
}

Model reflexive_chain_countermodel() {
  KripkeFrame frame({"w0", "w1", "w2"});
  for (std::size_t w = 0; w < 3; ++w) frame.relate(w, w);
  frame.relate(0, 1);
  frame.relate(1, 2);
  Model m{std::move(frame), {}, World{0}};
  m.valuation.emplace("p", make_set(3, {0, 1}));
  return m;
}

WitnessReport conjecture_demo(const Budgets& budgets) {
  const Formula phi = parse_formula("[]p -> [][]p");
  const std::vector<Formula> axioms{parse_formula("[]p -> p")};
  return witness(phi, reflexive_chain_countermodel(), World{0}, LogicId::K4, axioms, 4, budgets);
}

}  // namespace boxdot
