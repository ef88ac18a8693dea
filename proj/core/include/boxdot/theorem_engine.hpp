#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "boxdot/formula.hpp"
#include "boxdot/frame_ops.hpp"
#include "boxdot/prover.hpp"
#include "boxdot/semantics.hpp"

namespace boxdot {

/// The logic L on the theorem side: either a supported tableau logic, or a
/// finite list of L-frames. Frame lists only give soundness evidence.
using LogicSource = std::variant<LogicId, std::vector<Frame>>;

enum class Evidence : std::uint8_t { prover, frames_soundness_only };

struct Budgets {
  std::uint64_t valuations = kDefaultValuationBudget;
  std::uint64_t tableau_nodes = kDefaultNodeBudget;
};

class WitnessError : public std::runtime_error {
 public:
  enum class Kind : std::uint8_t { precondition, no_n_found };

  WitnessError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct WitnessChecks {
  bool X_translation_consequence = false;
  bool two_m_satisfies_X = false;
  bool two_m_refutes_phi = false;
  bool chi_refuted_in_doubled_frame = false;
  bool doubled_frame_is_L0_frame = false;
  bool chi_bd_proved_in_L = false;

  bool all() const {
    return X_translation_consequence && two_m_satisfies_X && two_m_refutes_phi &&
           chi_refuted_in_doubled_frame && doubled_frame_is_L0_frame && chi_bd_proved_in_L;
  }
};

struct XCheck {
  bool holds = true;
  std::optional<Formula> failing;
  std::optional<World> world;
};

struct WitnessReport {
  Formula phi;
  std::string q;
  std::vector<Formula> X;
  std::size_t n = 0;
  Formula chi;
  Formula chi_bd;
  Model source_model;
  Model doubled_model;
  WitnessChecks checks;

  Evidence evidence = Evidence::prover;
  /// Set when two_m_satisfies_X fails.
  XCheck x_check;
  /// A world of 2M where chi is false.
  std::optional<World> chi_refuting_world;
  /// 2M satisfies X, refutes phi, and lives on an L0-frame.
  bool X_not_derivable_in_L0 = false;
};

/// Runs the doubling construction on a concrete countermodel: builds X, the
/// least n with X^bd |- []^{<=n} /\X^bd -> phi^bd in L, chi, and the doubled
/// model, then checks every step.
///
/// Preconditions (WitnessError::Kind::precondition): phi fails at w0 in m,
/// m's frame validates the L0 axioms, phi is a theorem of L. A missing n
/// raises WitnessError::Kind::no_n_found.
WitnessReport witness(const Formula& phi, const Model& m, World w0, const LogicSource& L,
                      std::span<const Formula> L0_axioms, std::size_t n_max,
                      const Budgets& budgets = {});

/// Every member of X holds at every world of the doubled model.
XCheck verify_X_holds(const Model& doubled, std::span<const Formula> X);

struct Example31Row {
  Formula formula;
  bool translated_valid_on_I2 = false;
  bool valid_on_C2 = false;
};

struct Example31Report {
  KripkeFrame I2;
  KripkeFrame C2;
  bool reflexivization_is_C2 = false;
  Formula formula;
  bool valid_on_I2 = false;
  bool valid_on_C2 = true;
  std::optional<Countervaluation> C2_counter;
  std::vector<Example31Row> corpus;
  bool corpus_agrees = false;

  bool all() const {
    return reflexivization_is_C2 && valid_on_I2 && !valid_on_C2 && corpus_agrees;
  }
};

/// The two-world frames I2 (irreflexive swap) and C2 (two-element cluster).
KripkeFrame frame_I2();
KripkeFrame frame_C2();

/// Fixed 50-formula corpus used for the bdi agreement check.
std::vector<Formula> example31_corpus();

Example31Report example_31(std::uint64_t valuation_budget = kDefaultValuationBudget);

struct AssumptionRow {
  std::string name;
  LFrameResult frame;
  LFrameResult doubled;
};

struct AssumptionReport {
  std::vector<AssumptionRow> rows;
  bool all() const {
    for (const auto& r : rows) {
      if (!r.frame.ok || !r.doubled.ok) return false;
    }
    return true;
  }
};

/// For each frame, whether it and its double validate the L0 axioms.
AssumptionReport check_assumption(std::span<const std::pair<std::string, Frame>> frames,
                                  std::span<const Formula> L0_axioms,
                                  std::uint64_t valuation_budget = kDefaultValuationBudget);

/// The reflexive chain w0 R w1 R w2 (no w0 R w2) with p true at w0 and w1,
/// rooted at w0: a T-countermodel of []p -> [][]p.
Model reflexive_chain_countermodel();

/// witness([]p -> [][]p, reflexive_chain_countermodel(), w0, K4, {[]p -> p}, 4).
WitnessReport conjecture_demo(const Budgets& budgets = {});

}  // namespace boxdot
