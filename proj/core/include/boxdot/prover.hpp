#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boxdot/formula.hpp"
#include "boxdot/semantics.hpp"

namespace boxdot {

enum class LogicId : std::uint8_t { K, T, K4, S4 };

std::string_view to_string(LogicId logic);
std::optional<LogicId> parse_logic(std::string_view name);

bool is_reflexive_logic(LogicId logic);
bool is_transitive_logic(LogicId logic);

/// Frame condition of the logic: reflexive for T and S4, transitive for K4
/// and S4.
bool satisfies_frame_condition(LogicId logic, const KripkeFrame& frame);

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

enum class Verdict : std::uint8_t { proved, refuted };

std::string_view to_string(Verdict verdict);

struct ProofStats {
  std::uint64_t nodes = 0;
  std::size_t depth = 0;
};

struct ProofResult {
  LogicId logic = LogicId::K;
  Verdict verdict = Verdict::proved;
  /// Present iff refuted. The formula fails at the model's root, worlds are
  /// in creation order.
  std::optional<Model> countermodel;
  ProofStats stats;
};

/// Signed tableau for the logic. Transitive logics use ancestor blocking.
/// Throws BudgetExceeded when more than `node_budget` tableau nodes are
/// opened; that outcome is never reported as a refutation.
ProofResult prove(LogicId logic, const Formula& f, std::uint64_t node_budget = kDefaultNodeBudget);

/// Least n <= n_max such that []^{<=n}(/\ X) -> goal is a theorem.
std::optional<std::size_t> global_consequence(LogicId logic, std::span<const Formula> X,
                                              const Formula& goal, std::size_t n_max,
                                              std::uint64_t node_budget = kDefaultNodeBudget);

/// f belongs to the boxdot interpretation of the logic.
bool boxdot_member(LogicId logic, const Formula& f,
                   std::uint64_t node_budget = kDefaultNodeBudget);

/// Re-checks a refutation: the countermodel's frame meets the logic's frame
/// condition and f is false at its root. Throws std::logic_error when the
/// result is a proof.
bool certify(const ProofResult& result, const Formula& f);

}  // namespace boxdot
