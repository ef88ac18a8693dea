#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "boxdot/formula.hpp"

namespace boxdot {

/// Subset of a frame's worlds; bit i is the i-th world in file order.
using WorldSet = boost::dynamic_bitset<>;

struct World {
  std::size_t index = 0;
  friend auto operator<=>(World, World) = default;
};

inline constexpr std::uint64_t kDefaultValuationBudget = std::uint64_t{1} << 22;

/// Raised when an exhaustive search would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(std::move(what)), required_(required), budget_(budget) {}

  /// Saturates at UINT64_MAX.
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Finite Kripke frame. World order is significant and preserved.
class KripkeFrame {
 public:
  KripkeFrame() = default;
  /// Throws std::invalid_argument on duplicate or empty names.
  explicit KripkeFrame(std::vector<std::string> worlds);

  std::size_t size() const { return worlds_.size(); }
  const std::vector<std::string>& worlds() const { return worlds_; }
  const std::string& name(std::size_t w) const { return worlds_.at(w); }
  std::optional<std::size_t> find(std::string_view name) const;

  void relate(std::size_t from, std::size_t to, bool value = true);
  bool related(std::size_t from, std::size_t to) const { return successors_[from][to]; }
  const WorldSet& successors(std::size_t w) const { return successors_[w]; }
  std::size_t edge_count() const;

  WorldSet empty_set() const { return WorldSet(size()); }
  WorldSet full_set() const;

  friend bool operator==(const KripkeFrame& a, const KripkeFrame& b) {
    return a.worlds_ == b.worlds_ && a.successors_ == b.successors_;
  }

 private:
  std::vector<std::string> worlds_;
  std::vector<WorldSet> successors_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Kripke frame together with a family of admissible sets. The family is
/// kept in list order; closure is checked by check_admissible_closure.
struct GeneralFrame {
  KripkeFrame base;
  std::vector<WorldSet> admissible;

  friend bool operator==(const GeneralFrame&, const GeneralFrame&) = default;
};

using Frame = std::variant<KripkeFrame, GeneralFrame>;

const KripkeFrame& kripke_of(const Frame& frame);
KripkeFrame& kripke_of(Frame& frame);
bool is_general(const Frame& frame);

/// Variables missing from the map denote the empty set.
using Valuation = std::map<std::string, WorldSet, std::less<>>;

struct Model {
  Frame frame;
  Valuation valuation;
  /// Distinguished world, stored as "root" in model files.
  std::optional<World> root;

  const KripkeFrame& kripke() const { return kripke_of(frame); }
  friend bool operator==(const Model&, const Model&) = default;
};

/// Throws std::invalid_argument when a valuation set has the wrong size or,
/// over a general frame, is not admissible.
void check_model(const Model& m);

/// Set of worlds where f is true.
WorldSet truth_set(const KripkeFrame& frame, const Valuation& valuation, const Formula& f);
WorldSet truth_set(const Model& m, const Formula& f);

bool eval(const Model& m, World w, const Formula& f);
bool holds_in_model(const Model& m, const Formula& f);

/// Worlds all of whose successors lie in X.
WorldSet box_of_set(const KripkeFrame& frame, const WorldSet& X);

struct Countervaluation {
  Valuation valuation;
  World world;
};

struct ValidityResult {
  bool valid = true;
  /// Set iff !valid.
  std::optional<Countervaluation> counter;
};

/// Frame validity by exhaustive valuation search over the variables of f.
/// Kripke frames range over all subsets, general frames over the admissible
/// family in list order. The reported counter-valuation is the least one in
/// lexicographic order (variables sorted by name, each set compared as a
/// bitmask with world 0 least significant); its world is the least refuting
/// world. Throws BudgetExceeded when more than `budget` valuations exist.
ValidityResult valid_in_frame(const Frame& frame, const Formula& f,
                              std::uint64_t budget = kDefaultValuationBudget);

struct LFrameResult {
  bool ok = true;
  std::optional<std::size_t> failed_axiom;
  std::optional<Countervaluation> counter;
};

LFrameResult is_L_frame(const Frame& frame, std::span<const Formula> axioms,
                        std::uint64_t budget = kDefaultValuationBudget);

struct ClosureResult {
  bool closed = true;
  /// A set the closure requires but the family lacks.
  std::optional<WorldSet> missing;
  std::string reason;
};

/// Checks that the family is nonempty and closed under complement, binary
/// intersection and box_of_set.
ClosureResult check_admissible_closure(const GeneralFrame& frame);

/// ~-classes of a transitive frame, ordered by least member. Throws
/// std::invalid_argument for non-transitive frames.
std::vector<WorldSet> clusters(const KripkeFrame& frame);

bool is_reflexive(const KripkeFrame& frame);
bool is_irreflexive(const KripkeFrame& frame);
bool is_symmetric(const KripkeFrame& frame);
bool is_transitive(const KripkeFrame& frame);
bool is_serial(const KripkeFrame& frame);
/// Every pair of worlds (including w with itself) is related one way or the other.
bool is_total(const KripkeFrame& frame);

/// Builds a set from world indices.
WorldSet make_set(std::size_t frame_size, std::initializer_list<std::size_t> members);
std::vector<std::size_t> members(const WorldSet& set);

}  // namespace boxdot
