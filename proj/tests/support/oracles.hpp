#pragma once

// Independent reference implementations used as test oracles, plus seeded
// generators. Nothing here calls the bulk evaluators of the library.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "boxdot/formula.hpp"
#include "boxdot/frame_ops.hpp"
#include "boxdot/semantics.hpp"

namespace boxdot::testing {

using Rng = std::mt19937_64;

/// Uniform-ish draw in [0, n) by modulo so sequences are identical everywhere.
inline std::size_t draw(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

struct FormulaShape {
  std::vector<std::string> variables{"p", "q", "r"};
  std::size_t max_degree = 3;
  std::size_t max_connectives = 12;
  bool use_constants = true;
};

Formula random_formula(Rng& rng, const FormulaShape& shape);

/// Random Kripke frame with 1..max_worlds worlds named w0, w1, ...
KripkeFrame random_frame(Rng& rng, std::size_t max_worlds, double edge_probability = 0.35);

/// Random model over the given variables on a random frame.
Model random_model(Rng& rng, std::size_t max_worlds, const std::vector<std::string>& variables);

/// Pointwise recursive evaluation straight from the satisfaction clauses.
bool reference_eval(const KripkeFrame& frame, const Valuation& valuation, std::size_t w,
                    const Formula& f);

/// Brute-force frame validity. For general frames only admissible
/// valuations are tried. Returns the first refuting valuation in odometer
/// order (variables by name, last varying fastest; Kripke subsets counted as
/// bitmasks with world 0 least significant), and the least refuting world.
std::optional<Countervaluation> reference_counter(const Frame& frame, const Formula& f);

/// Direct check of the p-morphism conditions on explicit tuples.
bool reference_is_p_morphism(const Frame& src, const Frame& dst, const std::vector<std::size_t>& f);

/// Exhaustive enumeration of all maps in lexicographic order (world 0 most
/// significant). Returns the first p-morphism (onto if requested).
std::optional<std::vector<std::size_t>> reference_find_p_morphism(const Frame& src,
                                                                  const Frame& dst, bool onto);

/// 2W built from explicit pairs, named like the library does.
KripkeFrame reference_double(const KripkeFrame& frame);

/// Every Kripke frame on n worlds (2^(n*n) of them), worlds w0.. in order.
std::vector<KripkeFrame> all_frames(std::size_t n);

/// Frames on up to max_worlds worlds satisfying the predicate.
template <typename Pred>
std::vector<KripkeFrame> frame_stock(std::size_t max_worlds, Pred pred) {
  std::vector<KripkeFrame> out;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (auto& fr : all_frames(n)) {
      if (pred(fr)) out.push_back(std::move(fr));
    }
  }
  return out;
}

/// Powerset general frame over the given Kripke frame.
GeneralFrame powerset_frame(const KripkeFrame& frame);

KripkeFrame make_frame(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges);

}  // namespace boxdot::testing
