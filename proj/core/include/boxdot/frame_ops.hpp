#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boxdot/semantics.hpp"

namespace boxdot {

/// Total function between world sets, by index.
struct WorldMap {
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t w) const { return image.at(w); }
  friend bool operator==(const WorldMap&, const WorldMap&) = default;
};

/// A doubled world <w, a>.
struct DoubledWorld {
  World base;
  std::uint8_t tag = 0;
};

/// Index of <w, a> in the doubled frame.
inline std::size_t doubled_index(DoubledWorld dw) { return 2 * dw.base.index + dw.tag; }

struct GeneratedSubframe {
  Frame frame;
  /// embedding[i] is the source index of world i of the subframe.
  std::vector<std::size_t> embedding;
};

/// Upward R-closure of seed.
WorldSet upward_closure(const KripkeFrame& frame, const WorldSet& seed);

/// Subframe on the upward closure of seed; general frames keep the traces
/// X ∩ W' of their admissible sets (deduplicated, first occurrence kept).
GeneratedSubframe generated_subframe(const Frame& frame, const WorldSet& seed);

struct PMorphismCheck {
  bool ok = true;
  /// 1: forth condition, 2: back condition, 3: admissible preimages,
  /// 0: malformed map (wrong arity or value out of range).
  int condition = 0;
  /// Witness: cond 1 (w, v) with wRv; cond 2 (w, v') with f(w)R'v';
  /// cond 3 (index of X' in the target family, or for a Kripke target the
  /// least world of X', unused).
  std::size_t first = 0;
  std::size_t second = 0;
  std::string message;
};

/// Checks the p-morphism conditions. When the target is a Kripke frame and
/// the source a general frame, condition 3 is checked on singleton
/// preimages, which suffices for a Boolean-closed source family.
PMorphismCheck is_p_morphism(const Frame& src, const Frame& dst, const WorldMap& f);

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

/// Backtracking search for a p-morphism, lexicographically least in world
/// order. Throws BudgetExceeded after `budget` search nodes.
std::optional<WorldMap> find_p_morphism(const Frame& src, const Frame& dst, bool onto,
                                        std::uint64_t budget = kDefaultSearchBudget);

/// Set of f-images; upward closed in the target for every p-morphism.
WorldSet image_of(const WorldMap& f, std::size_t target_size);

/// Doubled world name, "w@0" or "w@1".
std::string doubled_name(std::string_view base, std::uint8_t tag);

/// 2W: world <w,a> gets index 2w + a and name "w@a"; <w,a> 2R <v,b> iff wRv.
/// General frames get 2A = {(X×{0}) ∪ (Y×{1}) : X, Y ∈ A}, X-major order.
KripkeFrame double_frame(const KripkeFrame& frame);
Frame double_frame(const Frame& frame);

/// Lift of X ⊆ W to X×{0,1}.
WorldSet lift_to_doubled(const WorldSet& X);

/// π(<w,a>) = w, read off the "@0"/"@1" world names. Target indices follow
/// the first appearance of each base name. Throws std::invalid_argument when
/// the names are not in doubled form.
WorldMap projection(const Frame& doubled);

/// Base world names of a doubled frame, in projection order.
std::vector<std::string> projected_names(const Frame& doubled);

/// R ∪ id
KripkeFrame reflexivize(KripkeFrame frame);
Frame reflexivize(Frame frame);
/// R \ id
KripkeFrame irreflexivize(KripkeFrame frame);
Frame irreflexivize(Frame frame);

/// 2M: q holds exactly at tag-1 worlds, every other variable at π⁻¹ of its
/// old extension. The root <w0> becomes <w0,0>. Throws std::invalid_argument
/// when q is already valued.
Model double_model(const Model& m, std::string_view q);

}  // namespace boxdot
