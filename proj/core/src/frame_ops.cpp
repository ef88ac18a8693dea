#include "boxdot/frame_ops.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace boxdot {

WorldSet upward_closure(const KripkeFrame& frame, const WorldSet& seed) {
  WorldSet closed = seed;
  std::vector<std::size_t> stack = members(seed);
  while (!stack.empty()) {
    std::size_t w = stack.back();
    stack.pop_back();
    for (std::size_t v : members(frame.successors(w))) {
      if (!closed[v]) {
        closed[v] = true;
        stack.push_back(v);
      }
    }
  }
  return closed;
}

GeneratedSubframe generated_subframe(const Frame& frame, const WorldSet& seed) {
  const KripkeFrame& kf = kripke_of(frame);
  if (seed.size() != kf.size()) throw std::invalid_argument("seed set has the wrong size");
  const std::vector<std::size_t> carrier = members(upward_closure(kf, seed));

  std::vector<std::string> names;
  for (std::size_t w : carrier) names.push_back(kf.name(w));
  KripkeFrame sub(std::move(names));
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    for (std::size_t j = 0; j < carrier.size(); ++j) {
      if (kf.related(carrier[i], carrier[j])) sub.relate(i, j);
    }
  }

  auto trace = [&](const WorldSet& X) {
    WorldSet t(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) t[i] = X[carrier[i]];
    return t;
  };

  if (const auto* g = std::get_if<GeneralFrame>(&frame)) {
    GeneralFrame out{std::move(sub), {}};
    for (const WorldSet& X : g->admissible) {
      WorldSet t = trace(X);
      if (std::find(out.admissible.begin(), out.admissible.end(), t) == out.admissible.end()) {
        out.admissible.push_back(std::move(t));
      }
    }
    return {std::move(out), carrier};
  }
  return {std::move(sub), carrier};
}

namespace {

const std::vector<WorldSet>* family_of(const Frame& frame) {
  if (const auto* g = std::get_if<GeneralFrame>(&frame)) return &g->admissible;
  return nullptr;
}

WorldSet preimage(const WorldMap& f, const WorldSet& X) {
  WorldSet out(f.image.size());
  for (std::size_t w = 0; w < f.image.size(); ++w) out[w] = X[f.image[w]];
  return out;
}

bool contains(const std::vector<WorldSet>& family, const WorldSet& X) {
  return std::find(family.begin(), family.end(), X) != family.end();
}

struct AdmissibleViolation {
  std::size_t index = 0;
  WorldSet target;
};

// Condition 3. For a general target, index is the position of the offending
// set in its family; for a Kripke target, its least world.
std::optional<AdmissibleViolation> admissible_violation(const Frame& src, const Frame& dst,
                                                        const WorldMap& f) {
  const auto* src_family = family_of(src);
  if (src_family == nullptr) return std::nullopt;
  const std::size_t m = kripke_of(dst).size();
  if (const auto* dst_family = family_of(dst)) {
    for (std::size_t k = 0; k < dst_family->size(); ++k) {
      if (!contains(*src_family, preimage(f, (*dst_family)[k]))) {
        return AdmissibleViolation{k, (*dst_family)[k]};
      }
    }
    return std::nullopt;
  }
  // Preimages of target subsets are exactly the unions of the nonempty
  // fibres, and distinct unions give distinct sets, so a missing union shows
  // up within the first |family| + 1 masks.
  std::vector<std::size_t> hit;
  for (std::size_t v = 0; v < m; ++v) {
    if (std::find(f.image.begin(), f.image.end(), v) != f.image.end()) hit.push_back(v);
  }
  const std::uint64_t limit =
      hit.size() < 63 ? std::uint64_t{1} << hit.size() : std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    WorldSet target(m);
    for (std::size_t i = 0; i < hit.size() && i < 64; ++i) {
      if ((mask >> i) & 1U) target[hit[i]] = true;
    }
    if (!contains(*src_family, preimage(f, target))) {
      const std::size_t least = target.any() ? target.find_first() : 0;
      return AdmissibleViolation{least, std::move(target)};
    }
  }
  return std::nullopt;
}

}  // namespace

PMorphismCheck is_p_morphism(const Frame& src, const Frame& dst, const WorldMap& f) {
  const KripkeFrame& a = kripke_of(src);
  const KripkeFrame& b = kripke_of(dst);
  if (f.image.size() != a.size()) {
    return {false, 0, 0, 0, "map does not cover every source world"};
  }
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (f.image[w] >= b.size()) {
      return {false, 0, w, f.image[w], "image of " + a.name(w) + " is out of range"};
    }
  }
  for (std::size_t w = 0; w < a.size(); ++w) {
    for (std::size_t v : members(a.successors(w))) {
      if (!b.related(f(w), f(v))) {
        return {false, 1, w, v,
                "forth condition fails: " + a.name(w) + " R " + a.name(v) + " but not " +
                    b.name(f(w)) + " R' " + b.name(f(v))};
      }
    }
  }
  for (std::size_t w = 0; w < a.size(); ++w) {
    WorldSet reached(b.size());
    for (std::size_t u : members(a.successors(w))) reached[f(u)] = true;
    WorldSet missing = b.successors(f(w)) - reached;
    if (missing.any()) {
      std::size_t v = missing.find_first();
      return {false, 2, w, v,
              "back condition fails at " + a.name(w) + ": " + b.name(f(w)) + " R' " + b.name(v) +
                  " has no matching successor"};
    }
  }
  if (auto bad = admissible_violation(src, dst, f)) {
    std::string names;
    for (std::size_t v : members(bad->target)) names += (names.empty() ? "" : ",") + b.name(v);
    return {false, 3, bad->index, 0, "preimage of {" + names + "} is not admissible"};
  }
  return {};
}

namespace {

class PMorphismSearch {
 public:
  PMorphismSearch(const Frame& src, const Frame& dst, bool onto, std::uint64_t budget)
      : src_(src), dst_(dst), a_(kripke_of(src)), b_(kripke_of(dst)), onto_(onto),
        budget_(budget), assignment_(a_.size(), 0), hits_(b_.size(), 0),
        ready_at_(a_.size()) {
    // Back condition for w is checkable once w and all its successors are assigned.
    for (std::size_t w = 0; w < a_.size(); ++w) {
      std::size_t last = w;
      for (std::size_t v : members(a_.successors(w))) last = std::max(last, v);
      ready_at_[last].push_back(w);
    }
  }

  std::optional<WorldMap> run() {
    if (a_.size() == 0) {
      if (onto_ && b_.size() > 0) return std::nullopt;
      WorldMap empty;
      if (!admissible_violation(src_, dst_, empty)) return empty;
      return std::nullopt;
    }
    if (b_.size() == 0) return std::nullopt;
    if (extend(0)) return WorldMap{assignment_};
    return std::nullopt;
  }

 private:
  bool extend(std::size_t i) {
    if (i == a_.size()) {
      return !admissible_violation(src_, dst_, WorldMap{assignment_});
    }
    for (std::size_t c = 0; c < b_.size(); ++c) {
      if (++nodes_ > budget_) {
        throw BudgetExceeded("p-morphism search exceeded " + std::to_string(budget_) + " nodes",
                             nodes_, budget_);
      }
      assignment_[i] = c;
      if (!consistent(i)) continue;
      if (hits_[c]++ == 0) ++distinct_hits_;
      const bool can_cover = !onto_ || (b_.size() - distinct_hits_) <= (a_.size() - i - 1);
      if (can_cover && extend(i + 1)) return true;
      if (--hits_[c] == 0) --distinct_hits_;
    }
    return false;
  }

  bool consistent(std::size_t i) const {
    for (std::size_t j = 0; j <= i; ++j) {
      if (a_.related(i, j) && !b_.related(assignment_[i], assignment_[j])) return false;
      if (a_.related(j, i) && !b_.related(assignment_[j], assignment_[i])) return false;
    }
    for (std::size_t w : ready_at_[i]) {
      WorldSet reached(b_.size());
      for (std::size_t u : members(a_.successors(w))) reached[assignment_[u]] = true;
      if (!b_.successors(assignment_[w]).is_subset_of(reached)) return false;
    }
    return true;
  }

  const Frame& src_;
  const Frame& dst_;
  const KripkeFrame& a_;
  const KripkeFrame& b_;
  bool onto_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> assignment_;
  std::vector<std::size_t> hits_;
  std::size_t distinct_hits_ = 0;
  std::vector<std::vector<std::size_t>> ready_at_;
};

}  // namespace

std::optional<WorldMap> find_p_morphism(const Frame& src, const Frame& dst, bool onto,
                                        std::uint64_t budget) {
  return PMorphismSearch(src, dst, onto, budget).run();
}

WorldSet image_of(const WorldMap& f, std::size_t target_size) {
  WorldSet out(target_size);
  for (std::size_t v : f.image) out[v] = true;
  return out;
}

std::string doubled_name(std::string_view base, std::uint8_t tag) {
  return std::string(base) + (tag == 0 ? "@0" : "@1");
}

KripkeFrame double_frame(const KripkeFrame& frame) {
  const std::size_t n = frame.size();
  std::vector<std::string> names;
  names.reserve(2 * n);
  for (const auto& w : frame.worlds()) {
    names.push_back(doubled_name(w, 0));
    names.push_back(doubled_name(w, 1));
  }
  KripkeFrame out(std::move(names));
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t v : members(frame.successors(w))) {
      for (std::uint8_t a = 0; a < 2; ++a) {
        for (std::uint8_t b = 0; b < 2; ++b) {
          out.relate(doubled_index({World{w}, a}), doubled_index({World{v}, b}));
        }
      }
    }
  }
  return out;
}

Frame double_frame(const Frame& frame) {
  if (const auto* g = std::get_if<GeneralFrame>(&frame)) {
    GeneralFrame out{double_frame(g->base), {}};
    const std::size_t n = g->base.size();
    out.admissible.reserve(g->admissible.size() * g->admissible.size());
    for (const WorldSet& X : g->admissible) {
      for (const WorldSet& Y : g->admissible) {
        WorldSet s(2 * n);
        for (std::size_t w = 0; w < n; ++w) {
          s[doubled_index({World{w}, 0})] = X[w];
          s[doubled_index({World{w}, 1})] = Y[w];
        }
        out.admissible.push_back(std::move(s));
      }
    }
    return out;
  }
  return double_frame(std::get<KripkeFrame>(frame));
}

WorldSet lift_to_doubled(const WorldSet& X) {
  WorldSet out(2 * X.size());
  for (std::size_t w = 0; w < X.size(); ++w) {
    out[doubled_index({World{w}, 0})] = X[w];
    out[doubled_index({World{w}, 1})] = X[w];
  }
  return out;
}

namespace {

struct SplitName {
  std::string base;
  std::uint8_t tag;
};

SplitName split_doubled_name(const std::string& name) {
  if (name.size() < 3 || name[name.size() - 2] != '@' ||
      (name.back() != '0' && name.back() != '1')) {
    throw std::invalid_argument("world '" + name + "' is not of the form NAME@0 or NAME@1");
  }
  return {name.substr(0, name.size() - 2), static_cast<std::uint8_t>(name.back() - '0')};
}

}  // namespace

std::vector<std::string> projected_names(const Frame& doubled) {
  const KripkeFrame& kf = kripke_of(doubled);
  std::vector<std::string> bases;
  std::vector<std::array<bool, 2>> seen;
  for (const auto& name : kf.worlds()) {
    SplitName s = split_doubled_name(name);
    auto it = std::find(bases.begin(), bases.end(), s.base);
    std::size_t k = static_cast<std::size_t>(it - bases.begin());
    if (it == bases.end()) {
      bases.push_back(s.base);
      seen.push_back({false, false});
    }
    if (seen[k][s.tag]) throw std::invalid_argument("world '" + name + "' occurs twice");
    seen[k][s.tag] = true;
  }
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (!seen[k][0] || !seen[k][1]) {
      throw std::invalid_argument("world '" + bases[k] + "' lacks one of its two copies");
    }
  }
  return bases;
}

WorldMap projection(const Frame& doubled) {
  const std::vector<std::string> bases = projected_names(doubled);
  WorldMap f;
  for (const auto& name : kripke_of(doubled).worlds()) {
    const std::string base = split_doubled_name(name).base;
    f.image.push_back(
        static_cast<std::size_t>(std::find(bases.begin(), bases.end(), base) - bases.begin()));
  }
  return f;
}

KripkeFrame reflexivize(KripkeFrame frame) {
  for (std::size_t w = 0; w < frame.size(); ++w) frame.relate(w, w, true);
  return frame;
}

Frame reflexivize(Frame frame) {
  KripkeFrame& kf = kripke_of(frame);
  kf = reflexivize(std::move(kf));
  return frame;
}

KripkeFrame irreflexivize(KripkeFrame frame) {
  for (std::size_t w = 0; w < frame.size(); ++w) frame.relate(w, w, false);
  return frame;
}

Frame irreflexivize(Frame frame) {
  KripkeFrame& kf = kripke_of(frame);
  kf = irreflexivize(std::move(kf));
  return frame;
}

Model double_model(const Model& m, std::string_view q) {
  if (m.valuation.find(q) != m.valuation.end()) {
    throw std::invalid_argument("variable '" + std::string(q) + "' is already valued");
  }
  if (!is_valid_variable_name(q)) {
    throw std::invalid_argument("invalid variable name '" + std::string(q) + "'");
  }
  Model out;
  out.frame = double_frame(m.frame);
  const std::size_t n = m.kripke().size();
  for (const auto& [name, set] : m.valuation) out.valuation.emplace(name, lift_to_doubled(set));
  WorldSet tagged(2 * n);
  for (std::size_t w = 0; w < n; ++w) tagged[doubled_index({World{w}, 1})] = true;
  out.valuation.emplace(std::string(q), std::move(tagged));
  if (m.root) out.root = World{doubled_index({*m.root, 0})};
  return out;
}

}  // namespace boxdot
