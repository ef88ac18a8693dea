#include "boxdot/semantics.hpp"

#include <algorithm>
#include <limits>

namespace boxdot {

KripkeFrame::KripkeFrame(std::vector<std::string> worlds) : worlds_(std::move(worlds)) {
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i].empty()) throw std::invalid_argument("empty world name");
    if (!index_.emplace(worlds_[i], i).second) {
      throw std::invalid_argument("duplicate world name '" + worlds_[i] + "'");
    }
  }
  successors_.assign(worlds_.size(), WorldSet(worlds_.size()));
}

std::optional<std::size_t> KripkeFrame::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void KripkeFrame::relate(std::size_t from, std::size_t to, bool value) {
  if (from >= size() || to >= size()) throw std::out_of_range("world index out of range");
  successors_[from][to] = value;
}

std::size_t KripkeFrame::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : successors_) n += s.count();
  return n;
}

WorldSet KripkeFrame::full_set() const {
  WorldSet s(size());
  s.set();
  return s;
}

const KripkeFrame& kripke_of(const Frame& frame) {
  return std::visit(
      [](const auto& f) -> const KripkeFrame& {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, KripkeFrame>) {
          return f;
        } else {
          return f.base;
        }
      },
      frame);
}

KripkeFrame& kripke_of(Frame& frame) {
  return const_cast<KripkeFrame&>(kripke_of(std::as_const(frame)));
}

bool is_general(const Frame& frame) { return std::holds_alternative<GeneralFrame>(frame); }

void check_model(const Model& m) {
  const std::size_t n = m.kripke().size();
  for (const auto& [name, set] : m.valuation) {
    if (set.size() != n) {
      throw std::invalid_argument("valuation of '" + name + "' has the wrong size");
    }
    if (const auto* g = std::get_if<GeneralFrame>(&m.frame)) {
      if (std::find(g->admissible.begin(), g->admissible.end(), set) == g->admissible.end()) {
        throw std::invalid_argument("valuation of '" + name + "' is not admissible");
      }
    }
  }
  if (m.root && m.root->index >= n) throw std::invalid_argument("root world out of range");
}

WorldSet box_of_set(const KripkeFrame& frame, const WorldSet& X) {
  WorldSet out(frame.size());
  for (std::size_t w = 0; w < frame.size(); ++w) {
    out[w] = frame.successors(w).is_subset_of(X);
  }
  return out;
}

namespace {

WorldSet dia_of_set(const KripkeFrame& frame, const WorldSet& X) {
  WorldSet out(frame.size());
  for (std::size_t w = 0; w < frame.size(); ++w) out[w] = frame.successors(w).intersects(X);
  return out;
}

}  // namespace

WorldSet truth_set(const KripkeFrame& frame, const Valuation& valuation, const Formula& f) {
  switch (f.connective()) {
    case Connective::Var: {
      auto it = valuation.find(f.name());
      return it == valuation.end() ? frame.empty_set() : it->second;
    }
    case Connective::Falsum: return frame.empty_set();
    case Connective::Verum: return frame.full_set();
    case Connective::Not: return ~truth_set(frame, valuation, f.arg());
    case Connective::And:
      return truth_set(frame, valuation, f.lhs()) & truth_set(frame, valuation, f.rhs());
    case Connective::Or:
      return truth_set(frame, valuation, f.lhs()) | truth_set(frame, valuation, f.rhs());
    case Connective::Imp:
      return ~truth_set(frame, valuation, f.lhs()) | truth_set(frame, valuation, f.rhs());
    case Connective::Iff:
      return ~(truth_set(frame, valuation, f.lhs()) ^ truth_set(frame, valuation, f.rhs()));
    case Connective::Box: return box_of_set(frame, truth_set(frame, valuation, f.arg()));
    case Connective::Dia: return dia_of_set(frame, truth_set(frame, valuation, f.arg()));
  }
  throw std::logic_error("unreachable connective");
}

WorldSet truth_set(const Model& m, const Formula& f) {
  return truth_set(m.kripke(), m.valuation, f);
}

bool eval(const Model& m, World w, const Formula& f) {
  if (w.index >= m.kripke().size()) throw std::out_of_range("world index out of range");
  return truth_set(m, f)[w.index];
}

bool holds_in_model(const Model& m, const Formula& f) { return truth_set(m, f).all(); }

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && acc > kSaturated / base) return kSaturated;
    acc *= base;
  }
  return acc;
}

WorldSet set_from_mask(std::size_t n, std::uint64_t mask) {
  WorldSet s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = (mask >> j) & 1U;
  return s;
}

}  // namespace

ValidityResult valid_in_frame(const Frame& frame, const Formula& f, std::uint64_t budget) {
  const KripkeFrame& kf = kripke_of(frame);
  const auto var_set = variables(f);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const auto* general = std::get_if<GeneralFrame>(&frame);

  const std::uint64_t per_variable =
      general ? general->admissible.size()
              : (kf.size() >= 64 ? kSaturated : std::uint64_t{1} << kf.size());
  const std::uint64_t total = saturating_pow(per_variable, vars.size());
  if (total > budget || (per_variable == kSaturated && !vars.empty())) {
    throw BudgetExceeded("validity check needs " + std::to_string(total) +
                             " valuations, budget is " + std::to_string(budget),
                         total, budget);
  }
  if (per_variable == 0 && !vars.empty()) return {};

  std::vector<std::uint64_t> digit(vars.size(), 0);
  Valuation valuation;
  auto candidate = [&](std::uint64_t d) {
    return general ? general->admissible[d] : set_from_mask(kf.size(), d);
  };
  for (std::size_t i = 0; i < vars.size(); ++i) valuation[vars[i]] = candidate(0);

  while (true) {
    WorldSet truth = truth_set(kf, valuation, f);
    if (!truth.all()) {
      std::size_t w = 0;
      while (truth[w]) ++w;
      return {false, Countervaluation{valuation, World{w}}};
    }
    // Odometer: the last variable varies fastest.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++digit[i] < per_variable) {
        valuation[vars[i]] = candidate(digit[i]);
        break;
      }
      digit[i] = 0;
      valuation[vars[i]] = candidate(0);
      if (i == 0) return {};
    }
    if (vars.empty()) return {};
  }
}

LFrameResult is_L_frame(const Frame& frame, std::span<const Formula> axioms,
                        std::uint64_t budget) {
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    ValidityResult r = valid_in_frame(frame, axioms[i], budget);
    if (!r.valid) return {false, i, std::move(r.counter)};
  }
  return {};
}

ClosureResult check_admissible_closure(const GeneralFrame& frame) {
  const auto& family = frame.admissible;
  auto contains = [&](const WorldSet& s) {
    return std::find(family.begin(), family.end(), s) != family.end();
  };
  if (family.empty()) {
    return {false, frame.base.empty_set(), "admissible family is empty"};
  }
  for (const WorldSet& x : family) {
    if (x.size() != frame.base.size()) {
      return {false, x, "admissible set has the wrong size"};
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const WorldSet& x = family[i];
    if (WorldSet c = ~x; !contains(c)) {
      return {false, c, "complement of admissible set #" + std::to_string(i) + " is missing"};
    }
    if (WorldSet b = box_of_set(frame.base, x); !contains(b)) {
      return {false, b, "box of admissible set #" + std::to_string(i) + " is missing"};
    }
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (WorldSet m = x & family[j]; !contains(m)) {
        return {false, m,
                "intersection of admissible sets #" + std::to_string(i) + " and #" +
                    std::to_string(j) + " is missing"};
      }
    }
  }
  return {};
}

std::vector<WorldSet> clusters(const KripkeFrame& frame) {
  if (!is_transitive(frame)) {
    throw std::invalid_argument("clusters are only defined for transitive frames");
  }
  const std::size_t n = frame.size();
  std::vector<WorldSet> out;
  WorldSet assigned(n);
  for (std::size_t w = 0; w < n; ++w) {
    if (assigned[w]) continue;
    WorldSet cls(n);
    cls[w] = true;
    for (std::size_t v = w + 1; v < n; ++v) {
      if (frame.related(w, v) && frame.related(v, w)) cls[v] = true;
    }
    assigned |= cls;
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_reflexive(const KripkeFrame& frame) {
  for (std::size_t w = 0; w < frame.size(); ++w) {
    if (!frame.related(w, w)) return false;
  }
  return true;
}

bool is_irreflexive(const KripkeFrame& frame) {
  for (std::size_t w = 0; w < frame.size(); ++w) {
    if (frame.related(w, w)) return false;
  }
  return true;
}

bool is_symmetric(const KripkeFrame& frame) {
  for (std::size_t w = 0; w < frame.size(); ++w) {
    for (std::size_t v = 0; v < frame.size(); ++v) {
      if (frame.related(w, v) && !frame.related(v, w)) return false;
    }
  }
  return true;
}

bool is_transitive(const KripkeFrame& frame) {
  for (std::size_t w = 0; w < frame.size(); ++w) {
    for (std::size_t v = 0; v < frame.size(); ++v) {
      if (frame.related(w, v) && !frame.successors(v).is_subset_of(frame.successors(w))) {
        return false;
      }
    }
  }
  return true;
}

bool is_serial(const KripkeFrame& frame) {
  for (std::size_t w = 0; w < frame.size(); ++w) {
    if (frame.successors(w).none()) return false;
  }
  return true;
}

bool is_total(const KripkeFrame& frame) {
  for (std::size_t w = 0; w < frame.size(); ++w) {
    for (std::size_t v = w; v < frame.size(); ++v) {
      if (!frame.related(w, v) && !frame.related(v, w)) return false;
    }
  }
  return true;
}

WorldSet make_set(std::size_t frame_size, std::initializer_list<std::size_t> members) {
  WorldSet s(frame_size);
  for (std::size_t m : members) s.set(m);
  return s;
}

std::vector<std::size_t> members(const WorldSet& set) {
  std::vector<std::size_t> out;
  for (auto i = set.find_first(); i != WorldSet::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace boxdot
