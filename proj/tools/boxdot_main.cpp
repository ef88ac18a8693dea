// boxdot: command-line front end for the modal logic workbench.
//
// Exit status: 0 positive verdict, 1 negative verdict (with certificate),
// 2 usage or format error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "boxdot/formula.hpp"
#include "boxdot/frame_ops.hpp"
#include "boxdot/json_io.hpp"
#include "boxdot/parser.hpp"
#include "boxdot/prover.hpp"
#include "boxdot/semantics.hpp"
#include "boxdot/theorem_engine.hpp"

namespace {

using namespace boxdot;

enum Exit : int { kPositive = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  Budgets budgets;
  std::uint64_t search_budget = kDefaultSearchBudget;
};

void apply_env_budget(Options& opts) {
  const char* env = std::getenv("BOXDOT_BUDGET");
  if (env == nullptr || *env == '\0') return;
  try {
    std::size_t used = 0;
    const std::uint64_t value = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    opts.budgets.valuations = value;
    opts.budgets.tableau_nodes = value;
    opts.search_budget = value;
  } catch (const std::exception&) {
    throw UsageError("BOXDOT_BUDGET must be a non-negative integer");
  }
}

LogicId logic_arg(const std::string& name) {
  if (auto l = parse_logic(name)) return *l;
  throw UsageError("unknown logic '" + name + "' (expected K, T, K4 or S4)");
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse_formula(t));
  return out;
}

void emit(const Options&, const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_translate(const Options& opts, const std::string& text) {
  const Formula f = parse_formula(text);
  const Formula t = boxdot_translate(f);
  if (opts.json) {
    emit(opts, Json{{"formula", to_string(f)}, {"translation", to_string(t)}});
  } else {
    std::cout << to_string(t) << "\n";
  }
  return kPositive;
}

int cmd_eval(const Options& opts, const std::string& model_file, const std::string& world,
             const std::string& text) {
  const Model m = load_model(model_file);
  const Formula f = parse_formula(text);
  auto idx = m.kripke().find(world);
  if (!idx) throw UsageError("unknown world '" + world + "'");
  const bool value = eval(m, World{*idx}, f);
  if (opts.json) {
    emit(opts, Json{{"formula", to_string(f)}, {"world", world}, {"value", value}});
  } else {
    std::cout << (value ? "true" : "false") << "\n";
  }
  return value ? kPositive : kNegative;
}

int cmd_valid(const Options& opts, const std::string& frame_file, const std::string& text) {
  const Frame frame = load_frame(frame_file);
  const Formula f = parse_formula(text);
  const ValidityResult r = valid_in_frame(frame, f, opts.budgets.valuations);
  const KripkeFrame& kf = kripke_of(frame);
  if (r.counter) {
    // Certificate re-check before reporting.
    Model m{frame, r.counter->valuation, r.counter->world};
    if (eval(m, r.counter->world, f)) throw std::logic_error("counter-valuation does not refute");
  }
  if (opts.json) {
    Json doc{{"formula", to_string(f)}, {"valid", r.valid}};
    doc["counter"] = r.counter ? to_json(*r.counter, kf) : Json();
    emit(opts, doc);
  } else if (r.valid) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid\n"
              << "counter-valuation: " << describe_valuation(kf, r.counter->valuation) << "\n"
              << "refuted at: " << kf.name(r.counter->world.index) << "\n";
  }
  return r.valid ? kPositive : kNegative;
}

int cmd_prove(const Options& opts, const std::string& logic_name, const std::string& text) {
  const LogicId logic = logic_arg(logic_name);
  const Formula f = parse_formula(text);
  const ProofResult r = prove(logic, f, opts.budgets.tableau_nodes);
  if (r.verdict == Verdict::refuted && !certify(r, f)) {
    throw std::logic_error("countermodel failed certification");
  }
  if (opts.json) {
    Json doc{{"formula", to_string(f)}};
    for (auto& [k, v] : to_json(r).items()) doc[k] = v;
    emit(opts, doc);
  } else {
    std::cout << to_string(r.verdict) << "\n";
    if (r.countermodel) std::cout << "countermodel: " << to_json(*r.countermodel).dump() << "\n";
  }
  return r.verdict == Verdict::proved ? kPositive : kNegative;
}

int cmd_consequence(const Options& opts, const std::string& logic_name,
                    const std::vector<std::string>& assume, const std::string& goal_text,
                    std::size_t n_max) {
  const LogicId logic = logic_arg(logic_name);
  const std::vector<Formula> X = parse_all(assume);
  const Formula goal = parse_formula(goal_text);
  const auto n = global_consequence(logic, X, goal, n_max, opts.budgets.tableau_nodes);
  std::optional<ProofResult> refutation;
  Formula last_attempt;
  if (!n) {
    last_attempt = implies(box_le_n(n_max, conjunction(X)), goal);
    refutation = prove(logic, last_attempt, opts.budgets.tableau_nodes);
    if (!certify(*refutation, last_attempt)) {
      throw std::logic_error("countermodel failed certification");
    }
  }
  if (opts.json) {
    Json doc{{"logic", std::string(to_string(logic))}, {"goal", to_string(goal)}};
    Json xs = Json::array();
    for (const auto& x : X) xs.push_back(to_string(x));
    doc["assumptions"] = std::move(xs);
    doc["n_max"] = n_max;
    doc["n"] = n ? Json(*n) : Json();
    if (refutation) doc["countermodel"] = to_json(*refutation->countermodel);
    emit(opts, doc);
  } else if (n) {
    std::cout << "n = " << *n << "\n";
  } else {
    std::cout << "no n <= " << n_max << "\n"
              << "countermodel for " << to_string(last_attempt) << ": "
              << to_json(*refutation->countermodel).dump() << "\n";
  }
  return n ? kPositive : kNegative;
}

int cmd_double(const Options& opts, const std::string& frame_file, const std::string& out_file) {
  const Frame doubled = double_frame(load_frame(frame_file));
  const std::string text = to_json(doubled).dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) throw UsageError("cannot write " + out_file);
    out << text;
    if (!opts.json) std::cout << "wrote " << out_file << "\n";
  }
  return kPositive;
}

int cmd_pmorphism(const Options& opts, const std::string& from, const std::string& to,
                  bool onto) {
  const Frame src = load_frame(from);
  const Frame dst = load_frame(to);
  const auto f = find_p_morphism(src, dst, onto, opts.search_budget);
  if (f) {
    PMorphismCheck check = is_p_morphism(src, dst, *f);
    if (!check.ok) throw std::logic_error("search returned an invalid map: " + check.message);
  }
  if (opts.json) {
    emit(opts, Json{{"onto", onto},
                    {"map", f ? to_json(*f, kripke_of(src), kripke_of(dst)) : Json()}});
  } else if (f) {
    for (std::size_t w = 0; w < f->image.size(); ++w) {
      std::cout << kripke_of(src).name(w) << " -> " << kripke_of(dst).name((*f)(w)) << "\n";
    }
  } else {
    std::cout << "none\n";
  }
  return f ? kPositive : kNegative;
}

int cmd_buildx(const Options& opts, const std::string& phi_text, std::string q) {
  const Formula phi = parse_formula(phi_text);
  if (q.empty()) {
    q = fresh_variable(std::span<const Formula>(&phi, 1));
  } else if (!is_valid_variable_name(q)) {
    throw UsageError("invalid variable name '" + q + "'");
  }
  std::vector<Formula> X;
  try {
    X = build_X(phi, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (opts.json) {
    Json xs = Json::array();
    for (const auto& x : X) xs.push_back(to_string(x));
    emit(opts, Json{{"phi", to_string(phi)}, {"q", q}, {"X", xs}});
  } else {
    for (const auto& x : X) std::cout << to_string(x) << "\n";
  }
  return kPositive;
}

void print_witness(const WitnessReport& r) {
  std::cout << "phi    = " << to_string(r.phi) << "\n"
            << "q      = " << r.q << "\n";
  for (const auto& x : r.X) std::cout << "X     += " << to_string(x) << "\n";
  std::cout << "n      = " << r.n << "\n"
            << "chi    = " << to_string(r.chi) << "\n"
            << "chi_bd = " << to_string(r.chi_bd) << "\n";
  const WitnessChecks& c = r.checks;
  auto line = [](std::string_view name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
  };
  line("X_translation_consequence", c.X_translation_consequence);
  line("two_m_satisfies_X", c.two_m_satisfies_X);
  line("two_m_refutes_phi", c.two_m_refutes_phi);
  line("chi_refuted_in_doubled_frame", c.chi_refuted_in_doubled_frame);
  line("doubled_frame_is_L0_frame", c.doubled_frame_is_L0_frame);
  line("chi_bd_proved_in_L", c.chi_bd_proved_in_L);
  if (r.evidence == Evidence::frames_soundness_only) {
    std::cout << "note: L given by frames; theorem checks are soundness-only evidence\n";
  }
  if (r.chi_refuting_world) {
    std::cout << "chi fails at " << r.doubled_model.kripke().name(r.chi_refuting_world->index)
              << " of the doubled model\n";
  }
  if (!r.x_check.holds) {
    std::cout << "X member " << to_string(*r.x_check.failing) << " fails at "
              << r.doubled_model.kripke().name(r.x_check.world->index) << "\n";
  }
}

int report_witness(const Options& opts, const WitnessReport& r) {
  if (opts.json) {
    emit(opts, to_json(r));
  } else {
    print_witness(r);
  }
  return r.checks.all() ? kPositive : kNegative;
}

int cmd_witness(const Options& opts, const std::string& phi_text, const std::string& model_file,
                const std::string& logic_name, const std::vector<std::string>& l_frames,
                const std::vector<std::string>& axiom_texts, const std::string& world,
                std::size_t n_max) {
  const Formula phi = parse_formula(phi_text);
  const Model m = load_model(model_file);
  const std::vector<Formula> axioms = parse_all(axiom_texts);
  LogicSource L;
  if (!logic_name.empty()) {
    L = logic_arg(logic_name);
  } else if (!l_frames.empty()) {
    std::vector<Frame> frames;
    for (const auto& file : l_frames) frames.push_back(load_frame(file));
    L = std::move(frames);
  } else {
    throw UsageError("witness needs --logic or --l-frame");
  }
  World w0;
  if (!world.empty()) {
    auto idx = m.kripke().find(world);
    if (!idx) throw UsageError("unknown world '" + world + "'");
    w0 = World{*idx};
  } else if (m.root) {
    w0 = *m.root;
  } else {
    throw UsageError("model has no \"root\"; pass --world");
  }
  return report_witness(opts, witness(phi, m, w0, L, axioms, n_max, opts.budgets));
}

int cmd_assumption(const Options& opts, const std::vector<std::string>& frame_files,
                   const std::vector<std::string>& axiom_texts) {
  std::vector<std::pair<std::string, Frame>> frames;
  for (const auto& file : frame_files) frames.emplace_back(file, load_frame(file));
  const std::vector<Formula> axioms = parse_all(axiom_texts);
  const AssumptionReport r = check_assumption(frames, axioms, opts.budgets.valuations);
  if (opts.json) {
    emit(opts, to_json(r));
  } else {
    for (const auto& row : r.rows) {
      std::cout << row.name << ": frame " << (row.frame.ok ? "ok" : "FAIL") << ", doubled "
                << (row.doubled.ok ? "ok" : "FAIL") << "\n";
    }
  }
  return r.all() ? kPositive : kNegative;
}

int cmd_demo(const Options& opts, const std::string& which) {
  if (which == "conjecture") return report_witness(opts, conjecture_demo(opts.budgets));
  if (which != "example31") throw UsageError("unknown demo '" + which + "'");
  const Example31Report r = example_31(opts.budgets.valuations);
  if (opts.json) {
    emit(opts, to_json(r));
  } else {
    std::cout << "reflexivize(I2) == C2: " << (r.reflexivization_is_C2 ? "yes" : "no") << "\n"
              << to_string(r.formula) << "\n"
              << "  on I2: " << (r.valid_on_I2 ? "valid" : "invalid") << "\n"
              << "  on C2: " << (r.valid_on_C2 ? "valid" : "invalid");
    if (r.C2_counter) {
      std::cout << ", counter-valuation " << describe_valuation(r.C2, r.C2_counter->valuation)
                << " at " << r.C2.name(r.C2_counter->world.index);
    }
    std::cout << "\n";
    std::size_t agree = 0;
    for (const auto& row : r.corpus) agree += row.translated_valid_on_I2 == row.valid_on_C2;
    std::cout << "I2 |= f^bd iff C2 |= f: " << agree << "/" << r.corpus.size() << " agree\n";
  }
  return r.all() ? kPositive : kNegative;
}

int cmd_selftest(const Options& opts) {
  struct Item {
    std::string name;
    bool ok;
  };
  std::vector<Item> items;
  const Example31Report ex = example_31(opts.budgets.valuations);
  items.push_back({"example31", ex.all()});
  const WitnessReport demo = conjecture_demo(opts.budgets);
  items.push_back({"conjecture witness", demo.checks.all()});
  items.push_back({"translate []p", to_string(boxdot_translate(parse_formula("[]p"))) == "p & []p"});
  {
    const Formula t_axiom = parse_formula("[]p -> p");
    const ProofResult k = prove(LogicId::K, t_axiom, opts.budgets.tableau_nodes);
    items.push_back({"K refutes []p -> p with a certified countermodel",
                     k.verdict == Verdict::refuted && certify(k, t_axiom)});
    items.push_back({"T proves []p -> p",
                     prove(LogicId::T, t_axiom, opts.budgets.tableau_nodes).verdict ==
                         Verdict::proved});
  }
  {
    const Frame c2 = frame_C2();
    const Frame dbl = double_frame(c2);
    items.push_back({"projection from 2(C2) is a p-morphism",
                     is_p_morphism(dbl, c2, projection(dbl)).ok});
  }
  bool all = true;
  Json doc = Json::array();
  for (const auto& item : items) {
    all = all && item.ok;
    if (opts.json) {
      doc.push_back(Json{{"check", item.name}, {"pass", item.ok}});
    } else {
      std::cout << (item.ok ? "PASS " : "FAIL ") << item.name << "\n";
    }
  }
  if (opts.json) emit(opts, Json{{"checks", doc}, {"all_pass", all}});
  return all ? kPositive : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boxdot: modal logic workbench for the boxdot translation"};
  app.require_subcommand(1);
  Options opts;

  std::string formula, file, file2, world, logic, goal, phi, q, out_file, which;
  std::vector<std::string> assume, axioms, l_frames, frames;
  std::size_t n_max = 3;
  bool onto = false;

  auto json_flag = [&](CLI::App* sub) {
    sub->add_flag("--json", opts.json, "Machine-readable JSON output");
    return sub;
  };

  auto* translate = json_flag(app.add_subcommand("translate", "Boxdot translation of a formula"));
  translate->add_option("formula", formula)->required();

  auto* evalc = json_flag(app.add_subcommand("eval", "Evaluate a formula at a world of a model"));
  evalc->add_option("--model", file)->required();
  evalc->add_option("--world", world)->required();
  evalc->add_option("formula", formula)->required();

  auto* valid = json_flag(app.add_subcommand("valid", "Frame validity by exhaustive search"));
  valid->add_option("--frame", file)->required();
  valid->add_option("formula", formula)->required();

  auto* provec = json_flag(app.add_subcommand("prove", "Tableau prover for K, T, K4, S4"));
  provec->add_option("--logic", logic)->required();
  provec->add_option("formula", formula)->required();

  auto* consequence =
      json_flag(app.add_subcommand("consequence", "Least n for global consequence"));
  consequence->add_option("--logic", logic)->required();
  consequence->add_option("--assume", assume)->expected(0, -1);
  consequence->add_option("--goal", goal)->required();
  consequence->add_option("--nmax", n_max);

  auto* doublec = json_flag(app.add_subcommand("double", "Write the doubled frame 2W"));
  doublec->add_option("--frame", file)->required();
  doublec->add_option("-o,--output", out_file);

  auto* pmorph = json_flag(app.add_subcommand("pmorphism", "Search for a p-morphism"));
  pmorph->add_option("--from", file)->required();
  pmorph->add_option("--to", file2)->required();
  pmorph->add_flag("--onto", onto);

  auto* buildx = json_flag(app.add_subcommand("buildx", "Build the formula set X"));
  buildx->add_option("--phi", phi)->required();
  buildx->add_option("--q", q);

  auto* witnessc =
      json_flag(app.add_subcommand("witness", "Run and check the doubling construction"));
  witnessc->add_option("--phi", phi)->required();
  witnessc->add_option("--model", file)->required();
  witnessc->add_option("--logic", logic);
  witnessc->add_option("--l-frame", l_frames, "L-frame file (when L is given by frames)");
  witnessc->add_option("--l0-axiom", axioms)->expected(0, -1);
  witnessc->add_option("--world", world, "Refuting world (default: the model's root)");
  witnessc->add_option("--nmax", n_max);

  auto* assumption =
      json_flag(app.add_subcommand("assumption", "Check that frames and their doubles are L0-frames"));
  assumption->add_option("--frame", frames)->required();
  assumption->add_option("--l0-axiom", axioms)->expected(0, -1);

  auto* demo = json_flag(app.add_subcommand("demo", "Built-in demonstrations"));
  demo->add_option("which", which)->required()->check(CLI::IsMember({"example31", "conjecture"}));

  auto* selftest = json_flag(app.add_subcommand("selftest", "Quick internal checks"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPositive : kUsage;
  }

  try {
    apply_env_budget(opts);
    if (*translate) return cmd_translate(opts, formula);
    if (*evalc) return cmd_eval(opts, file, world, formula);
    if (*valid) return cmd_valid(opts, file, formula);
    if (*provec) return cmd_prove(opts, logic, formula);
    if (*consequence) return cmd_consequence(opts, logic, assume, goal, n_max);
    if (*doublec) return cmd_double(opts, file, out_file);
    if (*pmorph) return cmd_pmorphism(opts, file, file2, onto);
    if (*buildx) return cmd_buildx(opts, phi, q);
    if (*witnessc) {
      if (!witnessc->count("--nmax")) n_max = 4;
      return cmd_witness(opts, phi, file, logic, l_frames, axioms, world, n_max);
    }
    if (*assumption) return cmd_assumption(opts, frames, axioms);
    if (*demo) return cmd_demo(opts, which);
    if (*selftest) return cmd_selftest(opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const WitnessError& e) {
    std::cerr << "witness: " << e.what() << "\n";
    return e.kind() == WitnessError::Kind::precondition ? kUsage : kNegative;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
