#include "boxdot/json_io.hpp"

#include <fstream>
#include <sstream>

namespace boxdot {

namespace {

std::size_t world_index(const KripkeFrame& frame, const Json& name, std::string_view where) {
  if (!name.is_string()) throw FormatError(std::string(where) + ": world names must be strings");
  auto idx = frame.find(name.get<std::string>());
  if (!idx) {
    throw FormatError(std::string(where) + ": unknown world '" + name.get<std::string>() + "'");
  }
  return *idx;
}

WorldSet world_set(const KripkeFrame& frame, const Json& names, std::string_view where) {
  if (!names.is_array()) throw FormatError(std::string(where) + ": expected an array of worlds");
  WorldSet s = frame.empty_set();
  for (const auto& name : names) s[world_index(frame, name, where)] = true;
  return s;
}

}  // namespace

Frame frame_from_json(const Json& doc) {
  if (!doc.is_object()) throw FormatError("frame document must be a JSON object");
  if (!doc.contains("worlds") || !doc["worlds"].is_array()) {
    throw FormatError("missing \"worlds\" array");
  }
  std::vector<std::string> names;
  for (const auto& w : doc["worlds"]) {
    if (!w.is_string()) throw FormatError("worlds: names must be strings");
    names.push_back(w.get<std::string>());
  }
  KripkeFrame frame;
  try {
    frame = KripkeFrame(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("worlds: ") + e.what());
  }

  if (doc.contains("relation")) {
    const Json& rel = doc["relation"];
    if (!rel.is_array()) throw FormatError("relation: expected an array of pairs");
    for (const auto& pair : rel) {
      if (!pair.is_array() || pair.size() != 2) {
        throw FormatError("relation: each entry must be a [from, to] pair");
      }
      frame.relate(world_index(frame, pair[0], "relation"),
                   world_index(frame, pair[1], "relation"));
    }
  }

  if (doc.contains("admissible")) {
    const Json& adm = doc["admissible"];
    if (!adm.is_array()) throw FormatError("admissible: expected an array of world sets");
    GeneralFrame g{std::move(frame), {}};
    for (const auto& set : adm) g.admissible.push_back(world_set(g.base, set, "admissible"));
    return g;
  }
  return frame;
}

Model model_from_json(const Json& doc) {
  Model m;
  m.frame = frame_from_json(doc);
  const KripkeFrame& kf = m.kripke();
  if (doc.contains("valuation")) {
    const Json& val = doc["valuation"];
    if (!val.is_object()) throw FormatError("valuation: expected an object");
    for (const auto& [name, set] : val.items()) {
      if (!is_valid_variable_name(name)) {
        throw FormatError("valuation: invalid variable name '" + name + "'");
      }
      m.valuation.emplace(name, world_set(kf, set, "valuation"));
    }
  }
  if (doc.contains("root")) m.root = World{world_index(kf, doc["root"], "root")};
  try {
    check_model(m);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return m;
}

Json world_set_json(const KripkeFrame& frame, const WorldSet& set) {
  Json out = Json::array();
  for (std::size_t w : members(set)) out.push_back(frame.name(w));
  return out;
}

Json to_json(const Frame& frame) {
  const KripkeFrame& kf = kripke_of(frame);
  Json out;
  out["worlds"] = kf.worlds();
  Json rel = Json::array();
  for (std::size_t w = 0; w < kf.size(); ++w) {
    for (std::size_t v : members(kf.successors(w))) rel.push_back({kf.name(w), kf.name(v)});
  }
  out["relation"] = std::move(rel);
  if (const auto* g = std::get_if<GeneralFrame>(&frame)) {
    Json adm = Json::array();
    for (const WorldSet& X : g->admissible) adm.push_back(world_set_json(kf, X));
    out["admissible"] = std::move(adm);
  }
  return out;
}

Json to_json(const Model& model) {
  Json out = to_json(model.frame);
  Json val = Json::object();
  for (const auto& [name, set] : model.valuation) val[name] = world_set_json(model.kripke(), set);
  out["valuation"] = std::move(val);
  if (model.root) out["root"] = model.kripke().name(model.root->index);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Frame load_frame(const std::filesystem::path& path) {
  return frame_from_json(read_json_file(path));
}

Model load_model(const std::filesystem::path& path) {
  return model_from_json(read_json_file(path));
}

std::string describe_valuation(const KripkeFrame& frame, const Valuation& valuation) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, set] : valuation) {
    if (!first) out << ", ";
    first = false;
    out << name << "={";
    bool first_world = true;
    for (std::size_t w : members(set)) {
      if (!first_world) out << ",";
      first_world = false;
      out << frame.name(w);
    }
    out << "}";
  }
  return out.str();
}

Json to_json(const Countervaluation& counter, const KripkeFrame& frame) {
  Json val = Json::object();
  for (const auto& [name, set] : counter.valuation) val[name] = world_set_json(frame, set);
  Json out;
  out["valuation"] = std::move(val);
  out["world"] = frame.name(counter.world.index);
  return out;
}

Json to_json(const ProofResult& result) {
  Json out;
  out["logic"] = std::string(to_string(result.logic));
  out["verdict"] = std::string(to_string(result.verdict));
  out["stats"] = {{"nodes", result.stats.nodes}, {"depth", result.stats.depth}};
  if (result.countermodel) out["countermodel"] = to_json(*result.countermodel);
  return out;
}

Json to_json(const WorldMap& map, const KripkeFrame& src, const KripkeFrame& dst) {
  Json out = Json::object();
  for (std::size_t w = 0; w < map.image.size(); ++w) out[src.name(w)] = dst.name(map(w));
  return out;
}

namespace {

Json formula_list(std::span<const Formula> formulas) {
  Json out = Json::array();
  for (const Formula& f : formulas) out.push_back(to_string(f));
  return out;
}

}  // namespace

Json to_json(const WitnessReport& report) {
  const KripkeFrame& doubled = report.doubled_model.kripke();
  Json out;
  out["phi"] = to_string(report.phi);
  out["q"] = report.q;
  out["X"] = formula_list(report.X);
  out["n"] = report.n;
  out["chi"] = to_string(report.chi);
  out["chi_bd"] = to_string(report.chi_bd);
  out["source_model"] = to_json(report.source_model);
  out["doubled_model"] = to_json(report.doubled_model);
  const WitnessChecks& c = report.checks;
  out["checks"] = {
      {"X_translation_consequence", c.X_translation_consequence},
      {"two_m_satisfies_X", c.two_m_satisfies_X},
      {"two_m_refutes_phi", c.two_m_refutes_phi},
      {"chi_refuted_in_doubled_frame", c.chi_refuted_in_doubled_frame},
      {"doubled_frame_is_L0_frame", c.doubled_frame_is_L0_frame},
      {"chi_bd_proved_in_L", c.chi_bd_proved_in_L},
  };
  out["evidence"] =
      report.evidence == Evidence::prover ? "prover" : "frames_soundness_only";
  out["X_not_derivable_in_L0"] = report.X_not_derivable_in_L0;
  out["chi_refuting_world"] =
      report.chi_refuting_world ? Json(doubled.name(report.chi_refuting_world->index)) : Json();
  if (!report.x_check.holds) {
    out["X_failure"] = {{"formula", to_string(*report.x_check.failing)},
                        {"world", doubled.name(report.x_check.world->index)}};
  }
  return out;
}

Json to_json(const Example31Report& report) {
  Json out;
  out["I2"] = to_json(Frame(report.I2));
  out["C2"] = to_json(Frame(report.C2));
  out["reflexivization_is_C2"] = report.reflexivization_is_C2;
  out["formula"] = to_string(report.formula);
  out["valid_on_I2"] = report.valid_on_I2;
  out["valid_on_C2"] = report.valid_on_C2;
  out["C2_counter"] = report.C2_counter ? to_json(*report.C2_counter, report.C2) : Json();
  Json rows = Json::array();
  for (const auto& row : report.corpus) {
    Json r;
    r["formula"] = to_string(row.formula);
    r["translated_valid_on_I2"] = row.translated_valid_on_I2;
    r["valid_on_C2"] = row.valid_on_C2;
    rows.push_back(std::move(r));
  }
  out["corpus"] = std::move(rows);
  out["corpus_agrees"] = report.corpus_agrees;
  out["all_pass"] = report.all();
  return out;
}

Json to_json(const AssumptionReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["frame"] = row.name;
    r["is_L0_frame"] = row.frame.ok;
    r["doubled_is_L0_frame"] = row.doubled.ok;
    if (row.doubled.failed_axiom) r["doubled_failed_axiom"] = *row.doubled.failed_axiom;
    rows.push_back(std::move(r));
  }
  Json out;
  out["rows"] = std::move(rows);
  out["all_pass"] = report.all();
  return out;
}

}  // namespace boxdot
