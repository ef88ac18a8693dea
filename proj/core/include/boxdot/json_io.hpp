#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "boxdot/frame_ops.hpp"
#include "boxdot/prover.hpp"
#include "boxdot/semantics.hpp"
#include "boxdot/theorem_engine.hpp"

namespace boxdot {

using Json = nlohmann::ordered_json;

/// Malformed frame or model document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Frame/model documents:
//   {"worlds": [...], "relation": [[from, to], ...],
//    "admissible": [[...], ...]?, "valuation": {"p": [...]}?, "root": "w"?}
// "admissible" makes a general frame, "valuation" a model.

Frame frame_from_json(const Json& doc);
Model model_from_json(const Json& doc);
Json to_json(const Frame& frame);
Json to_json(const Model& model);

/// Reads a frame document, ignoring valuation and root.
Frame load_frame(const std::filesystem::path& path);
/// Reads a model document; a missing valuation means every variable is empty.
Model load_model(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);

Json world_set_json(const KripkeFrame& frame, const WorldSet& set);
/// "p={w0}, q={}" with variables in name order.
std::string describe_valuation(const KripkeFrame& frame, const Valuation& valuation);

Json to_json(const Countervaluation& counter, const KripkeFrame& frame);
Json to_json(const ProofResult& result);
Json to_json(const WorldMap& map, const KripkeFrame& src, const KripkeFrame& dst);
Json to_json(const WitnessReport& report);
Json to_json(const Example31Report& report);
Json to_json(const AssumptionReport& report);

}  // namespace boxdot
