#include <gtest/gtest.h>

#include "boxdot/frame_ops.hpp"
#include "boxdot/json_io.hpp"
#include "boxdot/parser.hpp"
#include "boxdot/theorem_engine.hpp"

#ifndef BOXDOT_TEST_DATA_DIR
#error "BOXDOT_TEST_DATA_DIR must be defined"
#endif

namespace boxdot {
namespace {

const std::filesystem::path kData{BOXDOT_TEST_DATA_DIR};

TEST(JsonIo, LoadsStockFrames) {
  EXPECT_EQ(kripke_of(load_frame(kData / "i2.json")), frame_I2());
  EXPECT_EQ(kripke_of(load_frame(kData / "c2.json")), frame_C2());
  EXPECT_EQ(load_model(kData / "chain_model.json"), reflexive_chain_countermodel());
}

TEST(JsonIo, GeneralFrameDocument) {
  const Frame g = load_frame(kData / "general.json");
  ASSERT_TRUE(is_general(g));
  EXPECT_EQ(std::get<GeneralFrame>(g).admissible.size(), 4u);
  EXPECT_EQ(frame_from_json(to_json(g)), g);
}

TEST(JsonIo, RoundTripsModelsAndDoubles) {
  const Model m = reflexive_chain_countermodel();
  EXPECT_EQ(model_from_json(to_json(m)), m);
  const Model d = double_model(m, "q");
  EXPECT_EQ(model_from_json(to_json(d)), d);
  const Frame dg = double_frame(load_frame(kData / "general.json"));
  EXPECT_EQ(frame_from_json(to_json(dg)), dg);
}

TEST(JsonIo, SchemaKeysAndOrder) {
  const Json doc = to_json(reflexive_chain_countermodel());
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"worlds", "relation", "valuation", "root"}));
  EXPECT_EQ(doc["root"], "w0");
  EXPECT_EQ(doc["valuation"]["p"], Json::parse(R"(["w0","w1"])"));
}

TEST(JsonIo, MalformedDocuments) {
  EXPECT_THROW((void)load_frame(kData / "bad_world.json"), FormatError);
  EXPECT_THROW((void)load_frame(kData / "truncated.json"), FormatError);
  EXPECT_THROW((void)load_frame(kData / "does_not_exist.json"), FormatError);
  EXPECT_THROW((void)frame_from_json(Json::parse(R"({"relation": []})")), FormatError);
  EXPECT_THROW((void)frame_from_json(Json::parse(R"({"worlds": ["a", "a"]})")), FormatError);
  EXPECT_THROW((void)frame_from_json(Json::parse(R"({"worlds": ["a"], "relation": [["a"]]})")),
               FormatError);
  EXPECT_THROW((void)model_from_json(Json::parse(R"({"worlds": ["a"], "valuation": {"P": []}})")),
               FormatError);
  EXPECT_THROW((void)model_from_json(Json::parse(R"({"worlds": ["a"], "root": "b"})")),
               FormatError);
  // Valuations on general frames must be admissible.
  EXPECT_THROW((void)model_from_json(Json::parse(
                   R"({"worlds": ["a", "b"], "admissible": [[], ["a", "b"]],
                       "valuation": {"p": ["a"]}})")),
               FormatError);
}

TEST(JsonIo, WitnessReportKeyOrder) {
  const Json doc = to_json(conjecture_demo());
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"phi", "q", "X", "n", "chi", "chi_bd", "source_model",
                                            "doubled_model", "checks", "evidence",
                                            "X_not_derivable_in_L0", "chi_refuting_world"}));
  EXPECT_EQ(doc["phi"], "[]p -> [][]p");
  for (const auto& [k, v] : doc["checks"].items()) EXPECT_TRUE(v.get<bool>()) << k;
  // Formulas serialize in the parser's syntax.
  EXPECT_EQ(parse_formula(doc["chi_bd"].get<std::string>()),
            boxdot_translate(parse_formula(doc["chi"].get<std::string>())));
}

TEST(JsonIo, DescribeValuation) {
  Valuation v;
  v.emplace("q", make_set(2, {}));
  v.emplace("p", make_set(2, {0, 1}));
  EXPECT_EQ(describe_valuation(frame_C2(), v), "p={w0,w1}, q={}");
}

}  // namespace
}  // namespace boxdot
