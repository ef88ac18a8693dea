#include <gtest/gtest.h>

#include "boxdot/frame_ops.hpp"
#include "boxdot/parser.hpp"
#include "boxdot/theorem_engine.hpp"
#include "oracles.hpp"

namespace boxdot {
namespace {

using testing::make_frame;

Formula P(std::string_view text) { return parse_formula(text); }

GeneralFrame general_C2() {
  return GeneralFrame{frame_C2(), {make_set(2, {}), make_set(2, {0, 1})}};
}

KripkeFrame single(bool reflexive) {
  KripkeFrame fr({"r"});
  if (reflexive) fr.relate(0, 0);
  return fr;
}

// --- generated subframes ---------------------------------------------------

TEST(GeneratedSubframe, Examples) {
  const GeneratedSubframe a = generated_subframe(make_frame(2, {{0, 1}}), make_set(2, {1}));
  EXPECT_EQ(kripke_of(a.frame), KripkeFrame({"w1"}));
  EXPECT_EQ(a.embedding, (std::vector<std::size_t>{1}));

  const GeneratedSubframe b = generated_subframe(frame_C2(), make_set(2, {0}));
  EXPECT_EQ(kripke_of(b.frame), frame_C2());

  const GeneratedSubframe c = generated_subframe(general_C2(), make_set(2, {0}));
  ASSERT_TRUE(is_general(c.frame));
  EXPECT_EQ(std::get<GeneralFrame>(c.frame), general_C2());
}

TEST(GeneratedSubframe, TracesAdmissibleSets) {
  GeneralFrame g = testing::powerset_frame(make_frame(3, {{0, 1}, {1, 2}}));
  const GeneratedSubframe s = generated_subframe(g, make_set(3, {1}));
  const auto& traced = std::get<GeneralFrame>(s.frame);
  EXPECT_EQ(traced.base.size(), 2u);
  EXPECT_EQ(traced.admissible.size(), 4u);
  EXPECT_TRUE(check_admissible_closure(traced).closed);
}

// --- p-morphisms -----------------------------------------------------------

TEST(IsPMorphism, Examples) {
  const KripkeFrame chain = make_frame(3, {{0, 1}, {1, 2}, {2, 2}});
  EXPECT_TRUE(is_p_morphism(chain, chain, WorldMap{{0, 1, 2}}).ok);

  const Frame dbl = double_frame(Frame(frame_C2()));
  EXPECT_TRUE(is_p_morphism(dbl, frame_C2(), projection(dbl)).ok);

  const PMorphismCheck c =
      is_p_morphism(make_frame(2, {{0, 1}}), single(true), WorldMap{{0, 0}});
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.condition, 2);
  EXPECT_EQ(c.first, 1u);
}

TEST(IsPMorphism, ReportsForthFailureAndMalformedMaps) {
  const PMorphismCheck forth =
      is_p_morphism(make_frame(2, {{0, 1}}), make_frame(2, {{0, 0}, {1, 1}}), WorldMap{{0, 1}});
  EXPECT_FALSE(forth.ok);
  EXPECT_EQ(forth.condition, 1);
  EXPECT_EQ(is_p_morphism(frame_C2(), frame_C2(), WorldMap{{0}}).condition, 0);
  EXPECT_EQ(is_p_morphism(frame_C2(), frame_C2(), WorldMap{{0, 5}}).condition, 0);
}

TEST(IsPMorphism, AdmissiblePreimageCondition) {
  // Identity from general C2 with only {}, W onto the Kripke C2 fails (3):
  // the preimage of {w0} is not admissible.
  const PMorphismCheck c = is_p_morphism(general_C2(), frame_C2(), WorldMap{{0, 1}});
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.condition, 3);
  EXPECT_TRUE(is_p_morphism(general_C2(), single(true), WorldMap{{0, 0}}).ok);
}

TEST(IsPMorphism, AdmissibleUnionsOfFibres) {
  // Both singleton preimages are admissible but their union is not.
  const KripkeFrame two = testing::make_frame(2, {});
  const Frame src = GeneralFrame{two, {make_set(2, {}), make_set(2, {0}), make_set(2, {1})}};
  const PMorphismCheck c = is_p_morphism(src, two, WorldMap{{0, 1}});
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.condition, 3);
  EXPECT_EQ(c.message, "preimage of {w0,w1} is not admissible");
  EXPECT_FALSE(testing::reference_is_p_morphism(src, two, {0, 1}));
  EXPECT_FALSE(find_p_morphism(src, two, true).has_value());
  EXPECT_FALSE(testing::reference_find_p_morphism(src, two, true).has_value());
}

TEST(IsPMorphism, AgreesWithReferenceOnRandomMaps) {
  testing::Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const KripkeFrame a = testing::random_frame(rng, 4, 0.45);
    const KripkeFrame b = testing::random_frame(rng, 3, 0.45);
    std::vector<std::size_t> f(a.size());
    for (auto& x : f) x = testing::draw(rng, b.size());
    ASSERT_EQ(is_p_morphism(a, b, WorldMap{f}).ok, testing::reference_is_p_morphism(a, b, f));
  }
}

GeneralFrame random_general(testing::Rng& rng, std::size_t max_worlds) {
  GeneralFrame g{testing::random_frame(rng, max_worlds, 0.45), {}};
  const std::size_t n = g.base.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (testing::draw(rng, 3) == 0) continue;
    WorldSet s(n);
    for (std::size_t w = 0; w < n; ++w) s[w] = ((mask >> w) & 1U) != 0;
    g.admissible.push_back(std::move(s));
  }
  return g;
}

TEST(IsPMorphism, AgreesWithReferenceOnArbitraryFamilies) {
  testing::Rng rng(23);
  std::size_t rejected_by_family = 0;
  for (int i = 0; i < 3000; ++i) {
    const Frame a = random_general(rng, 4);
    const Frame b = (i % 2) == 0 ? Frame(testing::random_frame(rng, 3, 0.45))
                                 : Frame(random_general(rng, 3));
    std::vector<std::size_t> f(kripke_of(a).size());
    for (auto& x : f) x = testing::draw(rng, kripke_of(b).size());
    const PMorphismCheck c = is_p_morphism(a, b, WorldMap{f});
    ASSERT_EQ(c.ok, testing::reference_is_p_morphism(a, b, f)) << i;
    if (c.condition == 3) ++rejected_by_family;
  }
  EXPECT_GT(rejected_by_family, 0u);
}

TEST(FindPMorphism, Examples) {
  const auto id = find_p_morphism(frame_C2(), frame_C2(), true);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(id->image, (std::vector<std::size_t>{0, 1}));

  const Frame dbl = double_frame(Frame(frame_I2()));
  const auto pi = find_p_morphism(dbl, frame_I2(), true);
  ASSERT_TRUE(pi.has_value());
  EXPECT_EQ(*pi, projection(dbl));
}

TEST(FindPMorphism, I2OntoSingleReflexiveWorldMatchesOracle) {
  const Frame i2 = frame_I2();
  const Frame target = single(true);
  const auto oracle = testing::reference_find_p_morphism(i2, target, true);
  // Every world of I2 has a successor, so the constant map satisfies both
  // conditions; the exhaustive oracle finds it.
  ASSERT_TRUE(oracle.has_value());
  const auto found = find_p_morphism(i2, target, true);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->image, *oracle);
}

TEST(FindPMorphism, AgreesWithExhaustiveOracle) {
  testing::Rng rng(22);
  for (int i = 0; i < 600; ++i) {
    const KripkeFrame a = testing::random_frame(rng, 5, 0.4);
    const KripkeFrame b = testing::random_frame(rng, 3, 0.4);
    const bool onto = (i % 2) == 0;
    const auto expected = testing::reference_find_p_morphism(a, b, onto);
    const auto found = find_p_morphism(a, b, onto);
    ASSERT_EQ(found.has_value(), expected.has_value());
    if (found) {
      ASSERT_EQ(found->image, *expected);
    }
  }
}

TEST(FindPMorphism, GeneralFramesAgreeWithOracle) {
  testing::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const KripkeFrame a = testing::random_frame(rng, 3, 0.5);
    const Frame src = double_frame(Frame(testing::powerset_frame(a)));
    const Frame dst = testing::powerset_frame(a);
    const auto expected = testing::reference_find_p_morphism(src, dst, true);
    const auto found = find_p_morphism(src, dst, true);
    ASSERT_EQ(found.has_value(), expected.has_value());
    if (found) {
      ASSERT_EQ(found->image, *expected);
    }
  }
}

TEST(FindPMorphism, BudgetExceeded) {
  const KripkeFrame big = make_frame(8, {});
  EXPECT_THROW((void)find_p_morphism(big, make_frame(3, {}), true, 10), BudgetExceeded);
}

TEST(FindPMorphism, ImagesAreUpwardClosedAndPreserveValidity) {
  testing::Rng rng(24);
  testing::FormulaShape shape;
  shape.variables = {"p"};
  shape.max_degree = 2;
  std::size_t preserved = 0;
  for (int i = 0; i < 400; ++i) {
    const KripkeFrame a = testing::random_frame(rng, 4, 0.45);
    const KripkeFrame b = testing::random_frame(rng, 3, 0.45);
    const auto f = find_p_morphism(a, b, false);
    if (!f) continue;
    const WorldSet img = image_of(*f, b.size());
    ASSERT_EQ(upward_closure(b, img), img);
    if (img.count() != b.size()) continue;
    for (int k = 0; k < 5; ++k) {
      const Formula g = testing::random_formula(rng, shape);
      if (valid_in_frame(a, g).valid) {
        ASSERT_TRUE(valid_in_frame(b, g).valid) << to_string(g);
        ++preserved;
      }
    }
  }
  EXPECT_GT(preserved, 0u);
}

// --- doubling --------------------------------------------------------------

TEST(Double, Examples) {
  const KripkeFrame d1 = double_frame(single(true));
  EXPECT_EQ(d1.worlds(), (std::vector<std::string>{"r@0", "r@1"}));
  EXPECT_EQ(d1.edge_count(), 4u);

  const KripkeFrame d2 = double_frame(frame_I2());
  ASSERT_EQ(d2.size(), 4u);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) EXPECT_EQ(d2.related(x, y), x / 2 != y / 2);
  }

  const Frame dg = double_frame(Frame(general_C2()));
  const auto& g = std::get<GeneralFrame>(dg);
  const std::vector<WorldSet> expected{make_set(4, {}), make_set(4, {1, 3}), make_set(4, {0, 2}),
                                       make_set(4, {0, 1, 2, 3})};
  EXPECT_EQ(g.admissible, expected);
  EXPECT_TRUE(check_admissible_closure(g).closed);
}

TEST(Double, MatchesPairConstruction) {
  testing::Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    const KripkeFrame fr = testing::random_frame(rng, 6);
    ASSERT_EQ(double_frame(fr), testing::reference_double(fr));
  }
}

TEST(Double, PreservesFrameProperties) {
  testing::Rng rng(26);
  for (int i = 0; i < 500; ++i) {
    const KripkeFrame fr = testing::random_frame(rng, 8);
    const KripkeFrame d = double_frame(fr);
    if (is_reflexive(fr)) {
      ASSERT_TRUE(is_reflexive(d));
    }
    if (is_symmetric(fr)) {
      ASSERT_TRUE(is_symmetric(d));
    }
    if (is_transitive(fr)) {
      ASSERT_TRUE(is_transitive(d));
    }
    if (is_serial(fr)) {
      ASSERT_TRUE(is_serial(d));
    }
    if (is_total(fr)) {
      ASSERT_TRUE(is_total(d));
    }
  }
}

TEST(Projection, Examples) {
  const Frame d = double_frame(Frame(frame_C2()));
  EXPECT_EQ(projection(d).image, (std::vector<std::size_t>{0, 0, 1, 1}));
  EXPECT_EQ(projected_names(d), (std::vector<std::string>{"w0", "w1"}));

  const Frame d1 = double_frame(Frame(single(false)));
  EXPECT_TRUE(is_p_morphism(d1, single(false), projection(d1)).ok);

  const Frame dg = double_frame(Frame(general_C2()));
  EXPECT_TRUE(is_p_morphism(dg, general_C2(), projection(dg)).ok);
}

TEST(Projection, RejectsUndoubledNames) {
  EXPECT_THROW((void)projection(Frame(frame_C2())), std::invalid_argument);
  EXPECT_THROW((void)projection(Frame(KripkeFrame({"a@2"}))), std::invalid_argument);
}

TEST(Projection, CertifiedOnRandomFrames) {
  testing::Rng rng(27);
  for (int i = 0; i < 300; ++i) {
    const KripkeFrame fr = testing::random_frame(rng, 8);
    const Frame d = double_frame(Frame(fr));
    ASSERT_TRUE(is_p_morphism(d, fr, projection(d)).ok);
  }
}

TEST(Reflexivize, Examples) {
  EXPECT_EQ(reflexivize(frame_I2()), frame_C2());
  EXPECT_EQ(irreflexivize(frame_C2()), frame_I2());
  const KripkeFrame refl = kripke_of(reflexive_chain_countermodel().frame);
  EXPECT_EQ(reflexivize(refl), refl);
}

TEST(Reflexivize, RoundTripOnReflexiveFrames) {
  testing::Rng rng(28);
  for (int i = 0; i < 300; ++i) {
    const KripkeFrame fr = reflexivize(testing::random_frame(rng, 6));
    ASSERT_EQ(reflexivize(irreflexivize(fr)), fr);
  }
}

TEST(DoubleModel, Examples) {
  Model m{single(true), {}, World{0}};
  m.valuation.emplace("p", make_set(1, {0}));
  const Model d = double_model(m, "q");
  EXPECT_EQ(d.kripke(), double_frame(single(true)));
  EXPECT_EQ(d.valuation.at("p"), make_set(2, {0, 1}));
  EXPECT_EQ(d.valuation.at("q"), make_set(2, {1}));
  EXPECT_EQ(d.root, World{0});

  const Model chain = reflexive_chain_countermodel();
  const Model dc = double_model(chain, "q");
  const Formula phi = P("[]p -> [][]p");
  EXPECT_FALSE(eval(dc, World{doubled_index({World{0}, 0})}, phi));
  EXPECT_EQ(eval(dc, World{doubled_index({World{0}, 0})}, phi), eval(chain, World{0}, phi));
  EXPECT_TRUE(eval(dc, World{doubled_index({World{0}, 1})}, P("q")));
}

TEST(DoubleModel, RejectsValuedQ) {
  Model m{single(true), {}, std::nullopt};
  m.valuation.emplace("q", make_set(1, {}));
  EXPECT_THROW((void)double_model(m, "q"), std::invalid_argument);
}

TEST(DoubleModel, TruthLemma) {
  testing::Rng rng(29);
  testing::FormulaShape shape;
  shape.variables = {"p", "r"};
  for (int i = 0; i < 300; ++i) {
    const Model m = testing::random_model(rng, 6, {"p", "r"});
    const Formula f = testing::random_formula(rng, shape);
    const Model d = double_model(m, "q");
    for (std::size_t w = 0; w < m.kripke().size(); ++w) {
      const bool base = eval(m, World{w}, f);
      for (std::uint8_t a = 0; a < 2; ++a) {
        ASSERT_EQ(eval(d, World{doubled_index({World{w}, a})}, f), base) << to_string(f);
      }
    }
  }
}

}  // namespace
}  // namespace boxdot
