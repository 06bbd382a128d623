#include <gtest/gtest.h>

#include <map>
#include <random>

#include "ilhv/barrett.hpp"
#include "support.hpp"

using namespace ilhv;

namespace {

constexpr PauliLetter kLetters[] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

std::vector<RuleRecord> bundled_rules() {
  return io::rules_from_json(io::read_json(ilhv::testing::data_dir() / "flip_rules.json"));
}

std::vector<FlipRule> rules_for(const std::string& id, const Graph& g, const std::string& source = "") {
  std::vector<FlipRule> out;
  for (const RuleRecord& r : bundled_rules()) {
    if (r.graph_id == id && (source.empty() || r.source == source)) out.push_back(to_rule(g, r));
  }
  return out;
}

}  // namespace

TEST(Barrett, UnflippedModelMatchesPositiveStabilizers) {
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}});
  const BarrettModel model{g, {}};
  const auto z = [](std::size_t n) { return std::vector<bool>(n, true); };
  EXPECT_EQ(barrett_expectation(model, {{PauliLetter::X, PauliLetter::Z, PauliLetter::I}, z(3), ""}), Rational(1));
  EXPECT_EQ(barrett_expectation(model, {{PauliLetter::X, PauliLetter::I, PauliLetter::X}, z(3), ""}), Rational(1));
  EXPECT_EQ(barrett_expectation(model, {{PauliLetter::X, PauliLetter::X, PauliLetter::X}, z(3), ""}), Rational(0));
  // Y1 X2 Y3 has quantum sign -1; the bare model answers +1.
  EXPECT_EQ(barrett_expectation(model, {{PauliLetter::Y, PauliLetter::X, PauliLetter::Y}, z(3), ""}), Rational(1));
  EXPECT_EQ(expectation(g, Letters{PauliLetter::Y, PauliLetter::X, PauliLetter::Y}), -1);
}

TEST(Barrett, ExactExpectationMatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (const auto& [id, g] : small_graphs()) {
    const BarrettModel model{g, expand_by_symmetry(g, rules_for(id, g))};
    for (int trial = 0; trial < 200; ++trial) {
      MeasurementPair p;
      for (std::size_t i = 0; i < g.size(); ++i) {
        p.measurement.push_back(kLetters[rng() % 4]);
        p.mask.push_back(rng() & 1u);
      }
      EXPECT_EQ(barrett_expectation(model, p), barrett_expectation_bruteforce(model, p)) << id;
    }
  }
}

TEST(Barrett, AutomorphismCounts) {
  const std::map<std::string, std::size_t> expected{{"path3", 2}, {"triangle", 6}, {"k4", 24}, {"star4", 6},
                                                    {"cycle4", 8}, {"path4", 2},   {"diamond", 4}, {"paw", 2}};
  for (const auto& [id, g] : small_graphs()) {
    const auto autos = automorphisms(g);
    EXPECT_EQ(autos.size(), expected.at(id)) << id;
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(autos[0][i], i);
  }
}

TEST(Barrett, SmallGraphsAreConnectedAndComplete) {
  const auto graphs = small_graphs();
  EXPECT_EQ(graphs.size(), 8u);
  for (const auto& [id, g] : graphs) {
    EXPECT_TRUE(g.connected()) << id;
    EXPECT_TRUE(g.size() == 3 || g.size() == 4) << id;
  }
}

TEST(Barrett, BundledRulesGiveZeroMismatches) {
  const SmallGraphReport report = verify_small_graphs(bundled_rules());
  EXPECT_EQ(report.graphs.size(), 8u);
  EXPECT_EQ(report.total_mismatches, 0u);
  for (const auto& r : report.graphs) {
    EXPECT_EQ(r.checked, std::size_t{1} << (3 * r.graph.size())) << r.graph_id;
    EXPECT_EQ(r.mismatch_count, 0u) << r.graph_id;
  }
}

TEST(Barrett, FigureRulesAloneLeaveGaps) {
  const std::map<std::string, std::size_t> expected{{"path3", 0}, {"triangle", 0}, {"k4", 0}, {"cycle4", 0},
                                                    {"path4", 0}, {"star4", 1},    {"diamond", 10}};
  for (const auto& [id, g] : small_graphs()) {
    if (!expected.contains(id)) continue;
    const BarrettModel model{g, expand_by_symmetry(g, rules_for(id, g, "figure"))};
    EXPECT_EQ(compare_with_quantum(id, model).mismatch_count, expected.at(id)) << id;
  }
}

TEST(Barrett, SearchCompletesTheFigureRules) {
  for (const auto& [id, g] : small_graphs()) {
    std::vector<FlipRule> rules = rules_for(id, g, "figure");
    const auto added = search_flip_rules(g, rules);
    rules.insert(rules.end(), added.begin(), added.end());
    EXPECT_EQ(compare_with_quantum(id, {g, expand_by_symmetry(g, rules)}).mismatch_count, 0u) << id;
  }
}

TEST(Barrett, SearchFromNothingOnThePath) {
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}});
  const auto found = search_flip_rules(g, {});
  ASSERT_FALSE(found.empty());
  EXPECT_EQ(compare_with_quantum("path3", {g, expand_by_symmetry(g, found)}).mismatch_count, 0u);
}

TEST(Barrett, SymmetryExpansionOnTheTriangle) {
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}, {"1", "3"}});
  const FlipRule r{0, {{0, PauliLetter::X}, {1, PauliLetter::X}, {2, PauliLetter::X}}};
  const auto all = expand_by_symmetry(g, {r});
  EXPECT_EQ(all.size(), 3u);
  EXPECT_TRUE(r.matches({PauliLetter::X, PauliLetter::X, PauliLetter::X}));
  EXPECT_FALSE(r.matches({PauliLetter::X, PauliLetter::X, PauliLetter::Y}));
}

TEST(Barrett, RecordRoundTrip) {
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}});
  const FlipRule r{1, {{0, PauliLetter::Y}, {1, PauliLetter::X}, {2, PauliLetter::Y}}};
  const RuleRecord rec = to_record("path3", g, r, "test");
  EXPECT_EQ(rec.vertex, "2");
  EXPECT_EQ(to_rule(g, rec), r);
}
