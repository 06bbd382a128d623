#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ilhv/inflate.hpp"
#include "ilhv/lhv.hpp"
#include "support.hpp"

using namespace ilhv;
using ilhv::testing::fixture;

namespace {

std::vector<std::string> sorted_rows(const MeasurementSet& s) {
  std::vector<std::string> out;
  for (const auto& p : s.pairs) out.push_back(io::pair_string(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(InflatedStabilizer, GeneratorsAreStabilizerElements) {
  const InflatedGraph ig = inflate(ilhv::testing::graph_file("graph5"), 2);
  for (std::size_t u = 0; u < ig.base().size(); ++u) {
    const SignedLetters f = inflated_generator(ig, u);
    EXPECT_EQ(f.phase, 0);
    const auto m = match_stabilizer(ig.graph(), f.letters);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->sign, 1);
    const std::size_t p = ig.power_vertex(u);
    EXPECT_EQ(f.letters[p], PauliLetter::X);
    for (std::size_t w : ig.base().neighbors(u)) EXPECT_EQ(f.letters[ig.power_vertex(w)], PauliLetter::Z);
  }
}

TEST(InflatedStabilizer, PowerLettersAndSignFollowTheBase) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph base = random_connected_graph(3 + trial % 4, 0.4, rng);
    const InflatedGraph ig = inflate(base, 1 + trial % 2);
    std::vector<bool> u(base.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = rng() & 1u;
    const SignedLetters b = subset_to_letters(base, u);
    const SignedLetters f = inflated_stabilizer(ig, u);
    EXPECT_EQ(f.phase, b.phase);
    for (std::size_t i = 0; i < base.size(); ++i) EXPECT_EQ(f.letters[ig.power_vertex(i)], b.letters[i]);
    const auto m = match_stabilizer(ig.graph(), f.letters);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->sign, f.phase == 0 ? 1 : -1);
  }
}

TEST(InflatedMeasurement, ChainsCarryX) {
  const Graph base = ilhv::testing::graph_file("triangle");
  const InflatedGraph ig = inflate(base, 2);
  const Letters m = inflated_measurement(ig, {PauliLetter::Y, PauliLetter::Z, PauliLetter::I});
  for (std::size_t i = 0; i < ig.graph().size(); ++i) {
    if (!ig.is_power(i)) {
      EXPECT_EQ(m[i], PauliLetter::X);
    }
  }
  EXPECT_EQ(m[ig.power_vertex(0)], PauliLetter::Y);
  EXPECT_EQ(m[ig.power_vertex(2)], PauliLetter::I);
}

TEST(Decoy, PairSharesTheShellSubmeasurement) {
  const MeasurementSet base = fixture("ghz_path3");
  const InflatedGraph ig = inflate(base.graph, 1);
  const DecoySpec spec{1, 0, 2, PauliLetter::X, PauliLetter::Y};
  const SignedLetters shell = shell_stabilizer(ig, spec);
  EXPECT_EQ(shell.phase, 0);
  EXPECT_EQ(shell.letters[ig.power_vertex(1)], PauliLetter::I);
  const auto [a, b] = decoy_pair(ig, spec);
  EXPECT_EQ(submeasurement_of(a), shell.letters);
  EXPECT_EQ(submeasurement_of(b), shell.letters);
  EXPECT_EQ(a.mask, b.mask);
  EXPECT_EQ(a.measurement[ig.power_vertex(1)], PauliLetter::X);
  EXPECT_EQ(b.measurement[ig.power_vertex(1)], PauliLetter::Y);
  EXPECT_EQ(expectation(ig.graph(), submeasurement_of(a)), 1);
}

TEST(Decoy, Validation) {
  const Graph base = ilhv::testing::graph_file("path3");
  EXPECT_NO_THROW((DecoySpec{1, 0, 2, PauliLetter::X, PauliLetter::Z}.validate(base)));
  EXPECT_THROW((DecoySpec{1, 0, 0, PauliLetter::X, PauliLetter::Z}.validate(base)), InputError);
  EXPECT_THROW((DecoySpec{0, 1, 2, PauliLetter::X, PauliLetter::Z}.validate(base)), InputError);
  EXPECT_THROW((DecoySpec{1, 0, 2, PauliLetter::X, PauliLetter::X}.validate(base)), InputError);
  EXPECT_THROW((DecoySpec{1, 0, 7, PauliLetter::X, PauliLetter::Y}.validate(base)), InputError);
}

TEST(Build, SevenChainFromGhzPath) {
  const InflatedSet built = build_inflated_set(fixture("ghz_path3"), 1);
  EXPECT_EQ(built.set.pairs.size(), 6u);
  EXPECT_EQ(built.report.base_pairs, 4u);
  EXPECT_EQ(built.report.decoy_pairs, 1u);
  ASSERT_EQ(built.report.decoys.size(), 1u);
  EXPECT_EQ(built.report.decoys[0].center, 1u);
  EXPECT_TRUE(built.report.certificate.overall);
  EXPECT_EQ(sorted_rows(built.set), sorted_rows(fixture("chain7")));
}

TEST(Build, NineCycleFromTriangle) {
  const InflatedSet built = build_inflated_set(fixture("triangle_ghsz"), 1);
  EXPECT_EQ(built.set.pairs.size(), 10u);
  EXPECT_EQ(built.report.decoy_pairs, 3u);
  EXPECT_TRUE(built.report.certificate.overall);
  EXPECT_FALSE(feasible(build_system(built.set)));
  EXPECT_EQ(built.set.graph, fixture("table1_9cycle").graph);
  EXPECT_EQ(sorted_rows(built.set), sorted_rows(fixture("table1_9cycle")));
}

TEST(Build, LargerDistances) {
  for (const char* name : {"ghz_path3", "triangle_ghsz"}) {
    for (std::size_t d = 2; d <= 3; ++d) {
      const MeasurementSet base = fixture(name);
      const InflatedSet built = build_inflated_set(base, d);
      EXPECT_EQ(built.set.d, d);
      EXPECT_TRUE(verify_paradox(built.set).overall) << name << " d=" << d;
      EXPECT_FALSE(feasible(build_system(built.set))) << name << " d=" << d;
      const BellReport b = bell_report(base);
      const BellReport r = bell_report(built.set);
      EXPECT_EQ(r.qm_value, b.qm_value + 2 * built.report.decoy_pairs);
      EXPECT_EQ(r.classical_bound, b.classical_bound + 2 * static_cast<long long>(built.report.decoy_pairs));
    }
  }
}

TEST(Build, StarSetNeedsNoDecoys) {
  for (std::size_t d = 1; d <= 2; ++d) {
    const InflatedSet built = build_inflated_set(fixture("star4_mermin"), d);
    EXPECT_EQ(built.report.decoy_pairs, 0u);
    EXPECT_EQ(built.report.rounds, 0u);
    EXPECT_EQ(built.set.pairs.size(), 4u);
    EXPECT_TRUE(built.report.certificate.overall);
  }
}

TEST(Build, Preconditions) {
  EXPECT_THROW(build_inflated_set(fixture("ghz_path3"), 0), InputError);
  EXPECT_THROW(build_inflated_set(fixture("chain7"), 1), PreconditionError);

  MeasurementSet short_set = fixture("ghz_path3");
  short_set.pairs.pop_back();
  EXPECT_THROW(build_inflated_set(short_set, 1), PreconditionError);

  MeasurementSet edge;
  edge.graph = build_graph({{"1", "2"}});
  edge.pairs.push_back(MeasurementPair::full({PauliLetter::Y, PauliLetter::Y}));
  EXPECT_THROW(build_inflated_set(edge, 1), PreconditionError);
}

TEST(Discover, SmallestSetOnThePath) {
  const auto s = discover_base_set(ilhv::testing::graph_file("path3"));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->pairs.size(), 4u);
  EXPECT_TRUE(verify_paradox(*s).overall);
}

TEST(Discover, NoParadoxOnASingleEdge) {
  EXPECT_FALSE(discover_base_set(build_graph({{"1", "2"}})).has_value());
}

TEST(Discover, RandomGraphsBuildAndCertify) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_connected_graph(3 + trial % 4, 0.3, rng);
    const auto base = discover_base_set(g);
    ASSERT_TRUE(base.has_value());
    EXPECT_TRUE(verify_paradox(*base).overall);
    const InflatedSet built = build_inflated_set(*base, 1 + trial % 2);
    EXPECT_TRUE(verify_paradox(built.set).overall);
    EXPECT_EQ(built.set.pairs.size(), base->pairs.size() + 2 * built.report.decoy_pairs);
  }
}

TEST(Discover, TooLarge) {
  std::mt19937_64 rng(1);
  DiscoveryOptions opt;
  opt.max_vertices = 4;
  EXPECT_THROW(discover_base_set(random_connected_graph(5, 0.2, rng), opt), InstanceTooLarge);
}
