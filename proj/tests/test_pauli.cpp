#include <gtest/gtest.h>

#include <random>

#include "ilhv/pauli.hpp"
#include "support.hpp"

using namespace ilhv;
using ilhv::testing::dense_pauli;

namespace {

constexpr PauliLetter kLetters[] = {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

Letters random_letters(std::size_t n, std::mt19937_64& rng) {
  Letters l(n);
  for (auto& x : l) x = kLetters[rng() % 4];
  return l;
}

std::vector<bool> subset_bits(std::size_t n, std::uint64_t m) {
  std::vector<bool> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = (m >> i) & 1u;
  return u;
}

}  // namespace

TEST(PauliLetters, MultiplicationMatchesMatrices) {
  for (PauliLetter a : kLetters) {
    for (PauliLetter b : kLetters) {
      int phase = 0;
      const PauliLetter c = multiply_letters(a, b, phase);
      EXPECT_TRUE((dense_pauli({a}) * dense_pauli({b})).isApprox(dense_pauli({c}, phase)))
          << letter_char(a) << letter_char(b);
    }
  }
}

TEST(PauliLetters, ParseAndPrint) {
  EXPECT_EQ(parse_letter('x'), PauliLetter::X);
  EXPECT_EQ(parse_letter('_'), PauliLetter::I);
  EXPECT_EQ(letter_char(PauliLetter::Y), 'Y');
  EXPECT_THROW(parse_letter('Q'), InputError);
}

TEST(PauliString, TextRoundTrip) {
  const PauliString p = PauliString::parse("-i X@1 Y@3 Z@10");
  EXPECT_EQ(p.phase(), 3);
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.at("2"), PauliLetter::I);
  EXPECT_EQ(p.str(), "-i X@1 Y@3 Z@10");
  EXPECT_EQ(PauliString::parse(p.str()), p);
  EXPECT_THROW(PauliString::parse(""), InputError);
  EXPECT_THROW(PauliString::parse("+1 X1"), InputError);
}

TEST(PauliString, ProductAndCommutationMatchMatrices) {
  std::mt19937_64 rng(3);
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}, {"3", "4"}});
  for (int trial = 0; trial < 200; ++trial) {
    const Letters a = random_letters(4, rng);
    const Letters b = random_letters(4, rng);
    const int pa = static_cast<int>(rng() % 4);
    const int pb = static_cast<int>(rng() % 4);
    const PauliString sa = to_pauli_string(g, a, pa);
    const PauliString sb = to_pauli_string(g, b, pb);
    const PauliString prod = sa * sb;
    const auto da = dense_pauli(a, pa);
    const auto db = dense_pauli(b, pb);
    EXPECT_TRUE((da * db).isApprox(dense_pauli(dense_letters(g, prod), prod.phase())));
    EXPECT_EQ(commutes(sa, sb), (da * db).isApprox(db * da));
  }
}

TEST(Stabilizer, GeneratorElement) {
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}});
  EXPECT_EQ(generator_element(g, "2").str(), "+1 Z@1 X@2 Z@3");
  EXPECT_EQ(generator_element(g, "1").str(), "+1 X@1 Z@2");
}

TEST(Stabilizer, PathEndpointsGiveXIX) {
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}});
  const std::vector<Vertex> u{"1", "3"};
  EXPECT_EQ(subset_to_pauli(g, u).str(), "+1 X@1 X@3");
}

TEST(Stabilizer, SubsetProductMatchesGeneratorMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Graph g = random_connected_graph(n, 0.4, rng);
    for (std::uint64_t m = 0; m < (1u << n); ++m) {
      const auto u = subset_bits(n, m);
      ilhv::testing::Dense product = ilhv::testing::Dense::Identity(1 << n, 1 << n);
      for (std::size_t v = 0; v < n; ++v) {
        if (u[v]) product = product * dense_pauli(generator_letters(g, v).letters);
      }
      const SignedLetters s = subset_to_letters(g, u);
      EXPECT_TRUE(product.isApprox(dense_pauli(s.letters, s.phase)));
      EXPECT_TRUE(s.phase == 0 || s.phase == 2);
    }
  }
}

TEST(Stabilizer, MatchInvertsSubsetToLetters) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph g = random_connected_graph(n, 0.3, rng);
    const auto u = subset_bits(n, rng() & ((1u << n) - 1));
    const SignedLetters s = subset_to_letters(g, u);
    const auto m = match_stabilizer(g, s.letters);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->subset, u);
    EXPECT_EQ(m->sign, s.phase == 0 ? 1 : -1);
  }
}

TEST(Stabilizer, NonStabilizerLettersDoNotMatch) {
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}});
  const Letters xxx{PauliLetter::X, PauliLetter::X, PauliLetter::X};
  EXPECT_FALSE(match_stabilizer(g, xxx).has_value());
  EXPECT_EQ(expectation(g, xxx), 0);
  EXPECT_FALSE(pauli_to_subset(g, PauliString::parse("+1 X@1")).has_value());
  EXPECT_THROW(pauli_to_subset(g, PauliString::parse("+1 X@9")), InputError);
}

TEST(Stabilizer, ExpectationMatchesDenseState) {
  for (const Graph& g : {build_graph({{"1", "2"}, {"2", "3"}}), build_graph({{"1", "2"}, {"2", "3"}, {"1", "3"}})}) {
    const auto psi = ilhv::testing::stabilizer_state(g);
    for (std::uint64_t code = 0; code < 64; ++code) {
      Letters l(3);
      for (std::size_t i = 0; i < 3; ++i) l[i] = kLetters[(code >> (2 * i)) & 3u];
      EXPECT_NEAR(ilhv::testing::dense_expectation(psi, l), expectation(g, l), 1e-9);
    }
  }
}

TEST(Stabilizer, TriangleGhszSigns) {
  const Graph g = build_graph({{"1", "2"}, {"2", "3"}, {"1", "3"}});
  const PauliString xxx = PauliString::parse("+1 X@1 X@2 X@3");
  const auto d = pauli_to_subset(g, xxx);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->subset, (std::vector<Vertex>{"1", "2", "3"}));
  EXPECT_EQ(d->sign, -1);
  EXPECT_EQ(expectation(g, xxx), -1);
  EXPECT_EQ(expectation(g, PauliString::parse("+1 X@1 Z@2 Z@3")), 1);
  EXPECT_EQ(expectation(g, PauliString::parse("+1 Y@2 Y@3")), 1);
  EXPECT_EQ(expectation(g, PauliString::parse("+1 Y@1 Y@2 Y@3")), 0);
}
