#include "ilhv/game.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

namespace ilhv {

void BinaryGame::validate() const {
  const std::size_t n = graph.size();
  if (alphabet.size() != n) throw InputError("alphabet does not cover the parties");
  for (std::size_t a : alphabet) {
    if (a == 0) throw InputError("empty input alphabet");
  }
  for (const GameTerm& t : terms) {
    if (t.inputs.size() != n || t.counted.size() != n) throw InputError("game term does not cover the parties");
    for (std::size_t v = 0; v < n; ++v) {
      if (t.inputs[v] >= alphabet[v]) throw InputError("game term input out of range");
    }
  }
}

Rational binary_game_bound(const BinaryGame& game, std::size_t cap) {
  game.validate();
  const std::size_t n = game.graph.size();

  // Context of party v in term t: mixed-radix index of the inputs it sees.
  std::vector<std::vector<std::size_t>> context(game.terms.size(), std::vector<std::size_t>(n, 0));
  std::vector<std::size_t> contexts(n, 1);
  for (std::size_t v = 0; v < n; ++v) {
    const auto seen = ball(game.graph, v, game.distance);
    for (std::size_t u : seen) contexts[v] *= game.alphabet[u];
    for (std::size_t t = 0; t < game.terms.size(); ++t) {
      std::size_t c = 0;
      for (std::size_t u : seen) c = c * game.alphabet[u] + game.terms[t].inputs[u];
      context[t][v] = c;
    }
  }
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + contexts[v];
  const std::size_t bits = offset[n];
  if (bits > cap || bits >= 63) {
    throw InstanceTooLarge("game has 2^" + std::to_string(bits) + " deterministic strategies");
  }

  long long best = std::numeric_limits<long long>::min();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << bits); ++s) {
    long long value = 0;
    for (std::size_t t = 0; t < game.terms.size(); ++t) {
      bool negative = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (game.terms[t].counted[v]) negative ^= ((s >> (offset[v] + context[t][v])) & 1u) != 0;
      }
      value += negative ? -game.terms[t].coefficient : game.terms[t].coefficient;
    }
    best = std::max(best, value);
  }
  return Rational(best);
}

BinaryGame chsh4_game(std::size_t distance) {
  BinaryGame g;
  g.graph = build_graph({{"1", "2"}, {"2", "3"}, {"3", "4"}});
  g.distance = distance;
  g.alphabet = {2, 1, 1, 2};
  for (std::size_t b = 0; b < 2; ++b) {
    for (std::size_t a = 0; a < 2; ++a) {
      GameTerm t;
      t.coefficient = (a == 1 && b == 1) ? -1 : 1;
      t.inputs = {a, 0, 0, b};
      t.counted = {true, true, b == 1, true};
      g.terms.push_back(std::move(t));
    }
  }
  return g;
}

BinaryGame chsh_game() {
  BinaryGame g;
  g.graph = Graph::from_edges({"A", "B"}, {});
  g.distance = 0;
  g.alphabet = {2, 2};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      g.terms.push_back({(a == 1 && b == 1) ? -1 : 1, {a, b}, {true, true}});
    }
  }
  return g;
}

}  // namespace ilhv
