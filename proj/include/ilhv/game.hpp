#pragma once

#include <cstddef>
#include <vector>

#include "ilhv/graph.hpp"
#include "ilhv/lhv.hpp"

namespace ilhv {

/// One correlator of a binary-output game: the joint input, the parties
/// whose outputs are multiplied, and its coefficient.
struct GameTerm {
  long long coefficient = 1;
  std::vector<std::size_t> inputs;
  std::vector<bool> counted;
};

/// Parties sit on graph vertices. Party v's output is a deterministic +-1
/// function of the inputs of every party within `distance` of v.
struct BinaryGame {
  Graph graph;
  std::size_t distance = 0;
  /// Input alphabet size per party (1 for a fixed setting).
  std::vector<std::size_t> alphabet;
  std::vector<GameTerm> terms;

  void validate() const;
};

/// Exact maximum of sum_t coefficient_t * prod_{v counted} o_v over all
/// deterministic strategies. Throws InstanceTooLarge beyond 2^`cap` strategies.
Rational binary_game_bound(const BinaryGame& game, std::size_t cap = 30);

/// The path 1-2-3-4 game: vertex 1 chooses between two rotated observables,
/// vertex 4 between X and Y, vertices 2 and 3 are fixed; vertex 3 is ignored
/// in the correlators where vertex 4 measures X.
BinaryGame chsh4_game(std::size_t distance = 1);

/// Two unconnected parties playing CHSH.
BinaryGame chsh_game();

}  // namespace ilhv
