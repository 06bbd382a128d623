#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ilhv/error.hpp"

namespace ilhv {

using Vertex = std::string;
using VertexPair = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Natural ordering on vertex labels: digit runs compare numerically, so
/// "2" < "10" and "1" < "1@(1,2)" < "2". Ties fall back to plain comparison.
bool vertex_less(const Vertex& a, const Vertex& b);

/// Simple undirected graph with canonically ordered vertices.
///
/// Vertex indices follow the canonical label order, so every index-based
/// traversal (balls, excerpts, statevector bit order) is deterministic.
/// Edges are stored as index pairs (i, j) with i < j, sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from explicit vertices plus an edge list. Endpoints not in
  /// `vertices` are added. Throws InputError on self-loops and duplicate edges.
  static Graph from_edges(std::vector<Vertex> vertices, const std::vector<VertexPair>& edges);

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Vertex>& vertices() const { return labels_; }
  const Vertex& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(const Vertex& v) const;
  bool contains(const Vertex& v) const { return find(v).has_value(); }
  /// Throws InputError for unknown labels.
  std::size_t index_of(const Vertex& v) const;

  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_.at(i); }
  std::size_t degree(std::size_t i) const { return adjacency_.at(i).size(); }
  bool adjacent(std::size_t i, std::size_t j) const;

  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(std::size_t i, std::size_t j) const;

  bool connected() const;
  /// Size of the largest connected component (0 for the empty graph).
  std::size_t largest_component() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> labels_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Graph from an edge list alone; vertices are the endpoints.
Graph build_graph(const std::vector<VertexPair>& edge_list);

/// BFS distances from `source`, kUnreachable where disconnected.
std::vector<std::size_t> distances_from(const Graph& g, std::size_t source);

std::size_t distance(const Graph& g, const Vertex& u, const Vertex& v);

/// Vertices within distance `radius` of `center` (inclusive), ascending index order.
std::vector<std::size_t> ball(const Graph& g, std::size_t center, std::size_t radius);
std::vector<Vertex> ball(const Graph& g, const Vertex& center, std::size_t radius);

/// Connected graph on labels "1".."n": a uniform random recursive tree plus
/// each remaining pair independently with probability `extra_edge_probability`.
Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng);

/// Label of the chain vertex at position `r` on the chain of edge (u, v).
std::string chain_label(std::size_t r, const Vertex& u, const Vertex& v);

/// Location of a chain vertex: base edge index, position r in [1, 2d] counted
/// from the edge's first endpoint (the canonically smaller label).
struct ChainPosition {
  std::size_t edge = 0;
  std::size_t position = 0;
};

/// A base graph with every edge replaced by a path of 2d chain vertices.
class InflatedGraph {
 public:
  const Graph& base() const { return base_; }
  const Graph& graph() const { return graph_; }
  std::size_t d() const { return d_; }

  /// Inflated index of the power vertex standing for base vertex `b`.
  std::size_t power_vertex(std::size_t b) const { return power_.at(b); }
  bool is_power(std::size_t i) const { return base_of_.at(i).has_value(); }
  /// Base index of a power vertex; throws InputError for chain vertices.
  std::size_t base_vertex(std::size_t i) const;
  /// Chain bookkeeping; throws InputError for power vertices.
  const ChainPosition& chain_position(std::size_t i) const;

  /// Inflated index of the chain vertex at `position` on base edge `edge`.
  std::size_t chain_vertex(std::size_t edge, std::size_t position) const;
  /// Chain vertex between base vertices `from` and `to` at distance `steps` from `from`.
  std::size_t chain_vertex_from(std::size_t from, std::size_t to, std::size_t steps) const;

  /// Base index of the chain end at even distance from chain vertex `i`.
  std::size_t even_side(std::size_t i) const;
  /// Base index of the chain end closest to chain vertex `i`.
  std::size_t nearest_power(std::size_t i) const;

  std::vector<std::size_t> power_vertices() const { return power_; }

 private:
  friend InflatedGraph inflate(const Graph& g, std::size_t d);

  Graph base_;
  std::size_t d_ = 0;
  Graph graph_;
  std::vector<std::size_t> power_;
  std::vector<std::optional<std::size_t>> base_of_;
  std::vector<ChainPosition> chain_;
  std::vector<std::vector<std::size_t>> chain_members_;
};

/// Replaces every base edge (u, v), oriented from the smaller to the larger
/// label, by the path u - 1@(u,v) - ... - 2d@(u,v) - v. Throws InputError for d = 0.
InflatedGraph inflate(const Graph& g, std::size_t d);

/// Graphviz export. Vertices listed in `highlight` are drawn as double circles.
std::string to_dot(const Graph& g, std::span<const std::size_t> highlight = {});
std::string to_dot(const InflatedGraph& ig);

}  // namespace ilhv
