#include "ilhv/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace ilhv {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Compares two digit runs numerically without overflow.
int compare_numeric(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    const auto nz = s.find_first_not_of('0');
    return nz == std::string_view::npos ? std::string_view{} : s.substr(nz);
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

bool vertex_less(const Vertex& a, const Vertex& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      const int c = compare_numeric(std::string_view(a).substr(i, ie - i),
                                    std::string_view(b).substr(j, je - j));
      if (c != 0) return c < 0;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  if ((i < a.size()) != (j < b.size())) return j < b.size();
  return a < b;
}

Graph Graph::from_edges(std::vector<Vertex> vertices, const std::vector<VertexPair>& edges) {
  for (const auto& [u, v] : edges) {
    if (u == v) throw InputError("self-loop on vertex '" + u + "'");
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end(), vertex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  Graph g;
  g.labels_ = std::move(vertices);
  g.adjacency_.assign(g.labels_.size(), {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : edges) {
    std::size_t a = g.index_of(u);
    std::size_t b = g.index_of(v);
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw InputError("duplicate edge (" + u + "," + v + ")");
    }
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (const auto& [a, b] : g.edges_) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

std::optional<std::size_t> Graph::find(const Vertex& v) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), v, vertex_less);
  if (it == labels_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::index_of(const Vertex& v) const {
  if (auto i = find(v)) return *i;
  throw InputError("unknown vertex '" + v + "'");
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  const auto& adj = adjacency_.at(i);
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::optional<std::size_t> Graph::edge_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{i, j});
  if (it == edges_.end() || *it != std::pair{i, j}) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::connected() const { return largest_component() == size(); }

std::size_t Graph::largest_component() const {
  std::vector<bool> seen(size(), false);
  std::size_t best = 0;
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::size_t count = 0;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      ++count;
      for (std::size_t y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    best = std::max(best, count);
  }
  return best;
}

Graph build_graph(const std::vector<VertexPair>& edge_list) { return Graph::from_edges({}, edge_list); }

Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng) {
  std::vector<Vertex> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<VertexPair> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    used[i][j] = used[j][i] = true;
    edges.emplace_back(labels[j], labels[i]);
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!used[i][j] && extra(rng)) edges.emplace_back(labels[i], labels[j]);
    }
  }
  return Graph::from_edges(std::move(labels), edges);
}

std::vector<std::size_t> distances_from(const Graph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  dist.at(source) = 0;
  std::deque<std::size_t> queue{source};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::size_t distance(const Graph& g, const Vertex& u, const Vertex& v) {
  const std::size_t a = g.index_of(u);
  const std::size_t b = g.index_of(v);
  return distances_from(g, a)[b];
}

std::vector<std::size_t> ball(const Graph& g, std::size_t center, std::size_t radius) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::vector<std::size_t> out{center};
  dist.at(center) = 0;
  std::deque<std::size_t> queue{center};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (dist[x] == radius) continue;
    for (std::size_t y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> ball(const Graph& g, const Vertex& center, std::size_t radius) {
  std::vector<Vertex> out;
  for (std::size_t i : ball(g, g.index_of(center), radius)) out.push_back(g.label(i));
  return out;
}

std::string chain_label(std::size_t r, const Vertex& u, const Vertex& v) {
  return std::to_string(r) + "@(" + u + "," + v + ")";
}

std::size_t InflatedGraph::base_vertex(std::size_t i) const {
  const auto& b = base_of_.at(i);
  if (!b) throw InputError("'" + graph_.label(i) + "' is a chain vertex");
  return *b;
}

const ChainPosition& InflatedGraph::chain_position(std::size_t i) const {
  if (is_power(i)) throw InputError("'" + graph_.label(i) + "' is a power vertex");
  return chain_.at(i);
}

std::size_t InflatedGraph::chain_vertex(std::size_t edge, std::size_t position) const {
  if (position < 1 || position > 2 * d_) throw InputError("chain position out of range");
  return chain_members_.at(edge).at(position - 1);
}

std::size_t InflatedGraph::chain_vertex_from(std::size_t from, std::size_t to, std::size_t steps) const {
  const auto e = base_.edge_index(from, to);
  if (!e) throw InputError("no base edge between '" + base_.label(from) + "' and '" + base_.label(to) + "'");
  const bool forward = from < to;
  return chain_vertex(*e, forward ? steps : 2 * d_ + 1 - steps);
}

std::size_t InflatedGraph::even_side(std::size_t i) const {
  const ChainPosition& c = chain_position(i);
  const auto [a, b] = base_.edges()[c.edge];
  return c.position % 2 == 0 ? a : b;
}

std::size_t InflatedGraph::nearest_power(std::size_t i) const {
  const ChainPosition& c = chain_position(i);
  const auto [a, b] = base_.edges()[c.edge];
  return c.position <= d_ ? a : b;
}

InflatedGraph inflate(const Graph& g, std::size_t d) {
  if (d == 0) throw InputError("inflation distance must be at least 1");
  std::vector<VertexPair> edges;
  for (const auto& [a, b] : g.edges()) {
    const Vertex& u = g.label(a);
    const Vertex& v = g.label(b);
    Vertex prev = u;
    for (std::size_t r = 1; r <= 2 * d; ++r) {
      Vertex cur = chain_label(r, u, v);
      edges.emplace_back(prev, cur);
      prev = std::move(cur);
    }
    edges.emplace_back(prev, v);
  }

  InflatedGraph ig;
  ig.base_ = g;
  ig.d_ = d;
  ig.graph_ = Graph::from_edges(g.vertices(), edges);
  const std::size_t n = ig.graph_.size();
  ig.base_of_.assign(n, std::nullopt);
  ig.chain_.assign(n, ChainPosition{});
  ig.power_.resize(g.size());
  for (std::size_t b = 0; b < g.size(); ++b) {
    const std::size_t i = ig.graph_.index_of(g.label(b));
    ig.power_[b] = i;
    ig.base_of_[i] = b;
  }
  ig.chain_members_.assign(g.edge_count(), {});
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edges()[e];
    for (std::size_t r = 1; r <= 2 * d; ++r) {
      const std::size_t i = ig.graph_.index_of(chain_label(r, g.label(a), g.label(b)));
      ig.chain_[i] = ChainPosition{e, r};
      ig.chain_members_[e].push_back(i);
    }
  }
  return ig;
}

namespace {

std::string dot_id(const Vertex& v) {
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, std::span<const std::size_t> highlight) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool power = std::find(highlight.begin(), highlight.end(), i) != highlight.end();
    os << "  " << dot_id(g.label(i)) << " [shape=" << (power ? "doublecircle" : "circle") << "];\n";
  }
  for (const auto& [a, b] : g.edges()) {
    os << "  " << dot_id(g.label(a)) << " -- " << dot_id(g.label(b)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const InflatedGraph& ig) {
  const auto power = ig.power_vertices();
  return to_dot(ig.graph(), power);
}

}  // namespace ilhv
