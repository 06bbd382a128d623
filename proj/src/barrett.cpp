#include "ilhv/barrett.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace ilhv {

namespace {

std::vector<std::size_t> closed_neighbourhood(const Graph& g, std::size_t v) {
  std::vector<std::size_t> out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool triggered(const std::vector<FlipRule>& rules, std::size_t v, const Letters& m) {
  bool flip = false;
  for (const FlipRule& r : rules) {
    if (r.vertex == v && r.matches(m)) flip = !flip;
  }
  return flip;
}

FlipRule permuted(const FlipRule& r, const std::vector<std::size_t>& perm) {
  FlipRule out;
  out.vertex = perm[r.vertex];
  for (const auto& [u, l] : r.pattern) out.pattern.emplace_back(perm[u], l);
  std::sort(out.pattern.begin(), out.pattern.end());
  return out;
}

void require_small(const Graph& g, std::size_t limit) {
  if (g.size() > limit) throw InstanceTooLarge("graph has more than " + std::to_string(limit) + " vertices");
}

Letters letters_from_code(std::size_t code, std::size_t n) {
  Letters m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = static_cast<PauliLetter>(code & 3u);
    code >>= 2;
  }
  return m;
}

struct BitsHash {
  std::size_t operator()(const gf2::BitVector& b) const {
    std::size_t h = b.size();
    for (std::uint64_t w : b.words()) h = (h ^ w) * 0x100000001b3ull + (h >> 13);
    return h;
  }
};

}  // namespace

bool FlipRule::matches(const Letters& m) const {
  return std::all_of(pattern.begin(), pattern.end(), [&](const auto& e) { return m.at(e.first) == e.second; });
}

Rational barrett_expectation(const BarrettModel& model, const MeasurementPair& pair) {
  const Graph& g = model.graph;
  std::vector<bool> exponent(g.size(), false);
  bool negative = false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const PauliLetter l = pair.measurement.at(v);
    if (!pair.mask.at(v) || l == PauliLetter::I) continue;
    if (z_bit(l)) exponent[v] = !exponent[v];
    if (x_bit(l)) {
      for (std::size_t u : g.neighbors(v)) exponent[u] = !exponent[u];
    }
    if (triggered(model.rules, v, pair.measurement)) negative = !negative;
  }
  if (std::any_of(exponent.begin(), exponent.end(), [](bool b) { return b; })) return Rational(0);
  return Rational(negative ? -1 : 1);
}

Rational barrett_expectation_bruteforce(const BarrettModel& model, const MeasurementPair& pair) {
  const Graph& g = model.graph;
  require_small(g, 20);
  const std::size_t n = g.size();
  long long total = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const auto z = [&](std::size_t v) { return ((bits >> v) & 1u) ? -1 : 1; };
    int product = 1;
    for (std::size_t v = 0; v < n; ++v) {
      const PauliLetter l = pair.measurement.at(v);
      if (!pair.mask.at(v) || l == PauliLetter::I) continue;
      int x = 1;
      for (std::size_t u : g.neighbors(v)) x *= z(u);
      int out = l == PauliLetter::Z ? z(v) : l == PauliLetter::X ? x : x * z(v);
      if (triggered(model.rules, v, pair.measurement)) out = -out;
      product *= out;
    }
    total += product;
  }
  return Rational(total, static_cast<long long>(std::uint64_t{1} << n));
}

std::vector<std::vector<std::size_t>> automorphisms(const Graph& g) {
  require_small(g, 9);
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (const auto& [a, b] : g.edges()) {
      if (!g.adjacent(perm[a], perm[b])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<FlipRule> expand_by_symmetry(const Graph& g, const std::vector<FlipRule>& rules) {
  const auto autos = automorphisms(g);
  std::set<FlipRule> out;
  for (const FlipRule& r : rules) {
    for (const auto& p : autos) out.insert(permuted(r, p));
  }
  return {out.begin(), out.end()};
}

SmallGraphResult compare_with_quantum(const std::string& graph_id, const BarrettModel& model, std::size_t keep) {
  const Graph& g = model.graph;
  require_small(g, 8);
  const std::size_t n = g.size();
  SmallGraphResult res;
  res.graph_id = graph_id;
  res.graph = g;
  res.rules = model.rules;
  MeasurementPair pair;
  pair.mask.resize(n);
  for (std::size_t code = 0; code < (std::size_t{1} << (2 * n)); ++code) {
    pair.measurement = letters_from_code(code, n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) pair.mask[i] = (mask >> i) & 1u;
      const Rational model_value = barrett_expectation(model, pair);
      const int quantum = expectation(g, submeasurement_of(pair));
      ++res.checked;
      if (model_value != Rational(quantum)) {
        if (res.mismatches.size() < keep) res.mismatches.push_back({pair.measurement, pair.mask, model_value, quantum});
        ++res.mismatch_count;
      }
    }
  }
  return res;
}

std::vector<std::pair<std::string, Graph>> small_graphs() {
  const auto g = [](std::vector<VertexPair> e) { return build_graph(e); };
  return {
      {"path3", g({{"1", "2"}, {"2", "3"}})},
      {"triangle", g({{"1", "2"}, {"2", "3"}, {"1", "3"}})},
      {"k4", g({{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}})},
      {"star4", g({{"1", "2"}, {"1", "3"}, {"1", "4"}})},
      {"cycle4", g({{"1", "2"}, {"1", "4"}, {"2", "3"}, {"3", "4"}})},
      {"path4", g({{"1", "2"}, {"2", "3"}, {"3", "4"}})},
      {"diamond", g({{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"3", "4"}})},
      {"paw", g({{"1", "2"}, {"1", "3"}, {"2", "3"}, {"1", "4"}})},
  };
}

FlipRule to_rule(const Graph& g, const RuleRecord& r) {
  FlipRule out;
  out.vertex = g.index_of(r.vertex);
  for (const auto& [v, l] : r.pattern) {
    const std::size_t i = g.index_of(v);
    if (i != out.vertex && !g.adjacent(i, out.vertex)) {
      throw InputError("flip rule for '" + r.vertex + "' mentions non-neighbour '" + v + "'");
    }
    out.pattern.emplace_back(i, l);
  }
  std::sort(out.pattern.begin(), out.pattern.end());
  return out;
}

RuleRecord to_record(const std::string& graph_id, const Graph& g, const FlipRule& r, std::string source) {
  RuleRecord out{graph_id, g.label(r.vertex), {}, std::move(source)};
  for (const auto& [i, l] : r.pattern) out.pattern.emplace_back(g.label(i), l);
  return out;
}

std::vector<FlipRule> search_flip_rules(const Graph& g, const std::vector<FlipRule>& seed_rules) {
  require_small(g, 6);
  const std::size_t n = g.size();
  const auto autos = automorphisms(g);
  const auto seed = expand_by_symmetry(g, seed_rules);

  // One unknown per (vertex, full closed-neighbourhood pattern with a
  // non-identity letter at the vertex).
  std::vector<std::vector<std::size_t>> hood(n);
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    hood[v] = closed_neighbourhood(g, v);
    offset[v + 1] = offset[v] + (std::size_t{1} << (2 * hood[v].size()));
  }
  const auto var_of = [&](std::size_t v, const Letters& m) {
    std::size_t code = 0;
    for (std::size_t i = hood[v].size(); i-- > 0;) code = (code << 2) | static_cast<std::size_t>(m[hood[v][i]]);
    return offset[v] + code;
  };
  const auto rule_of = [&](std::size_t var) {
    const std::size_t v = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), var) - offset.begin()) - 1;
    std::size_t code = var - offset[v];
    FlipRule r;
    r.vertex = v;
    for (std::size_t u : hood[v]) {
      r.pattern.emplace_back(u, static_cast<PauliLetter>(code & 3u));
      code >>= 2;
    }
    return r;
  };
  const std::size_t vars = offset[n];

  // Constraint rows, deduplicated. Each is a set of unknowns plus the parity
  // of flips still needed after the seed rules.
  std::map<std::vector<std::size_t>, bool> constraints;
  MeasurementPair pair;
  pair.mask.resize(n);
  for (std::size_t code = 0; code < (std::size_t{1} << (2 * n)); ++code) {
    pair.measurement = letters_from_code(code, n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) pair.mask[i] = (mask >> i) & 1u;
      const int quantum = expectation(g, submeasurement_of(pair));
      if (quantum == 0) continue;
      std::vector<std::size_t> row;
      bool need = quantum == -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (!pair.mask[v] || pair.measurement[v] == PauliLetter::I) continue;
        row.push_back(var_of(v, pair.measurement));
        if (triggered(seed, v, pair.measurement)) need = !need;
      }
      const auto [it, fresh] = constraints.try_emplace(std::move(row), need);
      if (!fresh && it->second != need) throw Error("flip-rule constraints are contradictory");
    }
  }
  const std::size_t m = constraints.size();
  gf2::BitVector target(m);
  std::vector<gf2::BitVector> column(vars, gf2::BitVector(m));
  {
    std::size_t k = 0;
    for (const auto& [row, need] : constraints) {
      target.set(k, need);
      for (std::size_t c : row) column[c].flip(k);
      ++k;
    }
  }
  if (!target.any()) return {};

  // Symmetry orbits of unknowns and their combined effect.
  std::vector<std::size_t> orbit_of(vars, vars);
  std::vector<std::size_t> representative;
  std::vector<gf2::BitVector> effect;
  for (std::size_t c = 0; c < vars; ++c) {
    if (orbit_of[c] != vars) continue;
    const FlipRule r = rule_of(c);
    if (r.pattern.empty() || std::find_if(r.pattern.begin(), r.pattern.end(), [&](const auto& e) {
                               return e.first == r.vertex && e.second == PauliLetter::I;
                             }) != r.pattern.end()) {
      orbit_of[c] = vars + 1;
      continue;
    }
    const std::size_t id = representative.size();
    gf2::BitVector eff(m);
    for (const auto& p : autos) {
      const FlipRule img = permuted(r, p);
      Letters full(n, PauliLetter::I);
      for (const auto& [u, l] : img.pattern) full[u] = l;
      const std::size_t ic = var_of(img.vertex, full);
      if (orbit_of[ic] == id) continue;
      orbit_of[ic] = id;
      eff ^= column[ic];
    }
    representative.push_back(c);
    effect.push_back(std::move(eff));
  }

  const std::size_t orbits = effect.size();
  std::vector<std::size_t> chosen;
  for (std::size_t o = 0; o < orbits && chosen.empty(); ++o) {
    if (effect[o] == target) chosen = {o};
  }
  if (chosen.empty()) {
    std::unordered_map<gf2::BitVector, std::size_t, BitsHash> single;
    for (std::size_t o = 0; o < orbits; ++o) single.try_emplace(effect[o], o);
    for (std::size_t a = 0; a < orbits && chosen.empty(); ++a) {
      const auto it = single.find(effect[a] ^ target);
      if (it != single.end() && it->second > a) chosen = {a, it->second};
    }
    if (chosen.empty() && orbits <= 4096) {
      std::unordered_map<gf2::BitVector, std::pair<std::size_t, std::size_t>, BitsHash> pairs;
      for (std::size_t a = 0; a < orbits; ++a) {
        for (std::size_t b = a + 1; b < orbits; ++b) pairs.try_emplace(effect[a] ^ effect[b], a, b);
      }
      for (std::size_t c = 0; c < orbits && chosen.empty(); ++c) {
        const auto it = pairs.find(effect[c] ^ target);
        if (it == pairs.end()) continue;
        const auto [a, b] = it->second;
        if (a != c && b != c) {
          chosen = {a, b, c};
          std::sort(chosen.begin(), chosen.end());
        }
      }
    }
  }
  if (chosen.empty()) {
    std::vector<gf2::BitVector> rows(m, gf2::BitVector(orbits));
    for (std::size_t o = 0; o < orbits; ++o) {
      for (std::size_t k = effect[o].next_set(0); k < m; k = effect[o].next_set(k + 1)) rows[k].set(o);
    }
    if (const auto x = gf2::solve(rows, orbits, target)) {
      for (std::size_t o = x->next_set(0); o < orbits; o = x->next_set(o + 1)) chosen.push_back(o);
    }
  }
  if (chosen.empty()) {
    std::vector<gf2::BitVector> rows(m, gf2::BitVector(vars));
    for (std::size_t c = 0; c < vars; ++c) {
      for (std::size_t k = column[c].next_set(0); k < m; k = column[c].next_set(k + 1)) rows[k].set(c);
    }
    const auto x = gf2::solve(rows, vars, target);
    if (!x) throw Error("no flip-rule completion exists");
    std::vector<FlipRule> out;
    for (std::size_t c = x->next_set(0); c < vars; c = x->next_set(c + 1)) out.push_back(rule_of(c));
    return out;
  }
  std::vector<FlipRule> out;
  for (std::size_t o : chosen) out.push_back(rule_of(representative[o]));
  return out;
}

SmallGraphReport verify_small_graphs(const std::vector<RuleRecord>& records) {
  SmallGraphReport report;
  for (const auto& [id, g] : small_graphs()) {
    std::vector<FlipRule> rules;
    for (const RuleRecord& r : records) {
      if (r.graph_id == id) rules.push_back(to_rule(g, r));
    }
    BarrettModel model{g, expand_by_symmetry(g, rules)};
    report.graphs.push_back(compare_with_quantum(id, model));
    report.total_mismatches += report.graphs.back().mismatch_count;
  }
  return report;
}

}  // namespace ilhv
