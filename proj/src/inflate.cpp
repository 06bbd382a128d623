#include "ilhv/inflate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "ilhv/gf2.hpp"

namespace ilhv {

namespace {

constexpr std::array<PauliLetter, 4> kColumnOrder = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z, PauliLetter::I};

std::size_t column_of(PauliLetter l) {
  return static_cast<std::size_t>(std::find(kColumnOrder.begin(), kColumnOrder.end(), l) - kColumnOrder.begin());
}

std::string letter_name(PauliLetter l) { return std::string(1, letter_char(l)); }

// Odd excerpt class at a chain vertex next to power vertex `center`, on the
// chain towards `far`, with `letter` measured at the centre.
struct FailureClass {
  std::size_t center;
  std::size_t far;
  PauliLetter letter;
  auto key() const { return std::tuple(center, far, static_cast<int>(letter)); }
  bool operator<(const FailureClass& o) const { return key() < o.key(); }
};

std::set<FailureClass> classify(const InflatedGraph& ig, const ParadoxCertificate& cert) {
  std::set<FailureClass> out;
  const Graph& g = ig.graph();
  for (const ExcerptFailure& f : cert.failures) {
    if (ig.is_power(f.vertex)) {
      throw RepairError("excerpt parity fails at power vertex '" + g.label(f.vertex) + "'");
    }
    const std::size_t center = ig.nearest_power(f.vertex);
    const auto [a, b] = ig.base().edges()[ig.chain_position(f.vertex).edge];
    const std::size_t far = center == a ? b : a;
    const auto nb = ball(g, f.vertex, ig.d());
    const auto pos = std::find(nb.begin(), nb.end(), ig.power_vertex(center)) - nb.begin();
    out.insert({center, far, f.excerpt.at(static_cast<std::size_t>(pos))});
  }
  return out;
}

// Splits the odd cells around one centre into rectangles {x, r*} x {s, c*}
// anchored on the last odd row and column.
std::vector<DecoySpec> decompose(const Graph& base, std::size_t center, const std::set<FailureClass>& classes) {
  std::map<std::size_t, std::array<bool, 4>> cells;
  for (const FailureClass& c : classes) {
    if (c.center == center) cells[c.far][column_of(c.letter)] ^= true;
  }
  std::optional<std::size_t> anchor_row;
  std::optional<std::size_t> anchor_col;
  for (const auto& [x, row] : cells) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (!row[j]) continue;
      anchor_row = x;
      if (!anchor_col || j > *anchor_col) anchor_col = j;
    }
  }
  if (!anchor_row) throw RepairError("no odd excerpt class around '" + base.label(center) + "'");
  std::vector<DecoySpec> out;
  for (const auto& [x, row] : cells) {
    if (x == *anchor_row) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (!row[j] || j == *anchor_col) continue;
      DecoySpec spec;
      spec.center = center;
      spec.v1 = std::min(x, *anchor_row);
      spec.v2 = std::max(x, *anchor_row);
      spec.sigma = kColumnOrder[std::min(j, *anchor_col)];
      spec.sigma_prime = kColumnOrder[std::max(j, *anchor_col)];
      out.push_back(spec);
    }
  }
  return out;
}

bool all_full(const MeasurementSet& s) {
  return std::all_of(s.pairs.begin(), s.pairs.end(), [](const MeasurementPair& p) {
    return std::all_of(p.mask.begin(), p.mask.end(), [](bool b) { return b; });
  });
}

}  // namespace

Letters inflated_measurement(const InflatedGraph& ig, const Letters& base) {
  if (base.size() != ig.base().size()) throw InputError("measurement does not cover the base graph");
  Letters out(ig.graph().size(), PauliLetter::X);
  for (std::size_t b = 0; b < base.size(); ++b) out[ig.power_vertex(b)] = base[b];
  return out;
}

SignedLetters inflated_generator(const InflatedGraph& ig, std::size_t u) {
  const Graph& g = ig.graph();
  const std::size_t pu = ig.power_vertex(u);
  SignedLetters acc = generator_letters(g, pu);
  for (std::size_t v : ig.base().neighbors(u)) {
    for (std::size_t s = 1; s <= ig.d(); ++s) {
      multiply_in_place(acc, generator_letters(g, ig.chain_vertex_from(u, v, 2 * s)));
    }
  }
  return acc;
}

SignedLetters inflated_stabilizer(const InflatedGraph& ig, const std::vector<bool>& base_subset) {
  SignedLetters acc;
  acc.letters.assign(ig.graph().size(), PauliLetter::I);
  for (std::size_t u = 0; u < base_subset.size(); ++u) {
    if (base_subset[u]) multiply_in_place(acc, inflated_generator(ig, u));
  }
  return acc;
}

void DecoySpec::validate(const Graph& base) const {
  if (center >= base.size() || v1 >= base.size() || v2 >= base.size()) throw InputError("decoy vertex out of range");
  if (v1 == v2) throw InputError("decoy neighbours must differ");
  if (!base.adjacent(center, v1) || !base.adjacent(center, v2)) {
    throw InputError("decoy neighbours must be adjacent to '" + base.label(center) + "'");
  }
  if (sigma == sigma_prime) throw InputError("decoy letters must differ");
}

SignedLetters shell_stabilizer(const InflatedGraph& ig, const DecoySpec& spec) {
  spec.validate(ig.base());
  SignedLetters s = inflated_generator(ig, spec.v1);
  multiply_in_place(s, inflated_generator(ig, spec.v2));
  if (s.phase != 0) throw Error("shell stabilizer sign is not +1");
  return s;
}

std::pair<MeasurementPair, MeasurementPair> decoy_pair(const InflatedGraph& ig, const DecoySpec& spec) {
  const SignedLetters shell = shell_stabilizer(ig, spec);
  Letters base(ig.base().size());
  for (std::size_t b = 0; b < base.size(); ++b) base[b] = shell.letters[ig.power_vertex(b)];
  if (base[spec.center] != PauliLetter::I) throw Error("shell stabilizer acts on its centre");

  MeasurementPair first;
  first.mask.resize(shell.letters.size());
  for (std::size_t i = 0; i < shell.letters.size(); ++i) first.mask[i] = shell.letters[i] != PauliLetter::I;
  base[spec.center] = spec.sigma;
  first.measurement = inflated_measurement(ig, base);
  if (submeasurement_of(first) != shell.letters) throw Error("shell stabilizer is not a submeasurement of the decoy");

  MeasurementPair second = first;
  second.measurement[ig.power_vertex(spec.center)] = spec.sigma_prime;
  const Graph& bg = ig.base();
  const std::string tag = "decoy at " + bg.label(spec.center) + " towards " + bg.label(spec.v1) + "," +
                          bg.label(spec.v2) + ": ";
  first.note = tag + letter_name(spec.sigma);
  second.note = tag + letter_name(spec.sigma_prime);
  return {std::move(first), std::move(second)};
}

MeasurementSet inflate_set(const InflatedGraph& ig, const MeasurementSet& base) {
  MeasurementSet out;
  out.graph = ig.graph();
  out.d = ig.d();
  for (const MeasurementPair& p : base.pairs) {
    const auto m = match_stabilizer(base.graph, submeasurement_of(p));
    if (!m) throw PreconditionError("base submeasurement is not a stabilizer element");
    const SignedLetters s = inflated_stabilizer(ig, m->subset);
    MeasurementPair q;
    q.measurement = inflated_measurement(ig, p.measurement);
    q.mask.resize(s.letters.size());
    for (std::size_t i = 0; i < s.letters.size(); ++i) q.mask[i] = s.letters[i] != PauliLetter::I;
    if (submeasurement_of(q) != s.letters) throw Error("inflated stabilizer is not a submeasurement");
    q.note = p.note;
    out.pairs.push_back(std::move(q));
  }
  return out;
}

InflatedSet build_inflated_set(const MeasurementSet& base, std::size_t d) {
  base.validate();
  if (d == 0) throw InputError("inflation distance must be at least 1");
  if (base.graph.largest_component() < 3) {
    throw PreconditionError("base graph needs a connected component with at least three vertices");
  }
  if (!all_full(base)) throw PreconditionError("base set must use full masks");
  MeasurementSet at_zero = base;
  at_zero.d = 0;
  if (!verify_paradox(at_zero).overall) throw PreconditionError("base set is not certified at d = 0");

  InflatedSet out{inflate(base.graph, d), {}, {}};
  out.set = inflate_set(out.inflated, base);
  out.report.base_pairs = base.pairs.size();

  const std::size_t max_rounds = out.inflated.graph().size();
  ParadoxCertificate cert = verify_paradox(out.set);
  while (!cert.failures.empty()) {
    if (out.report.rounds == max_rounds) {
      throw RepairError("excerpt parity still fails after " + std::to_string(max_rounds) + " rounds");
    }
    ++out.report.rounds;
    const auto classes = classify(out.inflated, cert);
    std::set<std::size_t> centers;
    for (const FailureClass& c : classes) centers.insert(c.center);
    for (std::size_t c : centers) {
      for (const DecoySpec& spec : decompose(base.graph, c, classes)) {
        auto [m1, m2] = decoy_pair(out.inflated, spec);
        out.set.pairs.push_back(std::move(m1));
        out.set.pairs.push_back(std::move(m2));
        out.report.decoys.push_back(spec);
      }
    }
    cert = verify_paradox(out.set);
  }
  out.report.decoy_pairs = out.report.decoys.size();
  out.report.certificate = std::move(cert);
  return out;
}

namespace {

// Parity signature of a stabilizer measurement: one bit per (vertex, letter)
// plus the sign bit in the top position.
gf2::BitVector signature(const SignedLetters& s) {
  const std::size_t n = s.letters.size();
  gf2::BitVector b(3 * n + 1);
  for (std::size_t v = 0; v < n; ++v) {
    const auto l = static_cast<std::size_t>(s.letters[v]);
    if (l != 0) b.set(3 * v + l - 1);
  }
  if (s.phase == 2) b.set(3 * n);
  return b;
}

struct WordsHash {
  std::size_t operator()(const gf2::BitVector& b) const {
    std::size_t h = b.size();
    for (std::uint64_t w : b.words()) h = h * 0x9e3779b97f4a7c15ull ^ (w + (h >> 7));
    return h;
  }
};

using Combo = std::vector<std::size_t>;

std::vector<Combo> combos(std::size_t count, std::size_t k) {
  std::vector<Combo> out;
  Combo c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  if (k > count) return out;
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == count - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::optional<Combo> search_size(const std::vector<gf2::BitVector>& sig, const gf2::BitVector& target, std::size_t k) {
  const std::size_t lo = k / 2;
  const std::size_t hi = k - lo;
  if (lo == 0) {
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (sig[i] == target) return Combo{i};
    }
    return std::nullopt;
  }
  std::unordered_map<gf2::BitVector, std::vector<Combo>, WordsHash> table;
  for (Combo& c : combos(sig.size(), lo)) {
    gf2::BitVector acc(target.size());
    for (std::size_t i : c) acc ^= sig[i];
    auto& bucket = table[acc];
    if (bucket.size() < 16) bucket.push_back(std::move(c));
  }
  std::optional<Combo> best;
  for (const Combo& c : combos(sig.size(), hi)) {
    gf2::BitVector acc = target;
    for (std::size_t i : c) acc ^= sig[i];
    const auto it = table.find(acc);
    if (it == table.end()) continue;
    for (const Combo& other : it->second) {
      Combo merged = c;
      merged.insert(merged.end(), other.begin(), other.end());
      std::sort(merged.begin(), merged.end());
      if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) continue;
      if (!best || merged < *best) best = std::move(merged);
    }
  }
  return best;
}

std::size_t combo_count(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::size_t{1} << 22)) return r;
  }
  return r;
}

}  // namespace

std::optional<MeasurementSet> discover_base_set(const Graph& g, const DiscoveryOptions& options) {
  const std::size_t n = g.size();
  if (n > options.max_vertices) throw InstanceTooLarge("base-set discovery limited to " + std::to_string(options.max_vertices) + " vertices");
  if (n == 0) return std::nullopt;

  std::vector<std::vector<bool>> subsets;
  std::vector<SignedLetters> elements;
  std::vector<gf2::BitVector> sig;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (mask >> i) & 1u;
    SignedLetters s = subset_to_letters(g, u);
    sig.push_back(signature(s));
    elements.push_back(std::move(s));
    subsets.push_back(std::move(u));
  }
  gf2::BitVector target(3 * n + 1);
  target.set(3 * n);

  std::optional<Combo> found;
  for (std::size_t k = 3; k <= options.max_exhaustive_size && !found; ++k) {
    if (combo_count(sig.size(), k - k / 2) > (std::size_t{1} << 21)) break;
    found = search_size(sig, target, k);
  }
  if (!found) {
    std::vector<gf2::BitVector> rows(3 * n + 1, gf2::BitVector(sig.size()));
    for (std::size_t c = 0; c < sig.size(); ++c) {
      for (std::size_t r = 0; r < 3 * n + 1; ++r) {
        if (sig[c].get(r)) rows[r].set(c);
      }
    }
    const auto x = gf2::solve(rows, sig.size(), target);
    if (!x) return std::nullopt;
    found.emplace();
    for (std::size_t c = x->next_set(0); c < sig.size(); c = x->next_set(c + 1)) found->push_back(c);
  }

  MeasurementSet out;
  out.graph = g;
  out.d = 0;
  for (std::size_t idx : *found) {
    std::string note = "U = {";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!subsets[idx][i]) continue;
      if (!first) note += ",";
      note += g.label(i);
      first = false;
    }
    note += "}";
    out.pairs.push_back(MeasurementPair::full(elements[idx].letters, std::move(note)));
  }
  return out;
}

}  // namespace ilhv
