#include "ilhv/lhv.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace ilhv {

StrategySystem build_system(const MeasurementSet& s) {
  s.validate();
  const Graph& g = s.graph;
  std::vector<std::vector<std::size_t>> balls(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) balls[v] = ball(g, v, s.d);

  std::map<StrategyVariable, std::size_t> index;
  std::vector<std::vector<std::size_t>> support(s.pairs.size());
  StrategySystem sys;
  sys.rhs = gf2::BitVector(s.pairs.size());
  for (std::size_t k = 0; k < s.pairs.size(); ++k) {
    const MeasurementPair& p = s.pairs[k];
    const auto m = match_stabilizer(g, submeasurement_of(p));
    if (!m) throw PreconditionError("pair " + std::to_string(k) + " is not stabilizer-proportional");
    sys.rhs.set(k, m->sign == -1);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!p.mask[v] || p.measurement[v] == PauliLetter::I) continue;
      StrategyVariable var{v, excerpt(p.measurement, balls[v])};
      support[k].push_back(index.try_emplace(std::move(var), index.size()).first->second);
    }
  }
  // Renumber in canonical variable order.
  std::vector<std::size_t> rank(index.size());
  sys.variables.reserve(index.size());
  for (auto& [var, i] : index) {
    rank[i] = sys.variables.size();
    sys.variables.push_back(var);
  }
  for (const auto& cols : support) {
    gf2::BitVector row(sys.variables.size());
    for (std::size_t c : cols) row.set(rank[c]);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

bool feasible(const StrategySystem& sys) {
  return gf2::solve(sys.rows, sys.variables.size(), sys.rhs).has_value();
}

std::size_t strategy_rank(const StrategySystem& sys) { return gf2::reduce(sys.rows, sys.variables.size()).rank(); }

namespace {

// Visits every w-subset of [0, n) in lexicographic order until `f` returns true.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t w, F&& f) {
  std::vector<std::size_t> c(w);
  for (std::size_t i = 0; i < w; ++i) c[i] = i;
  if (w > n) return false;
  while (true) {
    if (f(c)) return true;
    std::size_t i = w;
    while (i > 0 && c[i - 1] == n - w + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < w; ++j) c[j] = c[j - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

std::size_t min_violations(const StrategySystem& sys, std::size_t cap) {
  const std::size_t n = sys.rows.size();
  const std::size_t cols = sys.variables.size();
  const gf2::Echelon e = gf2::reduce(sys.rows, cols);
  const std::size_t r = e.rank();

  // Violation patterns are rhs + A x; they are exactly the vectors sharing
  // rhs's syndrome under the left kernel H.
  const auto h = gf2::left_kernel(e);
  std::vector<gf2::BitVector> syndrome_col(n, gf2::BitVector(h.size()));
  gf2::BitVector target(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (h[j].get(i)) syndrome_col[i].set(j);
    }
    target.set(j, h[j].dot(sys.rhs));
  }
  if (!target.any()) return 0;

  const double gray_cost = r < 63 ? std::ldexp(1.0, static_cast<int>(r)) : std::numeric_limits<double>::infinity();
  const double budget = std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(cap, 62)));
  double spent = 0;
  for (std::size_t w = 1; w <= n; ++w) {
    spent += binomial(n, w);
    if (spent > std::min(gray_cost, budget)) break;
    gf2::BitVector acc(h.size());
    const bool hit = for_each_subset(n, w, [&](const std::vector<std::size_t>& c) {
      acc = gf2::BitVector(h.size());
      for (std::size_t i : c) acc ^= syndrome_col[i];
      return acc == target;
    });
    if (hit) return w;
  }

  if (r > cap) {
    throw InstanceTooLarge("min-violation search needs 2^" + std::to_string(r) + " steps, cap is 2^" +
                           std::to_string(cap));
  }
  std::vector<gf2::BitVector> basis;
  basis.reserve(r);
  for (std::size_t c : e.pivot_cols) {
    gf2::BitVector col(n);
    for (std::size_t i = 0; i < n; ++i) col.set(i, sys.rows[i].get(c));
    basis.push_back(std::move(col));
  }
  gf2::BitVector cur = sys.rhs;
  std::size_t best = cur.popcount();
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << r) && best > 1; ++i) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    best = std::min(best, cur.popcount());
  }
  return best;
}

BellReport bell_report(const MeasurementSet& s, std::size_t cap, std::optional<std::size_t> decoy_pairs) {
  const StrategySystem sys = build_system(s);
  BellReport out;
  out.qm_value = s.pairs.size();
  out.min_violations = min_violations(sys, cap);
  out.classical_bound = static_cast<long long>(out.qm_value) - 2 * static_cast<long long>(out.min_violations);
  if (out.classical_bound > 0) out.ratio = Rational(static_cast<long long>(out.qm_value), out.classical_bound);
  out.decoy_pairs = decoy_pairs;
  return out;
}

std::string ratio_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace ilhv
