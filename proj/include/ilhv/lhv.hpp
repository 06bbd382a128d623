#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "ilhv/gf2.hpp"
#include "ilhv/paradox.hpp"

namespace ilhv {

using Rational = boost::rational<long long>;

/// Deterministic output bit of `vertex` given the letters it sees within
/// distance d.
struct StrategyVariable {
  std::size_t vertex = 0;
  LocalExcerpt excerpt;
  friend auto operator<=>(const StrategyVariable&, const StrategyVariable&) = default;
};

/// One GF(2) row per pair. A +-1 strategy h = (-1)^b reproduces pair k
/// exactly when rows[k] . b = rhs[k], with rhs[k] set iff chi_k = -1.
struct StrategySystem {
  std::vector<StrategyVariable> variables;
  std::vector<gf2::BitVector> rows;
  gf2::BitVector rhs;

  std::size_t pair_count() const { return rows.size(); }
};

/// Throws PreconditionError when some submeasurement is not stabilizer-proportional.
StrategySystem build_system(const MeasurementSet& s);

bool feasible(const StrategySystem& sys);

/// Rank of the row space, i.e. the dimension of the space of achievable
/// violation patterns.
std::size_t strategy_rank(const StrategySystem& sys);

/// Fewest unsatisfied rows over all strategies.
///
/// Runs a weight-increasing syndrome search first and falls back to a Gray
/// code walk over the 2^rank achievable patterns. Throws InstanceTooLarge when
/// neither fits within 2^cap steps.
std::size_t min_violations(const StrategySystem& sys, std::size_t cap = 30);

struct BellReport {
  std::size_t qm_value = 0;
  long long classical_bound = 0;
  std::size_t min_violations = 0;
  /// qm / bound; absent when the bound is not positive.
  std::optional<Rational> ratio;
  std::optional<std::size_t> decoy_pairs;
};

BellReport bell_report(const MeasurementSet& s, std::size_t cap = 30,
                       std::optional<std::size_t> decoy_pairs = std::nullopt);

std::string ratio_string(const Rational& r);

}  // namespace ilhv
