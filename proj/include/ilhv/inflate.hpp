#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ilhv/graph.hpp"
#include "ilhv/paradox.hpp"
#include "ilhv/pauli.hpp"

namespace ilhv {

/// The repair loop could not make every chain vertex satisfy the excerpt
/// parity condition within its round budget.
class RepairError : public Error {
 public:
  using Error::Error;
};

/// Base measurement copied to the power vertices, X on every chain vertex.
Letters inflated_measurement(const InflatedGraph& ig, const Letters& base);

/// f_u for base vertex `u`: X at u and at the chain vertices an even number of
/// steps away from u on each of its chains, Z at its base neighbours.
SignedLetters inflated_generator(const InflatedGraph& ig, std::size_t u);

/// prod_{u in U} f_u for a base subset U.
SignedLetters inflated_stabilizer(const InflatedGraph& ig, const std::vector<bool>& base_subset);

/// Decoy parameters, all in base indices.
struct DecoySpec {
  std::size_t center = 0;
  std::size_t v1 = 0;
  std::size_t v2 = 0;
  PauliLetter sigma = PauliLetter::X;
  PauliLetter sigma_prime = PauliLetter::Y;

  /// Throws InputError unless v1 != v2 are both base neighbours of the centre
  /// and the two letters differ.
  void validate(const Graph& base) const;
  friend bool operator==(const DecoySpec&, const DecoySpec&) = default;
};

/// f_{v1} f_{v2}. Throws if its sign is not +1.
SignedLetters shell_stabilizer(const InflatedGraph& ig, const DecoySpec& spec);

/// Two measurements equal to the inflated form of the shell's power letters,
/// with sigma and sigma' at the centre. Both masks select the shell's support.
std::pair<MeasurementPair, MeasurementPair> decoy_pair(const InflatedGraph& ig, const DecoySpec& spec);

struct BuildReport {
  std::size_t base_pairs = 0;
  std::size_t decoy_pairs = 0;
  std::size_t rounds = 0;
  std::vector<DecoySpec> decoys;
  ParadoxCertificate certificate;
};

struct InflatedSet {
  InflatedGraph inflated;
  MeasurementSet set;
  BuildReport report;
};

/// Inflated measurements with inflated-stabilizer masks, followed by decoy
/// pairs until every vertex passes the excerpt parity check at distance d.
///
/// Throws PreconditionError when the base set is not certified at d = 0 with
/// full masks or when its graph has no connected component of size three, and
/// RepairError when the decoy loop does not converge.
InflatedSet build_inflated_set(const MeasurementSet& base, std::size_t d);

/// Inflated rows only, before any decoy is added.
MeasurementSet inflate_set(const InflatedGraph& ig, const MeasurementSet& base);

struct DiscoveryOptions {
  std::size_t max_vertices = 16;
  /// Size limit for the exhaustive small-set search; larger sets come from
  /// linear algebra and are not minimal.
  std::size_t max_exhaustive_size = 6;
};

/// Searches for a full-mask set of stabilizer measurements on `g` that passes
/// verify_paradox at d = 0. Smallest sets first. Returns nullopt when no such
/// set exists (for example when every stabilizer sign is +1).
std::optional<MeasurementSet> discover_base_set(const Graph& g, const DiscoveryOptions& options = {});

}  // namespace ilhv
