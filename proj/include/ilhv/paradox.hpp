#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ilhv/graph.hpp"
#include "ilhv/pauli.hpp"

namespace ilhv {

/// A Pauli measurement M together with the submask selecting which local
/// outcomes enter the correlator. The induced submeasurement C keeps M's
/// letter on masked-in vertices and I elsewhere.
struct MeasurementPair {
  Letters measurement;
  std::vector<bool> mask;
  /// Free-form label carried through serialization.
  std::string note;

  static MeasurementPair full(Letters m, std::string note = {});
  friend bool operator==(const MeasurementPair& a, const MeasurementPair& b) {
    return a.measurement == b.measurement && a.mask == b.mask;
  }
};

/// Ordered list of measurement pairs on one graph; `d` is the communication
/// distance the set is meant to refute (0 is a plain LHV model).
struct MeasurementSet {
  Graph graph;
  std::size_t d = 0;
  std::vector<MeasurementPair> pairs;

  /// Throws InputError when a pair does not cover the graph.
  void validate() const;
};

Letters submeasurement_of(const MeasurementPair& p);

/// Letters of `m` over ball(center, radius), ascending vertex order.
using LocalExcerpt = Letters;
LocalExcerpt excerpt(const Letters& m, std::span<const std::size_t> ball_vertices);

/// Every non-identity letter occurs an even number of times at `v` across
/// the measurements (masks ignored).
bool check_vertex_parity(const MeasurementSet& s, std::size_t v);

/// For every local excerpt value around `v`, the number of pairs showing it
/// while keeping a non-identity outcome at `v` is even.
bool check_comm_parity(const MeasurementSet& s, std::size_t v);

/// Per pair: the sign chi with C = chi S for a stabilizer element S, or nullopt.
std::vector<std::optional<int>> check_stabilizer_signs(const MeasurementSet& s);

/// The ordered product of the bare submeasurements equals -1 times the identity.
bool check_product_minus_one(const MeasurementSet& s);

/// One excerpt class with odd multiplicity at a vertex.
struct ExcerptFailure {
  std::size_t vertex = 0;
  LocalExcerpt excerpt;
  std::size_t count = 0;
};

struct ParadoxCertificate {
  std::vector<bool> parity_ok;
  std::vector<ExcerptFailure> failures;
  std::vector<std::optional<int>> signs;
  bool product_is_minus_one = false;
  bool overall = false;

  bool signs_defined() const;
  /// Product of the defined signs.
  int sign_product() const;
};

/// Runs all three checks. Parity is evaluated at the set's own distance d.
ParadoxCertificate verify_paradox(const MeasurementSet& s);

}  // namespace ilhv
