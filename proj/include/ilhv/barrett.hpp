#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ilhv/lhv.hpp"

namespace ilhv {

/// Flips the output of `vertex` whenever the measurement shows `pattern` on
/// the listed vertices (a subset of the closed neighbourhood).
struct FlipRule {
  std::size_t vertex = 0;
  std::vector<std::pair<std::size_t, PauliLetter>> pattern;
  friend auto operator<=>(const FlipRule&, const FlipRule&) = default;

  bool matches(const Letters& m) const;
};

/// Hidden z_v uniform in {+1, -1}; X outputs the product of the neighbours'
/// z, Y outputs x z, I outputs 1. Triggered flip rules negate the output.
struct BarrettModel {
  Graph graph;
  std::vector<FlipRule> rules;
};

/// Exact average over all 2^n hidden assignments of the product of the
/// masked-in outputs. Always -1, 0 or +1.
Rational barrett_expectation(const BarrettModel& model, const MeasurementPair& pair);

/// Same quantity by explicit summation over the 2^n assignments.
Rational barrett_expectation_bruteforce(const BarrettModel& model, const MeasurementPair& pair);

/// Graph automorphisms as index permutations, identity first.
std::vector<std::vector<std::size_t>> automorphisms(const Graph& g);

/// Images of every rule under every automorphism, sorted and deduplicated.
std::vector<FlipRule> expand_by_symmetry(const Graph& g, const std::vector<FlipRule>& rules);

struct Mismatch {
  Letters measurement;
  std::vector<bool> mask;
  Rational model;
  int quantum = 0;
};

struct SmallGraphResult {
  std::string graph_id;
  Graph graph;
  std::vector<FlipRule> rules;
  std::size_t checked = 0;
  std::size_t mismatch_count = 0;
  /// The first few mismatches, for diagnostics.
  std::vector<Mismatch> mismatches;
};

/// Compares the model against the graph state on all 4^n measurements and
/// 2^n masks, keeping at most `keep` mismatch examples.
SmallGraphResult compare_with_quantum(const std::string& graph_id, const BarrettModel& model, std::size_t keep = 16);

/// Rule entry as stored on disk, before symmetry expansion.
struct RuleRecord {
  std::string graph_id;
  Vertex vertex;
  std::vector<std::pair<Vertex, PauliLetter>> pattern;
  std::string source;
};

/// The connected graphs on three and four vertices, with their ids.
std::vector<std::pair<std::string, Graph>> small_graphs();

FlipRule to_rule(const Graph& g, const RuleRecord& r);
RuleRecord to_record(const std::string& graph_id, const Graph& g, const FlipRule& r, std::string source);

/// Searches for flip rules that complete `seed` (expanded by symmetry) so that the model matches the
/// graph state everywhere. Rules act on full closed-neighbourhood patterns and
/// are added whole symmetry orbits at a time, smallest combination first
/// (up to three orbits), then by linear algebra over orbits and finally over
/// single rules. Returns only the added rules, one per orbit in the symmetric
/// case. Throws Error when no completion exists.
std::vector<FlipRule> search_flip_rules(const Graph& g, const std::vector<FlipRule>& seed);

struct SmallGraphReport {
  std::vector<SmallGraphResult> graphs;
  std::size_t total_mismatches = 0;
};

/// Runs compare_with_quantum for every small graph with its rules from `records`.
SmallGraphReport verify_small_graphs(const std::vector<RuleRecord>& records);

}  // namespace ilhv
