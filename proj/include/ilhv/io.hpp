#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ilhv/barrett.hpp"
#include "ilhv/graph.hpp"
#include "ilhv/inflate.hpp"
#include "ilhv/lhv.hpp"
#include "ilhv/paradox.hpp"
#include "ilhv/pauli.hpp"

namespace ilhv::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; I/O and syntax errors become InputError.
Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// {"vertices": [...], "edges": [[u, v], ...]}. Numeric labels are accepted.
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);
Json to_json(const InflatedGraph& ig);

/// {"phase": k, "letters": {vertex: "X"}}.
PauliString pauli_from_json(const Json& j);
Json to_json(const PauliString& p);

/// {"graph": ..., "d": k, "pairs": [{"letters": {...}, "mask": [...], "note": "..."}]}.
/// Absent letters are I; an absent mask keeps every vertex.
MeasurementSet set_from_json(const Json& j);
Json to_json(const MeasurementSet& s);

Json to_json(const Graph& g, const ParadoxCertificate& c);
Json to_json(const BellReport& r);
Json to_json(const Graph& base, const BuildReport& r);

/// [{"graph_id", "vertex", "pattern": {vertex: letter}, "source"}].
std::vector<RuleRecord> rules_from_json(const Json& j);
Json to_json(const std::vector<RuleRecord>& rules);

/// Letters as a compact string in vertex order, masked-out letters lower case.
std::string pair_string(const MeasurementPair& p);

}  // namespace ilhv::io
