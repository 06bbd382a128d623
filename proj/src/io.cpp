#include "ilhv/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ilhv::io {

namespace {

Vertex label_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("vertex label must be a string or an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j.at(name);
}

PauliLetter letter_of(const Json& j) {
  const auto s = j.get<std::string>();
  if (s.size() != 1) throw InputError("bad Pauli letter '" + s + "'");
  return parse_letter(s[0]);
}

Json letters_json(const Graph& g, const Letters& m) {
  Json out = Json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != PauliLetter::I) out[g.label(i)] = std::string(1, letter_char(m[i]));
  }
  return out;
}

Letters letters_from(const Graph& g, const Json& j) {
  Letters m(g.size(), PauliLetter::I);
  if (!j.is_object()) throw InputError("letters must be an object");
  for (const auto& [v, l] : j.items()) m[g.index_of(v)] = letter_of(l);
  return m;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

Graph graph_from_json(const Json& j) {
  try {
    std::vector<Vertex> vertices;
    if (j.contains("vertices")) {
      for (const Json& v : j.at("vertices")) vertices.push_back(label_of(v));
    }
    std::vector<VertexPair> edges;
    for (const Json& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair, got " + e.dump());
      edges.emplace_back(label_of(e[0]), label_of(e[1]));
    }
    return Graph::from_edges(std::move(vertices), edges);
  } catch (const Json::exception& e) {
    throw InputError(std::string("graph: ") + e.what());
  }
}

Json to_json(const Graph& g) {
  Json out;
  out["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const InflatedGraph& ig) {
  Json out = to_json(ig.graph());
  out["d"] = ig.d();
  Json power = Json::array();
  for (std::size_t p : ig.power_vertices()) power.push_back(ig.graph().label(p));
  out["power_vertices"] = std::move(power);
  out["base"] = to_json(ig.base());
  return out;
}

PauliString pauli_from_json(const Json& j) {
  try {
    PauliString::LetterMap m;
    for (const auto& [v, l] : field(j, "letters").items()) m[v] = letter_of(l);
    return PauliString(j.value("phase", 0), std::move(m));
  } catch (const Json::exception& e) {
    throw InputError(std::string("Pauli string: ") + e.what());
  }
}

Json to_json(const PauliString& p) {
  Json letters = Json::object();
  for (const auto& [v, l] : p.letters()) letters[v] = std::string(1, letter_char(l));
  return Json{{"phase", p.phase()}, {"letters", std::move(letters)}};
}

MeasurementSet set_from_json(const Json& j) {
  try {
    MeasurementSet s;
    s.graph = graph_from_json(field(j, "graph"));
    const long long d = j.value("d", 0LL);
    if (d < 0) throw InputError("d must be non-negative");
    s.d = static_cast<std::size_t>(d);
    for (const Json& p : field(j, "pairs")) {
      MeasurementPair pair;
      pair.measurement = letters_from(s.graph, field(p, "letters"));
      if (p.contains("mask")) {
        pair.mask.assign(s.graph.size(), false);
        for (const Json& v : p.at("mask")) pair.mask[s.graph.index_of(label_of(v))] = true;
      } else {
        pair.mask.assign(s.graph.size(), true);
      }
      pair.note = p.value("note", "");
      s.pairs.push_back(std::move(pair));
    }
    return s;
  } catch (const Json::exception& e) {
    throw InputError(std::string("measurement set: ") + e.what());
  }
}

Json to_json(const MeasurementSet& s) {
  Json pairs = Json::array();
  for (const MeasurementPair& p : s.pairs) {
    Json mask = Json::array();
    for (std::size_t i = 0; i < p.mask.size(); ++i) {
      if (p.mask[i]) mask.push_back(s.graph.label(i));
    }
    Json row{{"letters", letters_json(s.graph, p.measurement)}, {"mask", std::move(mask)}};
    if (!p.note.empty()) row["note"] = p.note;
    pairs.push_back(std::move(row));
  }
  return Json{{"graph", to_json(s.graph)}, {"d", s.d}, {"pairs", std::move(pairs)}};
}

Json to_json(const Graph& g, const ParadoxCertificate& c) {
  Json failing = Json::array();
  for (std::size_t v = 0; v < c.parity_ok.size(); ++v) {
    if (!c.parity_ok[v]) failing.push_back(g.label(v));
  }
  Json failures = Json::array();
  for (const ExcerptFailure& f : c.failures) {
    std::string e;
    for (PauliLetter l : f.excerpt) e += letter_char(l);
    failures.push_back({{"vertex", g.label(f.vertex)}, {"excerpt", e}, {"count", f.count}});
  }
  Json signs = Json::array();
  for (const auto& s : c.signs) signs.push_back(s ? Json(*s) : Json(nullptr));
  Json out;
  out["overall"] = c.overall;
  out["parity_ok"] = failing.empty();
  out["failing_vertices"] = std::move(failing);
  out["failures"] = std::move(failures);
  out["signs_defined"] = c.signs_defined();
  out["sign_product"] = c.sign_product();
  out["product_is_minus_one"] = c.product_is_minus_one;
  out["signs"] = std::move(signs);
  return out;
}

Json to_json(const BellReport& r) {
  Json out;
  out["qm"] = r.qm_value;
  out["bound"] = r.classical_bound;
  out["min_violations"] = r.min_violations;
  out["ratio"] = r.ratio ? Json(ratio_string(*r.ratio)) : Json(nullptr);
  out["decoy_pairs"] = r.decoy_pairs ? Json(*r.decoy_pairs) : Json(nullptr);
  return out;
}

Json to_json(const Graph& base, const BuildReport& r) {
  Json decoys = Json::array();
  for (const DecoySpec& s : r.decoys) {
    decoys.push_back({{"center", base.label(s.center)},
                      {"neighbors", {base.label(s.v1), base.label(s.v2)}},
                      {"letters", std::string{letter_char(s.sigma), letter_char(s.sigma_prime)}}});
  }
  Json out;
  out["base_pairs"] = r.base_pairs;
  out["decoy_pairs"] = r.decoy_pairs;
  out["total_pairs"] = r.base_pairs + 2 * r.decoy_pairs;
  out["rounds"] = r.rounds;
  out["decoys"] = std::move(decoys);
  return out;
}

std::vector<RuleRecord> rules_from_json(const Json& j) {
  try {
    if (!j.is_array()) throw InputError("flip-rule file must be a list");
    std::vector<RuleRecord> out;
    for (const Json& r : j) {
      RuleRecord rec;
      rec.graph_id = field(r, "graph_id").get<std::string>();
      rec.vertex = label_of(field(r, "vertex"));
      for (const auto& [v, l] : field(r, "pattern").items()) rec.pattern.emplace_back(v, letter_of(l));
      rec.source = r.value("source", "");
      out.push_back(std::move(rec));
    }
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("flip rules: ") + e.what());
  }
}

Json to_json(const std::vector<RuleRecord>& rules) {
  Json out = Json::array();
  for (const RuleRecord& r : rules) {
    Json pattern = Json::object();
    for (const auto& [v, l] : r.pattern) pattern[v] = std::string(1, letter_char(l));
    out.push_back({{"graph_id", r.graph_id}, {"vertex", r.vertex}, {"pattern", std::move(pattern)}, {"source", r.source}});
  }
  return out;
}

std::string pair_string(const MeasurementPair& p) {
  std::string out;
  for (std::size_t i = 0; i < p.measurement.size(); ++i) {
    const char c = letter_char(p.measurement[i]);
    out += p.mask[i] ? c : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace ilhv::io
