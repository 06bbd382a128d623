#include "ilhv/paradox.hpp"

#include <algorithm>
#include <array>

namespace ilhv {

namespace {

bool keeps_outcome(const MeasurementPair& p, std::size_t v) {
  return p.mask[v] && p.measurement[v] != PauliLetter::I;
}

// Odd-multiplicity excerpt classes at `v`, in map order.
std::vector<ExcerptFailure> odd_classes(const MeasurementSet& s, std::size_t v,
                                        std::span<const std::size_t> neighbourhood) {
  std::map<LocalExcerpt, std::size_t> counts;
  for (const auto& p : s.pairs) {
    if (keeps_outcome(p, v)) ++counts[excerpt(p.measurement, neighbourhood)];
  }
  std::vector<ExcerptFailure> out;
  for (auto& [e, c] : counts) {
    if (c % 2 == 1) out.push_back({v, e, c});
  }
  return out;
}

}  // namespace

MeasurementPair MeasurementPair::full(Letters m, std::string note) {
  MeasurementPair p;
  p.mask.assign(m.size(), true);
  p.measurement = std::move(m);
  p.note = std::move(note);
  return p;
}

void MeasurementSet::validate() const {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k].measurement.size() != graph.size() || pairs[k].mask.size() != graph.size()) {
      throw InputError("pair " + std::to_string(k) + " does not cover the graph");
    }
  }
}

Letters submeasurement_of(const MeasurementPair& p) {
  Letters c = p.measurement;
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (!p.mask.at(v)) c[v] = PauliLetter::I;
  }
  return c;
}

LocalExcerpt excerpt(const Letters& m, std::span<const std::size_t> ball_vertices) {
  LocalExcerpt e;
  e.reserve(ball_vertices.size());
  for (std::size_t u : ball_vertices) e.push_back(m[u]);
  return e;
}

bool check_vertex_parity(const MeasurementSet& s, std::size_t v) {
  std::array<std::size_t, 4> counts{};
  for (const auto& p : s.pairs) ++counts[static_cast<std::size_t>(p.measurement.at(v))];
  return counts[1] % 2 == 0 && counts[2] % 2 == 0 && counts[3] % 2 == 0;
}

bool check_comm_parity(const MeasurementSet& s, std::size_t v) {
  const auto b = ball(s.graph, v, s.d);
  return odd_classes(s, v, b).empty();
}

std::vector<std::optional<int>> check_stabilizer_signs(const MeasurementSet& s) {
  std::vector<std::optional<int>> out;
  out.reserve(s.pairs.size());
  for (const auto& p : s.pairs) {
    const auto m = match_stabilizer(s.graph, submeasurement_of(p));
    out.push_back(m ? std::optional<int>(m->sign) : std::nullopt);
  }
  return out;
}

bool check_product_minus_one(const MeasurementSet& s) {
  Letters acc(s.graph.size(), PauliLetter::I);
  int phase = 0;
  for (const auto& p : s.pairs) {
    const Letters c = submeasurement_of(p);
    for (std::size_t v = 0; v < acc.size(); ++v) acc[v] = multiply_letters(acc[v], c[v], phase);
  }
  const bool cancels = std::all_of(acc.begin(), acc.end(), [](PauliLetter l) { return l == PauliLetter::I; });
  return cancels && phase == 2;
}

bool ParadoxCertificate::signs_defined() const {
  return std::all_of(signs.begin(), signs.end(), [](const auto& s) { return s.has_value(); });
}

int ParadoxCertificate::sign_product() const {
  int prod = 1;
  for (const auto& s : signs) {
    if (s) prod *= *s;
  }
  return prod;
}

ParadoxCertificate verify_paradox(const MeasurementSet& s) {
  s.validate();
  ParadoxCertificate cert;
  cert.parity_ok.assign(s.graph.size(), true);
  for (std::size_t v = 0; v < s.graph.size(); ++v) {
    const auto b = ball(s.graph, v, s.d);
    auto bad = odd_classes(s, v, b);
    if (!bad.empty()) {
      cert.parity_ok[v] = false;
      std::move(bad.begin(), bad.end(), std::back_inserter(cert.failures));
    }
  }
  cert.signs = check_stabilizer_signs(s);
  cert.product_is_minus_one = check_product_minus_one(s);
  cert.overall = cert.product_is_minus_one && cert.signs_defined() &&
                 std::all_of(cert.parity_ok.begin(), cert.parity_ok.end(), [](bool b) { return b; });
  return cert;
}

}  // namespace ilhv
