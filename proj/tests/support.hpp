#pragma once

// Independent reference implementations used as test oracles.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ilhv/graph.hpp"
#include "ilhv/io.hpp"
#include "ilhv/paradox.hpp"
#include "ilhv/pauli.hpp"

namespace ilhv::testing {

inline std::filesystem::path data_dir() { return ILHV_DATA_DIR; }

inline MeasurementSet fixture(const std::string& name) {
  return io::set_from_json(io::read_json(data_dir() / "fixtures" / (name + ".json")));
}

inline Graph graph_file(const std::string& name) {
  return io::graph_from_json(io::read_json(data_dir() / "graphs" / (name + ".json")));
}

using Dense = Eigen::MatrixXcd;

inline Dense letter_matrix(PauliLetter l) {
  using C = std::complex<double>;
  Dense m(2, 2);
  switch (l) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// i^phase times the tensor product, qubit i on bit i of the basis index.
inline Dense dense_pauli(const Letters& letters, int phase = 0) {
  Dense m = Dense::Identity(1, 1);
  for (std::size_t i = letters.size(); i-- > 0;) {
    const Dense f = letter_matrix(letters[i]);
    Dense k(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) k.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
    }
    m = std::move(k);
  }
  static const std::complex<double> kPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPow[((phase % 4) + 4) % 4] * m;
}

/// Graph state as the +1 eigenvector of the summed generators.
inline Eigen::VectorXcd stabilizer_state(const Graph& g) {
  const std::size_t n = g.size();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Dense h = Dense::Zero(dim, dim);
  for (std::size_t v = 0; v < n; ++v) {
    Letters l(n, PauliLetter::I);
    l[v] = PauliLetter::X;
    for (std::size_t u : g.neighbors(v)) l[u] = PauliLetter::Z;
    h += dense_pauli(l);
  }
  Eigen::SelfAdjointEigenSolver<Dense> es(h);
  Eigen::VectorXcd psi = es.eigenvectors().col(dim - 1);
  // Fix the global phase so the |0...0> amplitude is positive.
  psi *= std::abs(psi[0]) / psi[0];
  return psi;
}

inline double dense_expectation(const Eigen::VectorXcd& psi, const Letters& letters) {
  return (psi.adjoint() * dense_pauli(letters) * psi)(0, 0).real();
}

/// Fewest pairs a deterministic strategy gets wrong, by enumerating every
/// assignment of +-1 outputs to (vertex, local view) variables.
inline std::size_t brute_force_min_violations(const MeasurementSet& s, std::size_t* variable_count = nullptr) {
  const std::size_t n = s.graph.size();
  std::vector<std::vector<std::size_t>> balls(n);
  for (std::size_t v = 0; v < n; ++v) balls[v] = ball(s.graph, v, s.d);

  std::map<std::pair<std::size_t, std::vector<PauliLetter>>, std::size_t> index;
  std::vector<std::vector<std::size_t>> uses(s.pairs.size());
  std::vector<int> chi(s.pairs.size(), 0);
  for (std::size_t k = 0; k < s.pairs.size(); ++k) {
    const MeasurementPair& p = s.pairs[k];
    chi[k] = expectation(s.graph, submeasurement_of(p));
    for (std::size_t v = 0; v < n; ++v) {
      if (!p.mask[v] || p.measurement[v] == PauliLetter::I) continue;
      std::vector<PauliLetter> view;
      for (std::size_t u : balls[v]) view.push_back(p.measurement[u]);
      auto [it, fresh] = index.try_emplace({v, view}, index.size());
      uses[k].push_back(it->second);
    }
  }
  const std::size_t vars = index.size();
  if (variable_count) *variable_count = vars;
  std::size_t best = s.pairs.size();
  for (std::uint64_t h = 0; h < (std::uint64_t{1} << vars); ++h) {
    std::size_t wrong = 0;
    for (std::size_t k = 0; k < s.pairs.size(); ++k) {
      int product = 1;
      for (std::size_t var : uses[k]) product *= ((h >> var) & 1u) ? -1 : 1;
      wrong += product != chi[k];
    }
    best = std::min(best, wrong);
  }
  return best;
}

}  // namespace ilhv::testing
