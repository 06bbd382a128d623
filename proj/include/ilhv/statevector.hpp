#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ilhv/graph.hpp"
#include "ilhv/pauli.hpp"

namespace ilhv {

template <typename Real>
using Matrix2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

template <typename Real>
using Amplitudes = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

/// Tensor product of single-qubit factors; absent factors are the identity.
template <typename Real>
struct ProductObservable {
  std::vector<std::optional<Matrix2<Real>>> factors;
};

/// Real linear combination of product observables.
template <typename Real>
struct ObservableSum {
  std::vector<std::pair<Real, ProductObservable<Real>>> terms;
};

template <typename Real>
Matrix2<Real> pauli_matrix(PauliLetter l) {
  using C = std::complex<Real>;
  Matrix2<Real> m;
  switch (l) {
    case PauliLetter::I: m << C(1), C(0), C(0), C(1); break;
    case PauliLetter::X: m << C(0), C(1), C(1), C(0); break;
    case PauliLetter::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case PauliLetter::Z: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

/// R_X(theta) = cos(theta/2) Z + sin(theta/2) Y.
template <typename Real>
Matrix2<Real> rotated_observable(Real theta) {
  return std::cos(theta / 2) * pauli_matrix<Real>(PauliLetter::Z) + std::sin(theta / 2) * pauli_matrix<Real>(PauliLetter::Y);
}

template <typename Real>
ProductObservable<Real> pauli_observable(std::span<const PauliLetter> letters) {
  ProductObservable<Real> o;
  o.factors.resize(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] != PauliLetter::I) o.factors[i] = pauli_matrix<Real>(letters[i]);
  }
  return o;
}

inline constexpr std::size_t kDefaultQubitCap = 14;

/// Dense n-qubit state. Vertex i of the source graph is bit i of the index.
template <typename Real>
class BasicStateVector {
 public:
  BasicStateVector() = default;
  explicit BasicStateVector(Amplitudes<Real> amplitudes);

  std::size_t qubits() const { return n_; }
  const Amplitudes<Real>& amplitudes() const { return amps_; }

  /// O |psi> for a single product term.
  Amplitudes<Real> apply(const ProductObservable<Real>& o) const;

  /// <psi| O |psi>. Throws InputError for non-Hermitian factors, size
  /// mismatches or a non-negligible imaginary part.
  Real expect(const ProductObservable<Real>& o) const;
  Real expect(const ObservableSum<Real>& o) const;

  /// Little-endian (re, im) IEEE-754 doubles per amplitude, index order.
  void dump(std::ostream& out) const;

 private:
  std::size_t n_ = 0;
  Amplitudes<Real> amps_;
};

using StateVector = BasicStateVector<double>;

/// |+>^n followed by a controlled-Z on every edge. Throws InputError above `cap` qubits.
template <typename Real>
BasicStateVector<Real> basic_graph_state(const Graph& g, std::size_t cap = kDefaultQubitCap);

inline StateVector graph_state(const Graph& g, std::size_t cap = kDefaultQubitCap) {
  return basic_graph_state<double>(g, cap);
}

/// The four-qubit Bell operator on a path 1-2-3-4:
/// (R(t1) + R(t2)) X2 X4 + (R(t1) - R(t2)) X2 X3 Y4, with equal terms merged
/// and vanishing ones dropped.
ObservableSum<double> chsh_operator(double theta1, double theta2);

extern template class BasicStateVector<double>;
extern template class BasicStateVector<long double>;
extern template BasicStateVector<double> basic_graph_state<double>(const Graph&, std::size_t);
extern template BasicStateVector<long double> basic_graph_state<long double>(const Graph&, std::size_t);

}  // namespace ilhv
