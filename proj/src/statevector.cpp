#include "ilhv/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace ilhv {

namespace {

template <typename Real>
constexpr Real tolerance() {
  return Real(1e-10);
}

template <typename Real>
void check_hermitian(const Matrix2<Real>& m) {
  if ((m - m.adjoint()).norm() > tolerance<Real>()) {
    throw InputError("observable factor is not Hermitian");
  }
}

template <typename Real>
bool same_factors(const ProductObservable<Real>& a, const ProductObservable<Real>& b) {
  if (a.factors.size() != b.factors.size()) return false;
  const Matrix2<Real> id = Matrix2<Real>::Identity();
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const Matrix2<Real>& fa = a.factors[i] ? *a.factors[i] : id;
    const Matrix2<Real>& fb = b.factors[i] ? *b.factors[i] : id;
    if ((fa - fb).norm() > tolerance<Real>()) return false;
  }
  return true;
}

void write_le(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  char buf[8];
  std::memcpy(buf, &bits, 8);
  out.write(buf, 8);
}

}  // namespace

template <typename Real>
BasicStateVector<Real>::BasicStateVector(Amplitudes<Real> amplitudes) : amps_(std::move(amplitudes)) {
  const auto size = static_cast<std::uint64_t>(amps_.size());
  if (size == 0 || !std::has_single_bit(size)) throw InputError("amplitude count must be a power of two");
  n_ = static_cast<std::size_t>(std::countr_zero(size));
}

template <typename Real>
Amplitudes<Real> BasicStateVector<Real>::apply(const ProductObservable<Real>& o) const {
  if (o.factors.size() != n_) throw InputError("observable size does not match the state");
  Amplitudes<Real> out = amps_;
  const Eigen::Index dim = out.size();
  for (std::size_t q = 0; q < n_; ++q) {
    if (!o.factors[q]) continue;
    const Matrix2<Real>& m = *o.factors[q];
    check_hermitian(m);
    const Eigen::Index bit = Eigen::Index{1} << q;
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const std::complex<Real> a0 = out[i];
      const std::complex<Real> a1 = out[i | bit];
      out[i] = m(0, 0) * a0 + m(0, 1) * a1;
      out[i | bit] = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
  return out;
}

template <typename Real>
Real BasicStateVector<Real>::expect(const ProductObservable<Real>& o) const {
  const std::complex<Real> v = amps_.dot(apply(o));
  if (std::abs(v.imag()) > tolerance<Real>()) throw InputError("expectation has an imaginary part");
  return v.real();
}

template <typename Real>
Real BasicStateVector<Real>::expect(const ObservableSum<Real>& o) const {
  Real total = 0;
  for (const auto& [c, term] : o.terms) total += c * expect(term);
  return total;
}

template <typename Real>
void BasicStateVector<Real>::dump(std::ostream& out) const {
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    write_le(out, static_cast<double>(amps_[i].real()));
    write_le(out, static_cast<double>(amps_[i].imag()));
  }
}

template <typename Real>
BasicStateVector<Real> basic_graph_state(const Graph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap) throw InputError("graph has " + std::to_string(n) + " vertices, statevector cap is " + std::to_string(cap));
  const Eigen::Index dim = Eigen::Index{1} << n;
  Amplitudes<Real> amps = Amplitudes<Real>::Constant(dim, std::complex<Real>(std::pow(Real(2), -Real(n) / 2)));
  for (const auto& [a, b] : g.edges()) {
    const Eigen::Index mask = (Eigen::Index{1} << a) | (Eigen::Index{1} << b);
    for (Eigen::Index i = 0; i < dim; ++i) {
      if ((i & mask) == mask) amps[i] = -amps[i];
    }
  }
  return BasicStateVector<Real>(std::move(amps));
}

ObservableSum<double> chsh_operator(double theta1, double theta2) {
  const Matrix2<double> x = pauli_matrix<double>(PauliLetter::X);
  const Matrix2<double> y = pauli_matrix<double>(PauliLetter::Y);
  const auto term = [&](double theta, bool with_third) {
    ProductObservable<double> o;
    o.factors = {rotated_observable(theta), x, std::nullopt, with_third ? y : x};
    if (with_third) o.factors[2] = x;
    return o;
  };
  const std::pair<double, ProductObservable<double>> raw[] = {
      {1.0, term(theta1, false)},
      {1.0, term(theta2, false)},
      {1.0, term(theta1, true)},
      {-1.0, term(theta2, true)},
  };
  ObservableSum<double> out;
  for (const auto& [c, o] : raw) {
    auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const auto& t) { return same_factors(t.second, o); });
    if (it == out.terms.end()) {
      out.terms.emplace_back(c, o);
    } else {
      it->first += c;
    }
  }
  std::erase_if(out.terms, [](const auto& t) { return std::abs(t.first) < tolerance<double>(); });
  return out;
}

template class BasicStateVector<double>;
template class BasicStateVector<long double>;
template BasicStateVector<double> basic_graph_state<double>(const Graph&, std::size_t);
template BasicStateVector<long double> basic_graph_state<long double>(const Graph&, std::size_t);

}  // namespace ilhv
