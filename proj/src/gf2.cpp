#include "ilhv/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace ilhv::gf2 {

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) {
      const std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return i < size_ ? i : size_;
    }
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

Echelon reduce(const std::vector<BitVector>& rows, std::size_t cols) {
  Echelon e;
  e.cols = cols;
  e.rows = rows;
  const std::size_t m = rows.size();
  e.transform.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("gf2::reduce: row width mismatch");
    BitVector t(m);
    t.set(i);
    e.transform.push_back(std::move(t));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && !e.rows[p].get(c)) ++p;
    if (p == m) continue;
    std::swap(e.rows[p], e.rows[r]);
    std::swap(e.transform[p], e.transform[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i != r && e.rows[i].get(c)) {
        e.rows[i] ^= e.rows[r];
        e.transform[i] ^= e.transform[r];
      }
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

std::optional<BitVector> solve(const std::vector<BitVector>& rows, std::size_t cols, const BitVector& rhs) {
  if (rhs.size() != rows.size()) throw std::invalid_argument("gf2::solve: rhs length mismatch");
  const Echelon e = reduce(rows, cols);
  for (std::size_t i = e.rank(); i < rows.size(); ++i) {
    if (e.transform[i].dot(rhs)) return std::nullopt;
  }
  BitVector x(cols);
  for (std::size_t i = 0; i < e.rank(); ++i) x.set(e.pivot_cols[i], e.transform[i].dot(rhs));
  return x;
}

std::vector<BitVector> left_kernel(const Echelon& e) {
  return {e.transform.begin() + static_cast<std::ptrdiff_t>(e.rank()), e.transform.end()};
}

std::vector<BitVector> kernel(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<BitVector> out;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    BitVector x(e.cols);
    x.set(f);
    for (std::size_t i = 0; i < e.rank(); ++i) {
      if (e.rows[i].get(f)) x.set(e.pivot_cols[i]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace ilhv::gf2
