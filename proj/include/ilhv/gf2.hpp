#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace ilhv::gf2 {

/// Fixed-length packed bit vector.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }
  /// Parity of the bitwise AND.
  bool dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) % 2 == 1;
  }
  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t next_set(std::size_t from) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-reduced echelon form of a matrix over GF(2), with the row operations
/// recorded so that left-kernel vectors can be recovered.
struct Echelon {
  std::size_t cols = 0;
  std::vector<BitVector> rows;       ///< reduced rows, same count as the input
  std::vector<BitVector> transform;  ///< transform[i] . input = rows[i]
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

Echelon reduce(const std::vector<BitVector>& rows, std::size_t cols);

/// Some x with A x = b, or nullopt. Free variables are set to zero.
std::optional<BitVector> solve(const std::vector<BitVector>& rows, std::size_t cols, const BitVector& rhs);

/// Basis of { y : y^T A = 0 } (vectors indexed by row).
std::vector<BitVector> left_kernel(const Echelon& e);

/// Basis of { x : A x = 0 }.
std::vector<BitVector> kernel(const Echelon& e);

}  // namespace ilhv::gf2
