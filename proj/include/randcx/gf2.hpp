#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace randcx::gf2 {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& other);
  bool none() const;
  // Index of the lowest set bit, or size() when empty.
  std::size_t first_set() const;
  std::vector<std::size_t> set_bits() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major matrix over GF(2).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

std::size_t rank(Matrix m);

// Basis of {x : x·M = 0}, i.e. dependencies among the rows of M. Each basis
// vector has rows() bits.
std::vector<BitVector> left_kernel(const Matrix& m);

}  // namespace randcx::gf2
