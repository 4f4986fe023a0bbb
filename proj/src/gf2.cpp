#include "randcx/gf2.hpp"

#include <bit>

namespace randcx::gf2 {

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

bool BitVector::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return size_;
}

std::vector<std::size_t> BitVector::set_bits() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  std::vector<bool> used(m.rows(), false);
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = m.rows();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!used[i] && m.row(i).test(col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == m.rows()) continue;
    used[pivot] = true;
    ++r;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != pivot && m.row(i).test(col)) m.row(i) ^= m.row(pivot);
    }
  }
  return r;
}

std::vector<BitVector> left_kernel(const Matrix& m) {
  // Row-reduce [M | I]; rows that vanish on the M side record dependencies.
  const std::size_t n = m.rows();
  std::vector<BitVector> work(n, BitVector(m.cols()));
  std::vector<BitVector> track(n, BitVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    work[i] = m.row(i);
    track[i].set(i);
  }
  std::vector<bool> used(n, false);
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && work[i].test(col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) continue;
    used[pivot] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != pivot && work[i].test(col)) {
        work[i] ^= work[pivot];
        track[i] ^= track[pivot];
      }
    }
  }
  std::vector<BitVector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) basis.push_back(track[i]);
  }
  return basis;
}

}  // namespace randcx::gf2
