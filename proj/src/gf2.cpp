#include "rbmtopo/gf2.hpp"

#include <bit>

#include "rbmtopo/errors.hpp"

namespace rbmtopo::gf2 {

void BitVector::set(int i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  auto& w = words_[static_cast<std::size_t>(i) / 64];
  w = value ? (w | bit) : (w & ~bit);
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw ContractError("bit vector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::any() const {
  for (auto w : words_) {
    if (w) return true;
  }
  return false;
}

int BitVector::popcount() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw ContractError("bit vector size mismatch");
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
  return c & 1;
}

std::vector<int> BitVector::ones() const {
  std::vector<int> out;
  for (int i = 0; i < size_; ++i) {
    if (get(i)) out.push_back(i);
  }
  return out;
}

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows), BitVector(cols)) {}

void BitMatrix::append_row(BitVector v) {
  if (rows_.empty() && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw ContractError("row width mismatch");
  rows_.push_back(std::move(v));
}

Echelon row_reduce(BitMatrix m) {
  Echelon out;
  int next = 0;
  for (int c = 0; c < m.cols() && next < m.rows(); ++c) {
    int pivot = -1;
    for (int r = next; r < m.rows(); ++r) {
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m.row(pivot), m.row(next));
    for (int r = 0; r < m.rows(); ++r) {
      if (r != next && m.get(r, c)) m.row(r) ^= m.row(next);
    }
    out.pivot_cols.push_back(c);
    ++next;
  }
  out.reduced = BitMatrix(0, m.cols());
  for (int r = 0; r < next; ++r) out.reduced.append_row(m.row(r));
  return out;
}

int rank(const BitMatrix& m) { return row_reduce(m).rank(); }

BitMatrix null_space(const BitMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  BitMatrix basis(0, m.cols());
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    BitVector x(m.cols());
    x.set(free);
    for (int r = 0; r < e.rank(); ++r) {
      if (e.reduced.get(r, free)) x.set(e.pivot_cols[static_cast<std::size_t>(r)]);
    }
    basis.append_row(std::move(x));
  }
  return basis;
}

Solution solve(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows()) throw ContractError("right-hand side length mismatch");
  BitMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c : a.row(r).ones()) aug.set(r, c);
    if (b.get(r)) aug.set(r, a.cols());
  }
  const Echelon e = row_reduce(aug);
  Solution out;
  out.augmented_rank = e.rank();
  out.rank = e.rank();
  for (int c : e.pivot_cols) {
    if (c == a.cols()) --out.rank;
  }
  if (out.rank != out.augmented_rank) return out;
  BitVector x(a.cols());
  for (int r = 0; r < e.rank(); ++r) {
    if (e.reduced.get(r, a.cols())) x.set(e.pivot_cols[static_cast<std::size_t>(r)]);
  }
  out.x = std::move(x);
  return out;
}

}  // namespace rbmtopo::gf2
