#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rbmtopo::gf2 {

// Dense bit vector over the two-element field.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64)) {}

  int size() const noexcept { return size_; }
  bool get(int i) const { return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U; }
  void set(int i, bool value = true);
  void flip(int i) { words_[static_cast<std::size_t>(i) / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& other);
  bool any() const;
  int popcount() const;
  // Parity of the bitwise AND.
  bool dot(const BitVector& other) const;
  std::vector<int> ones() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  int rows() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }
  BitVector& row(int r) { return rows_[static_cast<std::size_t>(r)]; }
  const BitVector& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  bool get(int r, int c) const { return row(r).get(c); }
  void set(int r, int c, bool value = true) { row(r).set(c, value); }
  void append_row(BitVector v);

 private:
  int cols_ = 0;
  std::vector<BitVector> rows_;
};

struct Echelon {
  BitMatrix reduced;            // reduced row echelon form, zero rows dropped
  std::vector<int> pivot_cols;  // pivot column of each kept row
  int rank() const noexcept { return static_cast<int>(pivot_cols.size()); }
};

Echelon row_reduce(BitMatrix m);
int rank(const BitMatrix& m);
// Rows form a basis of {x : m x = 0}.
BitMatrix null_space(const BitMatrix& m);

struct Solution {
  std::optional<BitVector> x;  // free variables set to 0
  int rank = 0;                // rank of the coefficient matrix
  int augmented_rank = 0;      // rank of [A | b]
};

Solution solve(const BitMatrix& a, const BitVector& b);

}  // namespace rbmtopo::gf2
