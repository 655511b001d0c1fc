#ifndef HKTRI_FP_MATRIX_HPP
#define HKTRI_FP_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hktri/fp.hpp"

namespace hktri {

// Dense matrix over F_p, row-major, one byte per entry. Degenerate shapes
// (0 x n, n x 0) are legal; some subcases of the table builders produce them.
class FpMatrix {
public:
  FpMatrix(std::size_t rows, std::size_t cols, const Fp& field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

  static FpMatrix from(std::initializer_list<std::initializer_list<int>> rows,
                       const Fp& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Fp& field() const { return field_; }

  uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, uint32_t v) {
    data_[r * cols_ + c] = static_cast<uint8_t>(v % field_.modulus());
  }
  std::span<const uint8_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<uint8_t> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  FpMatrix transposed() const;

  bool operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ &&
           field_.modulus() == o.field_.modulus() && data_ == o.data_;
  }

private:
  std::size_t rows_, cols_;
  Fp field_;
  std::vector<uint8_t> data_;
};

// F_p-rank by Gaussian elimination with first-nonzero pivoting (deterministic).
// Bit-packed XOR elimination for p = 2, byte rows otherwise.
std::size_t rank(const FpMatrix& m);

// True iff M x = b is solvable, i.e. rank(M) = rank([M | b]).
// Throws std::invalid_argument when b's length differs from rows(M).
bool is_solvable(const FpMatrix& m, std::span<const uint8_t> b);

}  // namespace hktri

#endif
