#include "hktri/fp_matrix.hpp"

#include <stdexcept>

namespace hktri {

FpMatrix FpMatrix::from(std::initializer_list<std::initializer_list<int>> rows,
                        const Fp& field) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.begin()->size() : 0;
  FpMatrix m(nr, nc, field);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw std::invalid_argument("FpMatrix::from: ragged rows");
    std::size_t c = 0;
    for (int v : row) m.set(r, c++, field.reduce(v));
    ++r;
  }
  return m;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

namespace {

// rank over F_2 on bit-packed rows, XOR row operations
std::size_t rank_gf2(std::vector<std::vector<uint64_t>>& rows, std::size_t cols) {
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    const std::size_t w = c >> 6;
    const uint64_t bit = uint64_t{1} << (c & 63);
    std::size_t piv = rk;
    while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rk], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rk && (rows[i][w] & bit)) {
        uint64_t* a = rows[i].data();
        const uint64_t* b = rows[rk].data();
        for (std::size_t j = w; j < rows[rk].size(); ++j) a[j] ^= b[j];
      }
    }
    ++rk;
  }
  return rk;
}

std::size_t rank_bytes(std::vector<std::vector<uint8_t>>& rows, std::size_t cols,
                       const Fp& f) {
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rk], rows[piv]);
    const uint32_t inv = f.inv(rows[rk][c]);
    for (std::size_t j = c; j < cols; ++j)
      rows[rk][j] = static_cast<uint8_t>(f.mul(rows[rk][j], inv));
    for (std::size_t i = rk + 1; i < rows.size(); ++i) {
      const uint32_t m = rows[i][c];
      if (!m) continue;
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = static_cast<uint8_t>(f.sub(rows[i][j], f.mul(m, rows[rk][j])));
    }
    ++rk;
  }
  return rk;
}

// augment == true appends b as an extra trailing column
std::size_t rank_impl(const FpMatrix& m, std::span<const uint8_t> b, bool augment) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols() + (augment ? 1 : 0);
  if (nr == 0 || nc == 0) return 0;
  if (m.field().modulus() == 2) {
    const std::size_t words = (nc + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(nr, std::vector<uint64_t>(words, 0));
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.at(r, c) & 1) rows[r][c >> 6] |= uint64_t{1} << (c & 63);
      if (augment && (b[r] & 1)) {
        std::size_t c = nc - 1;
        rows[r][c >> 6] |= uint64_t{1} << (c & 63);
      }
    }
    return rank_gf2(rows, nc);
  }
  std::vector<std::vector<uint8_t>> rows(nr, std::vector<uint8_t>(nc, 0));
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    if (augment) rows[r][nc - 1] = b[r];
  }
  return rank_bytes(rows, nc, m.field());
}

}  // namespace

std::size_t rank(const FpMatrix& m) { return rank_impl(m, {}, false); }

bool is_solvable(const FpMatrix& m, std::span<const uint8_t> b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("is_solvable: rhs length differs from row count");
  return rank_impl(m, b, false) == rank_impl(m, b, true);
}

}  // namespace hktri
