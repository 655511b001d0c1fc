#include "hktri/quotient_basis.hpp"

#include <stdexcept>

namespace hktri {

uint64_t checked_pow(uint64_t q, std::size_t m) {
  uint64_t r = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (q != 0 && r > (uint64_t{1} << 62) / q)
      throw std::overflow_error("q^m exceeds 2^62");
    r *= q;
  }
  return r;
}

QuotientBasis::QuotientBasis(uint64_t q, std::size_t m) : q_(q), m_(m) {
  if (q < 1 || m < 1) throw std::invalid_argument("QuotientBasis: q, m >= 1");
  total_ = checked_pow(q, m);
  const std::size_t dmax = m * static_cast<std::size_t>(q - 1);
  comps_.assign(m + 1, std::vector<uint64_t>(dmax + 1, 0));
  comps_[0][0] = 1;
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t d = 0; d <= dmax; ++d) {
      uint64_t s = 0;
      for (uint64_t v = 0; v < q && v <= d; ++v) s += comps_[j - 1][d - v];
      comps_[j][d] = s;
    }
  degree_offset_.assign(dmax + 2, 0);
  for (std::size_t d = dmax + 1; d-- > 0;)
    degree_offset_[d] = (d + 1 <= dmax ? degree_offset_[d + 1] + comps_[m][d + 1]
                                       : 0);
}

uint64_t QuotientBasis::comps(std::size_t j, int64_t d) const {
  if (d < 0 || d >= static_cast<int64_t>(comps_[j].size())) return 0;
  return comps_[j][static_cast<std::size_t>(d)];
}

uint64_t QuotientBasis::index(const Monomial& a) const {
  if (a.vars() != m_) throw std::invalid_argument("QuotientBasis::index: wrong m");
  int64_t deg = 0;
  for (std::size_t i = 0; i < m_; ++i) {
    if (a[i] >= q_) throw std::invalid_argument("QuotientBasis::index: exponent >= q");
    deg += a[i];
  }
  // larger degrees come first
  uint64_t idx = degree_offset_[static_cast<std::size_t>(deg)];
  // within the degree, decreasing lex on (e_m, ..., e_1): count same-degree
  // vectors that are strictly larger
  int64_t rem = deg;
  for (std::size_t pos = m_; pos-- > 0;) {
    const uint32_t ei = a[pos];
    for (int64_t v = static_cast<int64_t>(q_) - 1; v > ei; --v)
      idx += comps(pos, rem - v);
    rem -= ei;
  }
  return idx;
}

Monomial QuotientBasis::monomial(uint64_t idx) const {
  if (idx >= total_) throw std::invalid_argument("QuotientBasis::monomial: index out of range");
  std::size_t deg = 0;
  while (degree_offset_[deg] > idx) ++deg;  // smallest deg with offset <= idx
  uint64_t rest = idx - degree_offset_[deg];
  std::vector<uint32_t> e(m_, 0);
  int64_t rem = static_cast<int64_t>(deg);
  for (std::size_t pos = m_; pos-- > 0;) {
    for (int64_t v = static_cast<int64_t>(q_) - 1; v >= 0; --v) {
      const uint64_t block = comps(pos, rem - v);
      if (rest < block) {
        e[pos] = static_cast<uint32_t>(v);
        rem -= v;
        break;
      }
      rest -= block;
    }
  }
  return Monomial(std::move(e));
}

Monomial QuotientBasis::first() const {
  return Monomial(std::vector<uint32_t>(m_, static_cast<uint32_t>(q_ - 1)));
}

bool QuotientBasis::next(Monomial& a) const {
  // next smaller vector in (degree, then lex on (e_m..e_1)) order
  const int64_t cap = static_cast<int64_t>(q_) - 1;
  int64_t below = 0;  // sum of exponents at positions < pos
  for (std::size_t pos = 0; pos < m_; ++pos) {
    if (pos >= 1 && a[pos] > 0 && below + 1 <= static_cast<int64_t>(pos) * cap) {
      // decrement here, redistribute below+1 greedily from the top position down
      a[pos] -= 1;
      int64_t rem = below + 1;
      for (std::size_t j = pos; j-- > 0;) {
        const int64_t v = std::min<int64_t>(cap, rem);
        a[j] = static_cast<uint32_t>(v);
        rem -= v;
      }
      return true;
    }
    below += a[pos];
  }
  // degree exhausted: drop to the first (lex-largest) vector of degree-1
  int64_t deg = below - 1;
  if (deg < 0) return false;
  for (std::size_t j = m_; j-- > 0;) {
    const int64_t v = std::min<int64_t>(cap, deg);
    a[j] = static_cast<uint32_t>(v);
    deg -= v;
  }
  return true;
}

}  // namespace hktri
