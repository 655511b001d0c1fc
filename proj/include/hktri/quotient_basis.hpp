#ifndef HKTRI_QUOTIENT_BASIS_HPP
#define HKTRI_QUOTIENT_BASIS_HPP

#include <cstdint>
#include <vector>

#include "hktri/monomial.hpp"

namespace hktri {

// Bijection between the q^m monomials with every exponent below q and the
// indices [0, q^m), ordered by decreasing deglex: index 0 is prod x_i^(q-1),
// index q^m - 1 is 1. Ranking works digit-wise over precomputed counts of
// bounded compositions.
class QuotientBasis {
public:
  QuotientBasis(uint64_t q, std::size_t m);

  uint64_t q() const { return q_; }
  std::size_t vars() const { return m_; }
  uint64_t size() const { return total_; }

  uint64_t index(const Monomial& a) const;
  Monomial monomial(uint64_t idx) const;

  Monomial first() const;          // the top monomial
  bool next(Monomial& a) const;    // successor in decreasing deglex; false at the end

private:
  // comps_[j][d] = number of vectors in [0, q-1]^j with coordinate sum d
  uint64_t comps(std::size_t j, int64_t d) const;

  uint64_t q_;
  std::size_t m_;
  uint64_t total_;
  std::vector<std::vector<uint64_t>> comps_;
  std::vector<uint64_t> degree_offset_;  // count of monomials of degree > d
};

// q^m, throwing std::overflow_error past 2^62.
uint64_t checked_pow(uint64_t q, std::size_t m);

}  // namespace hktri

#endif
