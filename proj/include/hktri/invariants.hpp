#ifndef HKTRI_INVARIANTS_HPP
#define HKTRI_INVARIANTS_HPP

#include <cstdint>

#include "hktri/trinomial.hpp"

namespace hktri {

// The four mutation counts of a monomial A relative to f and q = p^n:
//   one_min / two_min: least k with some exponent of A * [1]^k (resp. [2]^k)
//     reaching q — the multiplications needed to push A into the Frobenius
//     power ideal;
//   neg2_max / neg3_max: largest k with [2]^k (resp. [3]^k) dividing A.
// Disjoint supports make each a one-dimensional min over the term's support.
struct MutationInvariants {
  uint64_t one_min;
  uint64_t two_min;
  uint64_t neg2_max;
  uint64_t neg3_max;

  bool operator==(const MutationInvariants&) const = default;
};

// Requires every exponent of A below q.
MutationInvariants invariants(const Monomial& A, const Trinomial& f, uint64_t q);

}  // namespace hktri

#endif
