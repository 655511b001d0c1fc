#include "hktri/invariants.hpp"

#include <limits>
#include <stdexcept>

namespace hktri {

MutationInvariants invariants(const Monomial& A, const Trinomial& f, uint64_t q) {
  if (A.vars() != f.vars())
    throw std::invalid_argument("invariants: variable counts differ");
  for (std::size_t i = 0; i < A.vars(); ++i)
    if (A[i] >= q) throw std::invalid_argument("invariants: exponent >= q");

  auto min_mult = [&](const Monomial& t) {
    uint64_t best = std::numeric_limits<uint64_t>::max();
    for (std::size_t i = 0; i < t.vars(); ++i)
      if (t[i] > 0) best = std::min(best, (q - A[i] + t[i] - 1) / t[i]);
    return best;  // ceil((q - A_i) / t_i), minimized over the support
  };
  auto max_div = [&](const Monomial& t) {
    uint64_t best = std::numeric_limits<uint64_t>::max();
    for (std::size_t i = 0; i < t.vars(); ++i)
      if (t[i] > 0) best = std::min(best, static_cast<uint64_t>(A[i] / t[i]));
    return best;
  };

  return {min_mult(f.term(1).monomial), min_mult(f.term(2).monomial),
          max_div(f.term(2).monomial), max_div(f.term(3).monomial)};
}

}  // namespace hktri
