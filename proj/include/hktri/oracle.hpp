#ifndef HKTRI_ORACLE_HPP
#define HKTRI_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hktri/quotient_basis.hpp"
#include "hktri/trinomial.hpp"

namespace hktri {

// q^m exceeded the configured cap. Carries the size the run would need.
class BudgetError : public std::runtime_error {
public:
  BudgetError(uint64_t required, uint64_t budget)
      : std::runtime_error("oracle budget exceeded: needs q^m = " +
                           std::to_string(required) + " > budget " +
                           std::to_string(budget)),
        required_(required) {}
  uint64_t required() const { return required_; }

private:
  uint64_t required_;
};

inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 20;

// Exact colength dim_k S / (m^[q] + (f)) with q = p^n: the count of standard
// monomials minus the rank of all rows g*f (g over the standard monomials,
// terms with any exponent >= q deleted). Ground truth for everything else.
uint64_t global_dimension(const Trinomial& f, uint32_t n,
                          uint64_t budget = kDefaultBudget);

// From-scratch membership of a single monomial: project every g*f onto the
// coordinates <= A and test A's coordinate vector against the row span
// (is_solvable on the transpose system). Slow; the cross-check path.
bool member(const Monomial& A, const Trinomial& f, uint32_t n,
            uint64_t budget = kDefaultBudget);

// Membership of every monomial in one pass: a reduced echelon basis of the
// row space is maintained while coordinates are retired in decreasing deglex
// order. Entry i of the result corresponds to QuotientBasis index i.
// Bit-packed rows for p = 2, byte rows otherwise.
std::vector<bool> membership_sweep(const Trinomial& f, uint32_t n,
                                   uint64_t budget = kDefaultBudget);

}  // namespace hktri

#endif
