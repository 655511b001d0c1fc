#ifndef HKTRI_TRINOMIAL_HPP
#define HKTRI_TRINOMIAL_HPP

#include <string>
#include <string_view>

#include "hktri/fp.hpp"
#include "hktri/monomial.hpp"

namespace hktri {

// Nonzero coefficient times a non-constant monomial.
struct Term {
  uint32_t coeff;
  Monomial monomial;
};

// A disjoint-term trinomial: three terms with pairwise coprime monomials,
// labeled so that term(1) < term(2) < term(3) in deglex (always strict:
// disjoint supports rule out ties).
class Trinomial {
public:
  Trinomial(Term a, Term b, Term c, const Fp& field);

  // Grammar: poly := term ('+' term)* ; term := [int '*'] factor ('*' factor)* ;
  // factor := 'x' index ['^' exp] ; whitespace ignored. Exactly three terms;
  // variables are x1..xm with m inferred from the highest index used.
  static Trinomial parse(std::string_view text, const Fp& field);

  const Term& term(int label) const;  // label in {1, 2, 3}
  std::size_t vars() const { return t1_.monomial.vars(); }
  const Fp& field() const { return field_; }

  // Same monomials, different nonzero coefficients (given for labels 1, 2, 3).
  Trinomial with_coefficients(uint32_t c1, uint32_t c2, uint32_t c3) const;

  // Canonical form, largest term first: parse(to_string(f)) reproduces f.
  std::string to_string() const;

private:
  Term t1_, t2_, t3_;
  Fp field_;
};

}  // namespace hktri

#endif
