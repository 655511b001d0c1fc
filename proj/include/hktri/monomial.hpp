#ifndef HKTRI_MONOMIAL_HPP
#define HKTRI_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hktri {

// Exponent vector over a fixed variable count m; slot i holds the exponent
// of x_{i+1}.
class Monomial {
public:
  explicit Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {}
  static Monomial one(std::size_t m) { return Monomial(std::vector<uint32_t>(m, 0)); }

  std::size_t vars() const { return e_.size(); }
  uint32_t operator[](std::size_t i) const { return e_[i]; }
  uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<uint32_t>& exponents() const { return e_; }

  uint64_t degree() const {
    uint64_t d = 0;
    for (uint32_t x : e_) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
  std::vector<uint32_t> e_;
};

// Degree lexicographic order with x_1 < x_2 < ... < x_m: total degree first,
// ties broken by comparing exponents from x_m downward (the larger exponent
// of the most significant distinguishing variable wins).
std::strong_ordering deglex_cmp(const Monomial& a, const Monomial& b);

inline bool deglex_less(const Monomial& a, const Monomial& b) {
  return deglex_cmp(a, b) < 0;
}

// Divisibility and exact arithmetic on exponent vectors. Coefficients play
// no role here.
bool divides(const Monomial& d, const Monomial& a);
Monomial multiply(const Monomial& a, const Monomial& b);
Monomial divide(const Monomial& a, const Monomial& d);  // requires divides(d, a)

// "x1^2*x3" style; "1" for the empty monomial.
std::string to_string(const Monomial& m);

}  // namespace hktri

#endif
