#ifndef HKTRI_FP_HPP
#define HKTRI_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace hktri {

bool is_prime(uint64_t n);

// Arithmetic context for the prime field F_p. Primality is checked once at
// construction; entries are stored as plain integers in [0, p).
// p is capped at 251 so matrix storage stays one byte per entry.
class Fp {
public:
  explicit Fp(uint32_t p);

  uint32_t modulus() const { return p_; }

  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    return static_cast<uint32_t>(r < 0 ? r + p_ : r);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;

  bool operator==(const Fp& o) const { return p_ == o.p_; }

private:
  uint32_t p_;
};

// C(n, k) mod p by Lucas' theorem (digit-wise base p). Returns 0 when k < 0
// or k > n. Exact for arbitrarily large n, O(log_p n).
uint32_t binom_mod_p(uint64_t n, int64_t k, const Fp& field);

// (-1)^e mod p.
inline uint32_t sign_pow(uint64_t e, const Fp& field) {
  return (e % 2 == 0) ? 1u : field.neg(1u);
}

}  // namespace hktri

#endif
