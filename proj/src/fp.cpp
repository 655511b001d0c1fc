#include "hktri/fp.hpp"

#include <string>

namespace hktri {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
  if (p > 251)
    throw std::invalid_argument("Fp: modulus " + std::to_string(p) +
                                " exceeds 251 (one-byte entry limit)");
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Fp::inv(uint32_t a) const {
  if (a % p_ == 0) throw std::invalid_argument("Fp::inv of zero");
  return pow(a, p_ - 2);
}

uint32_t binom_mod_p(uint64_t n, int64_t k, const Fp& field) {
  if (k < 0 || static_cast<uint64_t>(k) > n) return 0;
  const uint32_t p = field.modulus();
  // C(a, b) for digits a, b < p; all factors are units of F_p
  auto small = [&](uint32_t a, uint32_t b) -> uint32_t {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    uint32_t num = 1, den = 1;
    for (uint32_t i = 1; i <= b; ++i) {
      num = field.mul(num, a + 1 - i);
      den = field.mul(den, i);
    }
    return b == 0 ? 1 : field.mul(num, field.inv(den));
  };
  uint64_t kk = static_cast<uint64_t>(k);
  uint32_t r = 1;
  while (n || kk) {
    uint32_t nd = static_cast<uint32_t>(n % p);
    uint32_t kd = static_cast<uint32_t>(kk % p);
    if (kd > nd) return 0;
    r = field.mul(r, small(nd, kd));
    n /= p;
    kk /= p;
  }
  return r;
}

}  // namespace hktri
