#include "hktri/monomial.hpp"

#include <stdexcept>

namespace hktri {

std::strong_ordering deglex_cmp(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("deglex_cmp: variable counts differ");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.vars(); i-- > 0;)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool divides(const Monomial& d, const Monomial& a) {
  if (d.vars() != a.vars())
    throw std::invalid_argument("divides: variable counts differ");
  for (std::size_t i = 0; i < d.vars(); ++i)
    if (d[i] > a[i]) return false;
  return true;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("multiply: variable counts differ");
  std::vector<uint32_t> e(a.vars());
  for (std::size_t i = 0; i < a.vars(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

Monomial divide(const Monomial& a, const Monomial& d) {
  if (!divides(d, a)) throw std::invalid_argument("divide: not a divisor");
  std::vector<uint32_t> e(a.vars());
  for (std::size_t i = 0; i < a.vars(); ++i) e[i] = a[i] - d[i];
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.vars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace hktri
