#include "hktri/trinomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hktri {

namespace {

void validate_term(const Term& t, const Fp& field) {
  if (t.coeff % field.modulus() == 0)
    throw std::invalid_argument("trinomial: coefficient of " +
                                hktri::to_string(t.monomial) + " is 0 mod " +
                                std::to_string(field.modulus()));
  if (t.monomial.is_one())
    throw std::invalid_argument("trinomial: constant term not allowed");
}

}  // namespace

Trinomial::Trinomial(Term a, Term b, Term c, const Fp& field)
    : t1_(std::move(a)), t2_(std::move(b)), t3_(std::move(c)), field_(field) {
  validate_term(t1_, field_);
  validate_term(t2_, field_);
  validate_term(t3_, field_);
  const Term* ts[3] = {&t1_, &t2_, &t3_};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Monomial& u = ts[i]->monomial;
      const Monomial& v = ts[j]->monomial;
      for (std::size_t k = 0; k < u.vars(); ++k)
        if (u[k] > 0 && v[k] > 0)
          throw std::invalid_argument(
              "trinomial: terms " + hktri::to_string(u) + " and " +
              hktri::to_string(v) + " share variable x" + std::to_string(k + 1) +
              " (pairwise GCD must be 1)");
    }
  // label [1] <| [2] <| [3]
  std::sort(std::begin(ts), std::end(ts), [](const Term* x, const Term* y) {
    return deglex_less(x->monomial, y->monomial);
  });
  Term s1 = *ts[0], s2 = *ts[1], s3 = *ts[2];
  t1_ = std::move(s1);
  t2_ = std::move(s2);
  t3_ = std::move(s3);
  t1_.coeff %= field_.modulus();
  t2_.coeff %= field_.modulus();
  t3_.coeff %= field_.modulus();
}

const Term& Trinomial::term(int label) const {
  switch (label) {
    case 1: return t1_;
    case 2: return t2_;
    case 3: return t3_;
  }
  throw std::invalid_argument("Trinomial::term: label must be 1, 2 or 3");
}

Trinomial Trinomial::with_coefficients(uint32_t c1, uint32_t c2, uint32_t c3) const {
  return Trinomial({c1, t1_.monomial}, {c2, t2_.monomial}, {c3, t3_.monomial}, field_);
}

std::string Trinomial::to_string() const {
  auto one = [&](const Term& t) {
    std::string s;
    if (t.coeff != 1) s = std::to_string(t.coeff) + "*";
    return s + hktri::to_string(t.monomial);
  };
  return one(t3_) + " + " + one(t2_) + " + " + one(t1_);
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(i) +
                                ": " + what);
  }
  int64_t integer() {
    skip_ws();
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected an integer");
    int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      if (v > (int64_t{1} << 40)) fail("integer literal too large");
    }
    return neg ? -v : v;
  }

  // factor := 'x' index ['^' exp]
  std::pair<std::size_t, uint32_t> factor() {
    if (!accept('x')) fail("expected a factor 'x<index>'");
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected a variable index after 'x'");
    int64_t idx = integer();
    if (idx < 1 || idx > 64) fail("variable index out of range [1, 64]");
    uint32_t exp = 1;
    if (accept('^')) {
      int64_t e = integer();
      if (e < 1 || e > (1 << 20)) fail("exponent out of range");
      exp = static_cast<uint32_t>(e);
    }
    return {static_cast<std::size_t>(idx - 1), exp};
  }

  // term := [int '*'] factor ('*' factor)*
  std::pair<int64_t, std::vector<std::pair<std::size_t, uint32_t>>> term() {
    int64_t coeff = 1;
    skip_ws();
    if (i < s.size() &&
        (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-')) {
      coeff = integer();
      if (!accept('*')) fail("expected '*' after coefficient");
    }
    std::vector<std::pair<std::size_t, uint32_t>> fs;
    fs.push_back(factor());
    while (accept('*')) fs.push_back(factor());
    return {coeff, std::move(fs)};
  }
};

}  // namespace

Trinomial Trinomial::parse(std::string_view text, const Fp& field) {
  Parser ps{text};
  std::vector<std::pair<int64_t, std::vector<std::pair<std::size_t, uint32_t>>>> terms;
  terms.push_back(ps.term());
  while (ps.accept('+')) terms.push_back(ps.term());
  if (!ps.eof()) ps.fail("trailing input");
  if (terms.size() != 3)
    throw std::invalid_argument("expected exactly 3 terms, found " +
                                std::to_string(terms.size()));
  std::size_t m = 0;
  for (const auto& [c, fs] : terms)
    for (const auto& [idx, e] : fs) m = std::max(m, idx + 1);
  std::vector<Term> built;
  for (const auto& [c, fs] : terms) {
    Monomial mono = Monomial::one(m);
    for (const auto& [idx, e] : fs) mono[idx] += e;
    built.push_back({field.reduce(c), std::move(mono)});
  }
  return Trinomial(built[0], built[1], built[2], field);
}

}  // namespace hktri
