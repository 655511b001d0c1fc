#include "hktri/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hktri {

uint32_t alpha(int64_t i, const EntryContext& ctx) {
  const uint32_t sign = sign_pow(ctx.two_min + 1, ctx.field);
  return ctx.field.mul(sign, binom_mod_p(ctx.two_min - 1, i, ctx.field));
}

uint32_t delta(int64_t l, const EntryContext& ctx) {
  return binom_mod_p(ctx.neg2_max + 1, l, ctx.field);
}

uint32_t beta(int64_t j, const EntryContext& ctx) {
  if (j < 0) return 0;
  uint32_t s = 0;
  for (int64_t i = 0; i <= j; ++i)
    s = ctx.field.add(s, ctx.field.mul(alpha(i, ctx), delta(j - i, ctx)));
  return s;
}

uint32_t beta0(int64_t j, const EntryContext& ctx) {
  if (j < 0) return 0;
  if (j == 0) return alpha(0, ctx);
  return ctx.field.add(alpha(j - 1, ctx), alpha(j, ctx));
}

uint32_t blacksquare(int64_t j, const EntryContext& ctx) {
  const int64_t L = static_cast<int64_t>(ctx.one_min) - (ctx.k() + 1) - j;
  if (L < 0) return 0;  // "0 if j > one_min - (k+1)"
  uint32_t s = 0;
  for (int64_t i = 0; i <= L; ++i)
    s = ctx.field.add(s, ctx.field.mul(alpha(i, ctx), delta(L - i, ctx)));
  return s;
}

uint32_t heart(int64_t i, int64_t r, const EntryContext& ctx) {
  const int64_t L = static_cast<int64_t>(ctx.one_min) - (ctx.k() + 1) - r;
  if (L < 0) return 0;
  uint32_t s = 0;
  for (int64_t t = 0; t <= L; ++t)
    s = ctx.field.add(s, ctx.field.mul(alpha(t, ctx), delta(L + i - t, ctx)));
  return s;
}

const char* to_string(TableId t) {
  switch (t) {
    case TableId::T5: return "T5";
    case TableId::T6: return "T6";
    case TableId::T8: return "T8";
  }
  return "?";
}

SolvableSystem build_C(const EntryContext& ctx, TableId table) {
  const int64_t om = static_cast<int64_t>(ctx.one_min);
  const int64_t tm = static_cast<int64_t>(ctx.two_min);
  const int64_t n2 = static_cast<int64_t>(ctx.neg2_max);
  const int64_t n3 = static_cast<int64_t>(ctx.neg3_max);
  auto require = [&](bool ok, const char* what) {
    if (!ok)
      throw std::invalid_argument(std::string("build_C(") + to_string(table) +
                                  "): precondition violated: " + what);
  };

  std::string clamp;
  std::size_t rows = 0, cols = 0;
  switch (table) {
    case TableId::T5:
      require(n2 >= 1, "neg2_max >= 1");
      require(std::max(om, tm) <= n3 && n3 < om + tm - 1,
              "max(one_min,two_min) <= neg3_max < one_min+two_min-1");
      rows = static_cast<std::size_t>(om - n2);
      cols = static_cast<std::size_t>(ctx.k2() + 1);
      break;
    case TableId::T8:
      require(n2 == 0, "neg2_max == 0");
      require(std::max(om, tm) <= n3 && n3 < om + tm - 1,
              "max(one_min,two_min) <= neg3_max < one_min+two_min-1");
      rows = static_cast<std::size_t>(om);
      cols = static_cast<std::size_t>(ctx.k2() + 1);
      break;
    case TableId::T6:
      require(n2 >= 1, "neg2_max >= 1");
      require(tm <= n3 && n3 < om, "two_min <= neg3_max < one_min");
      rows = static_cast<std::size_t>(om - n2);
      cols = static_cast<std::size_t>(ctx.kprime() + 1);
      break;
  }

  FpMatrix C(rows, cols, ctx.field);
  if (table == TableId::T5) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        C.set(r, c, beta(om - 1 - static_cast<int64_t>(r) - static_cast<int64_t>(c), ctx));
  } else if (table == TableId::T8) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        C.set(r, c, beta0(om - 1 - static_cast<int64_t>(r) - static_cast<int64_t>(c), ctx));
  } else {
    // Rows from the top: hearts for i = k down to 1, then the square rows
    // continuing the same diagonal strings down to the bottom row. When the
    // nominal inventory (k hearts + squares) overflows the mandated
    // one_min - neg2_max row count, keep the top rows and log the clamp.
    const int64_t k = ctx.k();
    const std::size_t hearts =
        std::min<std::size_t>(static_cast<std::size_t>(k), rows);
    if (hearts < static_cast<std::size_t>(k)) {
      clamp = "T6 row inventory clamped: k=" + std::to_string(k) +
              " heart rows into " + std::to_string(rows) + " total rows";
    }
    for (std::size_t r = 0; r < hearts; ++r) {
      const int64_t i = k - static_cast<int64_t>(r);
      for (std::size_t c = 0; c < cols; ++c)
        C.set(r, c, heart(i, static_cast<int64_t>(c), ctx));
    }
    for (std::size_t r = hearts; r < rows; ++r) {
      const int64_t rp = static_cast<int64_t>(r - hearts);
      for (std::size_t c = 0; c < cols; ++c)
        C.set(r, c, blacksquare(rp + static_cast<int64_t>(c), ctx));
    }
  }

  std::vector<uint8_t> e(rows, 0);
  if (rows > 0) e[rows - 1] = 1;
  return {std::move(C), std::move(e), std::move(clamp)};
}

bool is_member_by_rank(const SolvableSystem& sys) {
  if (sys.C.rows() == 0) return false;  // empty system: not solvable by default
  return is_solvable(sys.C, sys.e);
}

std::string dump(const FpMatrix& m, const std::string& table_id,
                 const EntryContext& ctx) {
  std::ostringstream os;
  os << "table=" << table_id << " p=" << ctx.field.modulus()
     << " one_min=" << ctx.one_min << " two_min=" << ctx.two_min
     << " neg2=" << ctx.neg2_max << " neg3=" << ctx.neg3_max << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << static_cast<int>(m.at(r, c));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hktri
