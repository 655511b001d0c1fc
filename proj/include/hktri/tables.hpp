#ifndef HKTRI_TABLES_HPP
#define HKTRI_TABLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hktri/fp_matrix.hpp"
#include "hktri/invariants.hpp"

namespace hktri {

// Invariant tuple plus the field, the inputs every table entry depends on.
// Derived offsets: k2 = neg3_max - two_min (width of the surviving star
// columns), and for the neg3_max < one_min region, k = one_min - neg3_max
// and k' = neg3_max - two_min.
struct EntryContext {
  uint64_t one_min;
  uint64_t two_min;
  uint64_t neg2_max;
  uint64_t neg3_max;
  Fp field;

  EntryContext(const MutationInvariants& mi, const Fp& f)
      : one_min(mi.one_min), two_min(mi.two_min), neg2_max(mi.neg2_max),
        neg3_max(mi.neg3_max), field(f) {}
  EntryContext(uint64_t om, uint64_t tm, uint64_t n2, uint64_t n3, const Fp& f)
      : one_min(om), two_min(tm), neg2_max(n2), neg3_max(n3), field(f) {}

  int64_t k2() const { return static_cast<int64_t>(neg3_max) - static_cast<int64_t>(two_min); }
  int64_t k() const { return static_cast<int64_t>(one_min) - static_cast<int64_t>(neg3_max); }
  int64_t kprime() const { return k2(); }
};

// Entry families of the final C matrices. All vanish outside their stated
// index ranges, matching the implicit zero-extension of the binomials.
//   alpha_i = (-1)^(two_min+1) C(two_min-1, i)
//   delta_l = C(neg2_max+1, l)
//   beta_j  = sum_{i=0..j} alpha_i delta_{j-i}            (case I entries)
//   beta0_j = alpha_{j-1} + alpha_j, beta0_0 = alpha_0    (case II entries)
//   blacksquare_j = beta at window one_min-(k+1)-j
//   heart_i^r     = shifted-window inner product, rows above the squares
uint32_t alpha(int64_t i, const EntryContext& ctx);
uint32_t delta(int64_t l, const EntryContext& ctx);
uint32_t beta(int64_t j, const EntryContext& ctx);
uint32_t beta0(int64_t j, const EntryContext& ctx);
uint32_t blacksquare(int64_t j, const EntryContext& ctx);
uint32_t heart(int64_t i, int64_t r, const EntryContext& ctx);

enum class TableId { T5, T6, T8 };
const char* to_string(TableId t);

// C x = e with e = (0, ..., 0, 1)^t; membership is decided by whether the
// ranks of C and [C | e] agree.
struct SolvableSystem {
  FpMatrix C;
  std::vector<uint8_t> e;
  std::string clamp_note;  // nonempty when a degenerate shape was clamped
};

// Builds the C matrix of the given table for a context satisfying that
// table's preconditions (throws std::invalid_argument otherwise):
//   T5: neg2_max >= 1, max(one_min, two_min) <= neg3_max < one_min+two_min-1
//   T6: neg2_max >= 1, two_min <= neg3_max < one_min
//   T8: neg2_max == 0, max(one_min, two_min) <= neg3_max < one_min+two_min-1
SolvableSystem build_C(const EntryContext& ctx, TableId table);

bool is_member_by_rank(const SolvableSystem& sys);

// Plain-text dump: header "table=<id> p=<p> one_min=.. two_min=.. neg2=.. neg3=.."
// followed by the rows, entries in [0, p-1] separated by spaces.
std::string dump(const FpMatrix& m, const std::string& table_id,
                 const EntryContext& ctx);

}  // namespace hktri

#endif
