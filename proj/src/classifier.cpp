#include "hktri/classifier.hpp"

#include <algorithm>

namespace hktri {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Cond_i: return "Cond_i";
    case Branch::Cond_ii: return "Cond_ii";
    case Branch::NoTermDivides: return "NoTermDivides";
    case Branch::AlwaysSolvable_I1: return "AlwaysSolvable_I1";
    case Branch::AlwaysSolvable_II1: return "AlwaysSolvable_II1";
    case Branch::RankTest_T5: return "RankTest_T5";
    case Branch::RankTest_T6: return "RankTest_T6";
    case Branch::RankTest_T8: return "RankTest_T8";
    case Branch::Iff_1min_le_neg2max: return "Iff_1min_le_neg2max";
    case Branch::Unsolvable_Remark: return "Unsolvable_Remark";
    case Branch::Unsolvable_II3a: return "Unsolvable_II3a";
    case Branch::Unsolvable_II3b: return "Unsolvable_II3b";
    case Branch::Unsolvable_II3c: return "Unsolvable_II3c";
  }
  return "?";
}

bool is_rank_branch(Branch b) {
  return b == Branch::RankTest_T5 || b == Branch::RankTest_T6 ||
         b == Branch::RankTest_T8;
}

namespace {

MembershipDecision rank_decide(const MutationInvariants& mi, const Fp& field,
                               TableId table, Branch branch) {
  EntryContext ctx(mi, field);
  SolvableSystem sys = build_C(ctx, table);
  const std::size_t rc = rank(sys.C);
  FpMatrix aug(sys.C.rows(), sys.C.cols() + 1, field);
  for (std::size_t r = 0; r < sys.C.rows(); ++r) {
    for (std::size_t c = 0; c < sys.C.cols(); ++c) aug.set(r, c, sys.C.at(r, c));
    aug.set(r, sys.C.cols(), sys.e[r]);
  }
  const std::size_t rce = rank(aug);
  RankWitness w{sys.C.rows(), sys.C.cols(), rc, rce};
  return {rc == rce && sys.C.rows() > 0, branch, mi, w, std::move(sys.clamp_note)};
}

}  // namespace

MembershipDecision classify(const Monomial& A, const Trinomial& f, uint64_t q) {
  const MutationInvariants mi = invariants(A, f, q);
  const auto& m1 = f.term(1).monomial;
  const auto& m2 = f.term(2).monomial;
  const auto& m3 = f.term(3).monomial;

  // (i): [1] | A
  if (divides(m1, A)) return {true, Branch::Cond_i, mi, {}, {}};
  // (ii): [2] | A and a power of [1]/[2] both stays integral and overflows;
  // with disjoint supports this is exactly one_min <= neg2_max.
  if (divides(m2, A) && mi.one_min <= mi.neg2_max)
    return {true, Branch::Cond_ii, mi, {}, {}};
  // (iii) needs [3] | A; otherwise nothing applies.
  if (!divides(m3, A)) return {false, Branch::NoTermDivides, mi, {}, {}};

  const uint64_t om = mi.one_min, tm = mi.two_min;
  const uint64_t n2 = mi.neg2_max, n3 = mi.neg3_max;

  if (n2 == 0) {
    if (n3 >= om + tm - 1) return {true, Branch::AlwaysSolvable_II1, mi, {}, {}};
    if (std::max(om, tm) <= n3)
      return rank_decide(mi, f.field(), TableId::T8, Branch::RankTest_T8);
    // neg3_max < max(one_min, two_min): the three II.3 possibilities, all
    // unsolvable.
    if (n3 < tm && n3 >= om) return {false, Branch::Unsolvable_II3a, mi, {}, {}};
    if (n3 < tm) return {false, Branch::Unsolvable_II3b, mi, {}, {}};
    return {false, Branch::Unsolvable_II3c, mi, {}, {}};
  }

  if (n3 >= om + tm - 1) return {true, Branch::AlwaysSolvable_I1, mi, {}, {}};
  if (std::max(om, tm) <= n3)
    return rank_decide(mi, f.field(), TableId::T5, Branch::RankTest_T5);
  if (n3 < tm && n3 >= om)
    return {om <= n2, Branch::Iff_1min_le_neg2max, mi, {}, {}};
  if (n3 < tm && n3 < om && om <= n2 + n3)
    return {om <= n2, Branch::Iff_1min_le_neg2max, mi, {}, {}};
  if (n3 < tm) return {false, Branch::Unsolvable_Remark, mi, {}, {}};
  // neg3_max >= two_min and neg3_max < one_min
  return rank_decide(mi, f.field(), TableId::T6, Branch::RankTest_T6);
}

}  // namespace hktri
