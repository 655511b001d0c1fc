#ifndef HKTRI_CLASSIFIER_HPP
#define HKTRI_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hktri/invariants.hpp"
#include "hktri/tables.hpp"

namespace hktri {

// One tag per leaf of the membership decision tree. The RankTest_* leaves are
// the only ones whose verdict comes from an actual rank computation.
enum class Branch {
  Cond_i,
  Cond_ii,
  NoTermDivides,
  AlwaysSolvable_I1,
  AlwaysSolvable_II1,
  RankTest_T5,
  RankTest_T6,
  RankTest_T8,
  Iff_1min_le_neg2max,
  Unsolvable_Remark,
  Unsolvable_II3a,
  Unsolvable_II3b,
  Unsolvable_II3c,
};

const char* to_string(Branch b);
bool is_rank_branch(Branch b);

struct RankWitness {
  std::size_t rows, cols;
  std::size_t rank_c;   // rank(C)
  std::size_t rank_ce;  // rank([C | e])
};

struct MembershipDecision {
  bool member;
  Branch branch;
  MutationInvariants inv;
  std::optional<RankWitness> witness;  // present iff is_rank_branch(branch)
  std::string clamp_note;              // nonempty when a table shape was clamped
};

// Decides A in A_c + (f) from the invariants alone plus, on the three rank
// branches, the solvability of the corresponding C system. Coefficients of f
// are never read: the decision depends only on the three monomials.
// Requires every exponent of A below q.
MembershipDecision classify(const Monomial& A, const Trinomial& f, uint64_t q);

}  // namespace hktri

#endif
