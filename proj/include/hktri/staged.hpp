#ifndef HKTRI_STAGED_HPP
#define HKTRI_STAGED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hktri/tables.hpp"

namespace hktri {

// Case I: [2] divides A (neg2_max >= 1), bottom row indexed by A[-2/1].
// Case II: neg2_max = 0, bottom row indexed by A[-3/1]; the builders emit the
// transformed system whose e vector has a single nonzero entry.
enum class CaseId { I, II };

// Row and column bookkeeping for the staged system. Indices follow the
// mutant labels:
//   row TwoBlock k  <-> A [1]^one_min [2]^k / [3]^(one_min+k), k = two_min-1..1
//   row Star r      <-> A [1]^r [2] / [3]^(r+1),               r = one_min-1..0
//   row Last        <-> A [1]/[2] (case I) or A [1]/[3] (case II)
//   col TypeA1 i    <-> A [1]^one_min / ([2]^i [3]^(one_min-i))
//   col TypeA2 j    <-> A [1]^one_min [2]^j / [3]^(one_min+j)
//   col TypeB i     <-> A [1]^i [2]^two_min / [3]^(two_min+i)
// A label exists only when the mutant has no negative exponents; the
// truncated subcases drop rows/columns exactly this way.
struct RowLabel {
  enum Kind { TwoBlock, Star, Last } kind;
  int64_t index;
  bool operator==(const RowLabel&) const = default;
};
struct ColLabel {
  enum Kind { TypeA1, TypeA2, TypeB } kind;
  int64_t index;
  bool operator==(const ColLabel&) const = default;
};

std::vector<RowLabel> staged_row_labels(const EntryContext& ctx, CaseId c);
std::vector<ColLabel> staged_colA_labels(const EntryContext& ctx, CaseId c);
std::vector<ColLabel> staged_colB_labels(const EntryContext& ctx, CaseId c);

// Part A over all rows: signed binomial strings in the star/last rows under
// the TypeA1 columns, a lone 1 linking each TwoBlock row to its TypeA2 column.
FpMatrix build_B_partA(const EntryContext& ctx, CaseId c);

// Part B restricted to the rows below the double line (star rows + last row).
// The unspecified entries of the TwoBlock rows are excluded by construction:
// the stage operations never read them.
FpMatrix build_B_partB_lower(const EntryContext& ctx, CaseId c);

struct StagedBlocks {
  FpMatrix part_a;        // all rows x TypeA columns
  FpMatrix part_b_lower;  // star+last rows x TypeB columns
  std::vector<RowLabel> rows_a;
  std::vector<RowLabel> rows_b;
  std::vector<ColLabel> cols_a;
  std::vector<ColLabel> cols_b;
  std::vector<uint8_t> e;  // over rows_a: all zero except the last entry
};

StagedBlocks build_B(const EntryContext& ctx, CaseId c);

// Stage row operations: per stage, every row strictly below the anchor row
// becomes (the row just above it, pre-stage) + itself, all rows at once.
// Case I anchors descend from star(min(one_min, neg3_max)-1) to
// star(one_min-neg2_max-1); when neg3_max < one_min the first anchor's
// operation runs one_min-neg3_max+1 times. Case II performs the single
// operation anchored at star(one_min-1).
// Defined when the anchors exist: case I needs one_min <= neg2_max+neg3_max,
// case II needs neg3_max >= one_min; throws std::invalid_argument otherwise.
void reduce_stages(StagedBlocks& blocks, const EntryContext& ctx, CaseId c);

}  // namespace hktri

#endif
