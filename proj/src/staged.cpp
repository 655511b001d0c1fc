#include "hktri/staged.hpp"

#include <algorithm>
#include <stdexcept>

namespace hktri {

namespace {

void check_ctx(const EntryContext& ctx, CaseId c) {
  if (ctx.one_min < 1 || ctx.two_min < 1)
    throw std::invalid_argument("staged: one_min and two_min must be >= 1");
  if (c == CaseId::I && ctx.neg2_max < 1)
    throw std::invalid_argument("staged: case I needs neg2_max >= 1");
  if (c == CaseId::II && ctx.neg2_max != 0)
    throw std::invalid_argument("staged: case II needs neg2_max == 0");
  if (ctx.neg3_max < 1)
    throw std::invalid_argument("staged: [3] must divide A (neg3_max >= 1)");
  if (ctx.neg2_max >= ctx.one_min)
    throw std::invalid_argument("staged: condition (ii) must fail (neg2_max < one_min)");
}

}  // namespace

std::vector<RowLabel> staged_row_labels(const EntryContext& ctx, CaseId c) {
  check_ctx(ctx, c);
  std::vector<RowLabel> rows;
  const int64_t om = static_cast<int64_t>(ctx.one_min);
  const int64_t tm = static_cast<int64_t>(ctx.two_min);
  const int64_t n3 = static_cast<int64_t>(ctx.neg3_max);
  for (int64_t k = tm - 1; k >= 1; --k)
    if (om + k <= n3) rows.push_back({RowLabel::TwoBlock, k});
  for (int64_t r = om - 1; r >= 0; --r)
    if (r + 1 <= n3) rows.push_back({RowLabel::Star, r});
  rows.push_back({RowLabel::Last, 0});
  return rows;
}

std::vector<ColLabel> staged_colA_labels(const EntryContext& ctx, CaseId c) {
  check_ctx(ctx, c);
  std::vector<ColLabel> cols;
  const int64_t om = static_cast<int64_t>(ctx.one_min);
  const int64_t tm = static_cast<int64_t>(ctx.two_min);
  const int64_t n2 = static_cast<int64_t>(ctx.neg2_max);
  const int64_t n3 = static_cast<int64_t>(ctx.neg3_max);
  // left to right, increasing in the mutant order
  const int64_t top = (c == CaseId::I) ? n2 : 0;
  for (int64_t i = top; i >= 0; --i)
    if (om - i <= n3) cols.push_back({ColLabel::TypeA1, i});
  for (int64_t j = 1; j <= tm - 1; ++j)
    if (om + j <= n3) cols.push_back({ColLabel::TypeA2, j});
  return cols;
}

std::vector<ColLabel> staged_colB_labels(const EntryContext& ctx, CaseId c) {
  check_ctx(ctx, c);
  std::vector<ColLabel> cols;
  const int64_t om = static_cast<int64_t>(ctx.one_min);
  const int64_t tm = static_cast<int64_t>(ctx.two_min);
  const int64_t n3 = static_cast<int64_t>(ctx.neg3_max);
  for (int64_t i = 0; i <= om - 1; ++i)
    if (tm + i <= n3) cols.push_back({ColLabel::TypeB, i});
  return cols;
}

FpMatrix build_B_partA(const EntryContext& ctx, CaseId c) {
  const auto rows = staged_row_labels(ctx, c);
  const auto cols = staged_colA_labels(ctx, c);
  const int64_t om = static_cast<int64_t>(ctx.one_min);
  FpMatrix A(rows.size(), cols.size(), ctx.field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t cc = 0; cc < cols.size(); ++cc) {
      const auto& col = cols[cc];
      uint32_t v = 0;
      if (col.kind == ColLabel::TypeA1) {
        // star row r: (-1)^(one_min-r) C(one_min-1-r, i); the last row
        // continues the pattern one step further
        if (rows[r].kind == RowLabel::Star) {
          const int64_t u = om - 1 - rows[r].index;
          v = ctx.field.mul(sign_pow(u + 1, ctx.field),
                            binom_mod_p(u, col.index, ctx.field));
        } else if (rows[r].kind == RowLabel::Last) {
          v = ctx.field.mul(sign_pow(om + 1, ctx.field),
                            binom_mod_p(om, col.index, ctx.field));
        }
      } else {  // TypeA2: lone 1 where the row is the same mutant
        if (rows[r].kind == RowLabel::TwoBlock && rows[r].index == col.index) v = 1;
      }
      A.set(r, cc, v);
    }
  }
  return A;
}

FpMatrix build_B_partB_lower(const EntryContext& ctx, CaseId c) {
  const auto rows = staged_row_labels(ctx, c);
  const auto cols = staged_colB_labels(ctx, c);
  std::size_t first_lower = 0;
  while (first_lower < rows.size() && rows[first_lower].kind == RowLabel::TwoBlock)
    ++first_lower;
  FpMatrix B(rows.size() - first_lower, cols.size(), ctx.field);
  for (std::size_t r = first_lower; r < rows.size(); ++r) {
    for (std::size_t cc = 0; cc < cols.size(); ++cc) {
      uint32_t v = 0;
      if (rows[r].kind == RowLabel::Star) {
        // column TypeB i carries the alpha string starting at star row i
        const int64_t d = rows[r].index - cols[cc].index;
        if (d >= 0) v = alpha(d, ctx);
      }
      // last row: all zero
      B.set(r - first_lower, cc, v);
    }
  }
  return B;
}

StagedBlocks build_B(const EntryContext& ctx, CaseId c) {
  StagedBlocks b{build_B_partA(ctx, c),
                 build_B_partB_lower(ctx, c),
                 staged_row_labels(ctx, c),
                 {},
                 staged_colA_labels(ctx, c),
                 staged_colB_labels(ctx, c),
                 {}};
  for (const auto& r : b.rows_a)
    if (r.kind != RowLabel::TwoBlock) b.rows_b.push_back(r);
  b.e.assign(b.rows_a.size(), 0);
  b.e.back() = 1;
  return b;
}

void reduce_stages(StagedBlocks& blocks, const EntryContext& ctx, CaseId c) {
  check_ctx(ctx, c);
  const int64_t om = static_cast<int64_t>(ctx.one_min);
  const int64_t n2 = static_cast<int64_t>(ctx.neg2_max);
  const int64_t n3 = static_cast<int64_t>(ctx.neg3_max);
  if (c == CaseId::II && n3 < om)
    throw std::invalid_argument("reduce_stages: case II schedule needs neg3_max >= one_min");
  if (c == CaseId::I && om > n2 + n3)
    throw std::invalid_argument(
        "reduce_stages: case I schedule needs one_min <= neg2_max + neg3_max");

  // locate a star row inside rows_a / rows_b
  auto find_star = [](const std::vector<RowLabel>& rows, int64_t r) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].kind == RowLabel::Star && rows[i].index == r) return i;
    throw std::invalid_argument("reduce_stages: missing anchor star row " +
                                std::to_string(r));
  };
  // one stage: every row strictly below `anchor` += the row just above it,
  // simultaneously (sources are the pre-stage values)
  auto stage = [&](FpMatrix& m, std::size_t anchor) {
    if (m.cols() == 0) return;
    for (std::size_t r = m.rows(); r-- > anchor + 1;) {
      auto dst = m.row(r);
      auto src = m.row(r - 1);
      for (std::size_t j = 0; j < m.cols(); ++j)
        dst[j] = static_cast<uint8_t>(ctx.field.add(dst[j], src[j]));
    }
  };
  auto run = [&](int64_t star_index, int reps) {
    const std::size_t ia = find_star(blocks.rows_a, star_index);
    const std::size_t ib = find_star(blocks.rows_b, star_index);
    for (int t = 0; t < reps; ++t) {
      stage(blocks.part_a, ia);
      stage(blocks.part_b_lower, ib);
    }
  };

  if (c == CaseId::II) {
    run(om - 1, 1);
    return;
  }
  if (n3 >= om) {
    for (int64_t s = 1; s <= n2 + 1; ++s) run(om - s, 1);
  } else {
    const int64_t k = om - n3;
    run(n3 - 1, static_cast<int>(k + 1));
    for (int64_t r = om - k - 2; r >= om - n2 - 1; --r) run(r, 1);
  }
}

}  // namespace hktri
