#include "hktri/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "hktri/fp_matrix.hpp"

namespace hktri {

namespace {

struct SparseEntry {
  uint64_t col;
  uint8_t val;
};

// Row of g*f in quotient-basis coordinates: at most three entries, sorted by
// column (columns ascend as monomials descend in deglex).
std::array<SparseEntry, 3> product_row(const QuotientBasis& qb, const Trinomial& f,
                                       const Monomial& g, std::size_t& count) {
  std::array<SparseEntry, 3> out{};
  count = 0;
  for (int label = 1; label <= 3; ++label) {
    const Term& t = f.term(label);
    Monomial prod = multiply(g, t.monomial);
    bool inside = true;
    for (std::size_t i = 0; i < prod.vars(); ++i)
      if (prod[i] >= qb.q()) {
        inside = false;
        break;
      }
    if (inside) out[count++] = {qb.index(prod), static_cast<uint8_t>(t.coeff)};
  }
  std::sort(out.begin(), out.begin() + count,
            [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  return out;
}

QuotientBasis checked_basis(const Trinomial& f, uint32_t n, uint64_t budget) {
  if (n < 1) throw std::invalid_argument("oracle: n >= 1 required");
  const uint64_t q = checked_pow(f.field().modulus(), n);
  const uint64_t size = checked_pow(q, f.vars());
  if (size > budget) throw BudgetError(size, budget);
  return QuotientBasis(q, f.vars());
}

}  // namespace

uint64_t global_dimension(const Trinomial& f, uint32_t n, uint64_t budget) {
  const QuotientBasis qb = checked_basis(f, n, budget);
  const Fp& fp = f.field();
  const uint64_t N = qb.size();

  // Echelon basis with sparse rows; most rows keep their original three
  // entries, so insertion works on a dense scratch reset between rows.
  std::vector<std::vector<SparseEntry>> rows;
  std::vector<int64_t> pivot_row(N, -1);
  std::vector<uint8_t> scratch(N, 0);
  std::vector<uint64_t> touched;

  Monomial g = qb.first();
  uint64_t rank = 0;
  do {
    std::size_t cnt = 0;
    auto entries = product_row(qb, f, g, cnt);
    if (cnt == 0) continue;
    for (std::size_t i = 0; i < cnt; ++i) {
      scratch[entries[i].col] = entries[i].val;
      touched.push_back(entries[i].col);
    }
    uint64_t lead = entries[0].col;
    while (lead < N) {
      if (scratch[lead] == 0) {
        ++lead;
        continue;
      }
      const int64_t pr = pivot_row[lead];
      if (pr < 0) break;
      const uint32_t c = scratch[lead];
      for (const SparseEntry& e : rows[pr]) {
        scratch[e.col] = static_cast<uint8_t>(fp.sub(scratch[e.col], fp.mul(c, e.val)));
        touched.push_back(e.col);
      }
    }
    if (lead < N) {
      // new pivot: collect the scratch row, normalized to pivot 1
      const uint32_t inv = fp.inv(scratch[lead]);
      std::vector<SparseEntry> row;
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (uint64_t c : touched)
        if (c >= lead && scratch[c])
          row.push_back({c, static_cast<uint8_t>(fp.mul(scratch[c], inv))});
      pivot_row[lead] = static_cast<int64_t>(rows.size());
      rows.push_back(std::move(row));
      ++rank;
    }
    for (uint64_t c : touched) scratch[c] = 0;
    touched.clear();
  } while (qb.next(g));

  return N - rank;
}

namespace {

// Row-type policies for the reduced-echelon sweep.
struct Gf2Ops {
  uint64_t ncols;
  std::size_t words;
  using Row = std::vector<uint64_t>;

  explicit Gf2Ops(uint64_t n) : ncols(n), words((n + 63) / 64) {}
  Row make() const { return Row(words, 0); }
  static void add_at(Row& r, uint64_t j, uint32_t v) {
    if (v & 1) r[j >> 6] ^= uint64_t{1} << (j & 63);
  }
  static uint32_t coeff(const Row& r, uint64_t j) {
    return static_cast<uint32_t>((r[j >> 6] >> (j & 63)) & 1);
  }
  static void clear_at(Row& r, uint64_t j) {
    r[j >> 6] &= ~(uint64_t{1} << (j & 63));
  }
  uint64_t leading(const Row& r, uint64_t from) const {
    std::size_t w = from >> 6;
    if (w >= words) return ncols;
    uint64_t word = r[w] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (word) return (static_cast<uint64_t>(w) << 6) + std::countr_zero(word);
      if (++w >= words) return ncols;
      word = r[w];
    }
  }
  static void eliminate(Row& dst, const Row& src, uint32_t) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
  }
  static void normalize(Row&, uint64_t) {}
  bool is_singleton(const Row& r, uint64_t j) const {
    for (std::size_t w = 0; w < words; ++w) {
      uint64_t expect = (w == (j >> 6)) ? uint64_t{1} << (j & 63) : 0;
      if (r[w] != expect) return false;
    }
    return true;
  }
};

struct FpOps {
  uint64_t ncols;
  Fp field;
  using Row = std::vector<uint8_t>;

  FpOps(uint64_t n, const Fp& f) : ncols(n), field(f) {}
  Row make() const { return Row(ncols, 0); }
  void add_at(Row& r, uint64_t j, uint32_t v) const {
    r[j] = static_cast<uint8_t>(field.add(r[j], v % field.modulus()));
  }
  static uint32_t coeff(const Row& r, uint64_t j) { return r[j]; }
  static void clear_at(Row& r, uint64_t j) { r[j] = 0; }
  uint64_t leading(const Row& r, uint64_t from) const {
    for (uint64_t j = from; j < ncols; ++j)
      if (r[j]) return j;
    return ncols;
  }
  void eliminate(Row& dst, const Row& src, uint32_t c) const {
    for (uint64_t i = 0; i < ncols; ++i)
      dst[i] = static_cast<uint8_t>(field.sub(dst[i], field.mul(c, src[i])));
  }
  void normalize(Row& r, uint64_t lead) const {
    const uint32_t inv = field.inv(r[lead]);
    for (uint64_t i = lead; i < ncols; ++i)
      r[i] = static_cast<uint8_t>(field.mul(r[i], inv));
  }
  bool is_singleton(const Row& r, uint64_t j) const {
    for (uint64_t i = 0; i < ncols; ++i)
      if (r[i] && i != j) return false;
    return r[j] != 0;
  }
};

template <class Ops>
std::vector<bool> sweep_impl(const Trinomial& f, const QuotientBasis& qb,
                             const Ops& ops) {
  const uint64_t N = qb.size();
  constexpr uint64_t kDead = std::numeric_limits<uint64_t>::max();
  std::vector<typename Ops::Row> rows;
  std::vector<uint64_t> pivot_of_row;
  std::vector<int64_t> pivot_row(N, -1);

  // Full reduced echelon insertion: reduce the leading coordinate, then the
  // tail against every existing pivot, then clear the new pivot column from
  // the other rows.
  auto insert = [&](typename Ops::Row r, uint64_t from) {
    uint64_t lead = ops.leading(r, from);
    while (lead < N && pivot_row[lead] >= 0) {
      ops.eliminate(r, rows[pivot_row[lead]], Ops::coeff(r, lead));
      lead = ops.leading(r, lead);
    }
    if (lead >= N) return;
    ops.normalize(r, lead);
    for (uint64_t j = ops.leading(r, lead + 1); j < N; j = ops.leading(r, j + 1)) {
      if (pivot_row[j] >= 0)
        ops.eliminate(r, rows[pivot_row[j]], Ops::coeff(r, j));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (pivot_of_row[i] == kDead) continue;
      const uint32_t c = Ops::coeff(rows[i], lead);
      if (c) ops.eliminate(rows[i], r, c);
    }
    pivot_row[lead] = static_cast<int64_t>(rows.size());
    pivot_of_row.push_back(lead);
    rows.push_back(std::move(r));
  };

  {
    Monomial g = qb.first();
    do {
      std::size_t cnt = 0;
      auto entries = product_row(qb, f, g, cnt);
      if (cnt == 0) continue;
      typename Ops::Row r = ops.make();
      for (std::size_t i = 0; i < cnt; ++i) ops.add_at(r, entries[i].col, entries[i].val);
      insert(std::move(r), entries[0].col);
    } while (qb.next(g));
  }

  std::vector<bool> is_member(N, false);
  for (uint64_t l = 0; l < N; ++l) {
    const int64_t pr = pivot_row[l];
    if (pr >= 0) {
      is_member[l] = ops.is_singleton(rows[pr], l);
      // retire coordinate l: drop it from the pivot row and re-insert the tail
      typename Ops::Row tail = std::move(rows[pr]);
      pivot_of_row[pr] = kDead;
      pivot_row[l] = -1;
      Ops::clear_at(tail, l);
      insert(std::move(tail), l + 1);
    }
    // rows with pivots > l hold zeros at l: nothing else to retire
  }
  return is_member;
}

}  // namespace

std::vector<bool> membership_sweep(const Trinomial& f, uint32_t n, uint64_t budget) {
  const QuotientBasis qb = checked_basis(f, n, budget);
  if (f.field().modulus() == 2) return sweep_impl(f, qb, Gf2Ops(qb.size()));
  return sweep_impl(f, qb, FpOps(qb.size(), f.field()));
}

bool member(const Monomial& A, const Trinomial& f, uint32_t n, uint64_t budget) {
  const QuotientBasis qb = checked_basis(f, n, budget);
  const uint64_t N = qb.size();
  const uint64_t l = qb.index(A);
  const uint64_t width = N - l;  // coordinates of monomials <= A

  std::vector<std::array<SparseEntry, 3>> kept;
  std::vector<std::size_t> kept_cnt;
  Monomial g = qb.first();
  do {
    std::size_t cnt = 0;
    auto entries = product_row(qb, f, g, cnt);
    std::array<SparseEntry, 3> proj{};
    std::size_t pc = 0;
    for (std::size_t i = 0; i < cnt; ++i)
      if (entries[i].col >= l) proj[pc++] = entries[i];
    if (pc) {
      kept.push_back(proj);
      kept_cnt.push_back(pc);
    }
  } while (qb.next(g));

  FpMatrix M(kept.size(), width, f.field());
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t i = 0; i < kept_cnt[r]; ++i)
      M.set(r, kept[r][i].col - l, kept[r][i].val);

  // A's class lies in the row span of M iff M^t x = e_A is solvable
  FpMatrix Mt = M.transposed();
  std::vector<uint8_t> eA(width, 0);
  eA[0] = 1;
  return is_solvable(Mt, eA);
}

}  // namespace hktri
