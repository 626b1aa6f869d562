#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/modular.hpp"
#include "polemono/sparse_matrix.hpp"

namespace polemono {

struct ElimStats {
  long sparse_pivots = 0;
  long dense_pivots = 0;
  long dense_rows = 0;
  long dense_cols = 0;
};

namespace detail {

// Rank of a matrix over GF(p) by sparse Gaussian elimination. Pivots are
// chosen greedily on the column of minimum live count (cheapest Markowitz
// proxy), with the pivot row of minimum length within that column; once the
// live block densifies past a threshold the remainder is finished with a
// dense Montgomery elimination, which has far better constants at that
// point. The matrices this sees are multiplication and divergence blocks in
// monomial bases, typically well under 1% dense, so most pivots cost a
// handful of merge operations.
class SparseElim {
 public:
  using Entry = std::pair<std::uint32_t, u64>;  // (col, Montgomery value)

  SparseElim(const SparseMatrix& m, const Montgomery& mg) : mg_(mg) {
    nrows_ = m.rows();
    ncols_ = m.cols();
    rows_.resize(static_cast<size_t>(nrows_));
    colcount_.assign(static_cast<size_t>(ncols_), 0);
    colrows_.resize(static_cast<size_t>(ncols_));
    // Entries arrive sorted by (row, col) from SparseMatrix::finalize.
    for (const auto& e : m.entries()) {
      u64 den = mpz_fdiv_ui(e.value.get_den().get_mpz_t(), mg_.p);
      if (den == 0)
        throw BadPrimeError("prime " + std::to_string(mg_.p) + " divides an entry denominator");
      u64 num = mpz_fdiv_ui(e.value.get_num().get_mpz_t(), mg_.p);
      if (num == 0) continue;
      u64 v = mg_.mul(mg_.to(num), mg_.inv(mg_.to(den)));
      rows_[static_cast<size_t>(e.row)].push_back(
          {static_cast<std::uint32_t>(e.col), v});
      ++colcount_[static_cast<size_t>(e.col)];
      ++nnz_;
    }
    live_.assign(static_cast<size_t>(nrows_), 0);
    for (long r = 0; r < nrows_; ++r)
      if (!rows_[static_cast<size_t>(r)].empty()) {
        live_[static_cast<size_t>(r)] = 1;
        ++live_rows_;
        for (const auto& [c, v] : rows_[static_cast<size_t>(r)])
          colrows_[c].push_back(static_cast<std::uint32_t>(r));
      }
    for (long c = 0; c < ncols_; ++c)
      if (colcount_[static_cast<size_t>(c)] > 0) ++live_cols_;

    bucket_.resize(kCap + 1);
    for (long c = 0; c < ncols_; ++c)
      if (colcount_[static_cast<size_t>(c)] > 0) push_bucket(static_cast<std::uint32_t>(c));
    stamp_.assign(static_cast<size_t>(nrows_), 0);
  }

  long run(ElimStats* stats) {
    long rank = 0;
    while (true) {
      if (live_rows_ == 0 || live_cols_ == 0) break;
      if (should_go_dense()) {
        rank += dense_finish(stats);
        break;
      }
      int c = pop_min_col();
      if (c < 0) break;
      if (!eliminate_col(static_cast<std::uint32_t>(c))) continue;
      ++rank;
      if (stats) ++stats->sparse_pivots;
    }
    return rank;
  }

 private:
  static constexpr int kCap = 48;

  void push_bucket(std::uint32_t c) {
    int n = colcount_[c];
    if (n <= 0) return;
    int b = n > kCap ? kCap : n;
    bucket_[static_cast<size_t>(b)].push_back(c);
    if (b < cursor_) cursor_ = b;
  }

  int pop_min_col() {
    for (int b = cursor_; b <= kCap; ++b) {
      auto& bk = bucket_[static_cast<size_t>(b)];
      while (!bk.empty()) {
        std::uint32_t c = bk.back();
        bk.pop_back();
        int n = colcount_[c];
        if (n <= 0) continue;
        int want = n > kCap ? kCap : n;
        if (want != b) {
          bucket_[static_cast<size_t>(want)].push_back(c);
          continue;
        }
        cursor_ = b;
        return static_cast<int>(c);
      }
      cursor_ = b + 1;
    }
    return -1;
  }

  bool row_entry(std::uint32_t r, std::uint32_t c, u64* val) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::uint32_t col) { return e.first < col; });
    if (it == row.end() || it->first != c) return false;
    *val = it->second;
    return true;
  }

  void count_change(std::uint32_t c, int delta) {
    int before = colcount_[c];
    colcount_[c] = before + delta;
    if (before > 0 && colcount_[c] == 0) --live_cols_;
    if (before == 0 && colcount_[c] > 0) ++live_cols_;
    if (colcount_[c] > 0) push_bucket(c);
  }

  bool eliminate_col(std::uint32_t pc) {
    // Collect live rows that still contain the pivot column; colrows_ may
    // hold stale ids from fills that later cancelled.
    ++stamp_now_;
    cand_.clear();
    for (std::uint32_t r : colrows_[pc]) {
      if (!live_[r] || stamp_[r] == stamp_now_) continue;
      stamp_[r] = stamp_now_;
      u64 v;
      if (row_entry(r, pc, &v)) cand_.push_back(r);
    }
    colrows_[pc].clear();
    if (cand_.empty()) {  // defensive: counts are maintained exactly
      if (colcount_[pc] > 0) {
        colcount_[pc] = 0;
        --live_cols_;
      }
      return false;
    }

    std::uint32_t pr = cand_[0];
    for (std::uint32_t r : cand_)
      if (rows_[r].size() < rows_[pr].size() || (rows_[r].size() == rows_[pr].size() && r < pr))
        pr = r;

    u64 pv = 0;
    row_entry(pr, pc, &pv);
    u64 pinv = mg_.inv(pv);

    for (std::uint32_t r : cand_) {
      if (r == pr) continue;
      u64 rv = 0;
      row_entry(r, pc, &rv);
      merge_rows(r, pr, mg_.mul(rv, pinv), pc);
    }

    // Retire the pivot row.
    live_[pr] = 0;
    --live_rows_;
    for (const auto& [c, v] : rows_[pr]) count_change(c, -1);
    nnz_ -= static_cast<long>(rows_[pr].size());
    rows_[pr].clear();
    rows_[pr].shrink_to_fit();
    return true;
  }

  // rows_[r] -= coef * rows_[pr]; the pivot column cancels exactly.
  void merge_rows(std::uint32_t r, std::uint32_t pr, u64 coef, std::uint32_t pc) {
    const auto& a = rows_[r];
    const auto& p = rows_[pr];
    scratch_.clear();
    scratch_.reserve(a.size() + p.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < p.size()) {
      if (j == p.size() || (i < a.size() && a[i].first < p[j].first)) {
        scratch_.push_back(a[i]);
        ++i;
      } else if (i == a.size() || p[j].first < a[i].first) {
        // fill-in; coef and p[j].second are nonzero so the product is too
        u64 nv = mg_.neg(mg_.mul(coef, p[j].second));
        scratch_.push_back({p[j].first, nv});
        colrows_[p[j].first].push_back(r);
        count_change(p[j].first, +1);
        ++j;
      } else {
        u64 nv = mg_.sub(a[i].second, mg_.mul(coef, p[j].second));
        if (nv != 0)
          scratch_.push_back({a[i].first, nv});
        else
          count_change(a[i].first, -1);
        ++i;
        ++j;
      }
    }
    nnz_ += static_cast<long>(scratch_.size()) - static_cast<long>(a.size());
    rows_[r].swap(scratch_);
    (void)pc;
  }

  bool should_go_dense() const {
    double area = static_cast<double>(live_rows_) * static_cast<double>(live_cols_);
    if (area <= 65536.0) return true;
    return static_cast<double>(nnz_) > 0.18 * area;
  }

  long dense_finish(ElimStats* stats) {
    // Compact live columns, keeping ascending column order.
    std::vector<std::int32_t> colmap(static_cast<size_t>(ncols_), -1);
    std::int32_t nc = 0;
    for (long c = 0; c < ncols_; ++c)
      if (colcount_[static_cast<size_t>(c)] > 0) colmap[static_cast<size_t>(c)] = nc++;
    long nr = live_rows_;
    if (nr == 0 || nc == 0) return 0;
    if (static_cast<double>(nr) * nc > 4.0e8)
      throw InternalError("dense elimination block too large");
    if (stats) {
      stats->dense_rows = nr;
      stats->dense_cols = nc;
    }

    std::vector<u64> a(static_cast<size_t>(nr) * static_cast<size_t>(nc), 0);
    long ri = 0;
    for (long r = 0; r < nrows_; ++r) {
      if (!live_[static_cast<size_t>(r)]) continue;
      u64* out = a.data() + static_cast<size_t>(ri) * nc;
      for (const auto& [c, v] : rows_[static_cast<size_t>(r)]) out[colmap[c]] = v;
      ++ri;
    }

    long rank = 0;
    long lead = 0;
    for (std::int32_t j = 0; j < nc && lead < nr; ++j) {
      long piv = -1;
      for (long r = lead; r < nr; ++r)
        if (a[static_cast<size_t>(r) * nc + j] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      if (piv != lead)
        std::swap_ranges(a.begin() + piv * nc + j, a.begin() + (piv + 1) * nc,
                         a.begin() + lead * nc + j);
      const u64* prow = a.data() + static_cast<size_t>(lead) * nc;
      u64 pinv = mg_.inv(prow[j]);
      for (long r = lead + 1; r < nr; ++r) {
        u64* row = a.data() + static_cast<size_t>(r) * nc;
        if (row[j] == 0) continue;
        u64 coef = mg_.mul(row[j], pinv);
        row[j] = 0;
        for (std::int32_t t = j + 1; t < nc; ++t)
          row[t] = mg_.sub(row[t], mg_.mul(coef, prow[t]));
      }
      ++lead;
      ++rank;
      if (stats) ++stats->dense_pivots;
    }
    return rank;
  }

  Montgomery mg_;
  long nrows_ = 0, ncols_ = 0;
  std::vector<std::vector<Entry>> rows_;
  std::vector<int> colcount_;
  std::vector<std::vector<std::uint32_t>> colrows_;
  std::vector<char> live_;
  std::vector<std::vector<std::uint32_t>> bucket_;
  int cursor_ = 1;
  std::vector<std::uint32_t> cand_;
  std::vector<Entry> scratch_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t stamp_now_ = 0;
  long nnz_ = 0;
  long live_rows_ = 0;
  long live_cols_ = 0;
};

}  // namespace detail

// Rank of M over GF(p). Throws BadPrimeError when p divides the denominator
// of some entry; entries whose numerator vanishes mod p simply drop out (the
// modular rank is always <= the rational rank).
inline long rank_mod_p(const SparseMatrix& m, u64 p, ElimStats* stats = nullptr) {
  if (m.rows() == 0 || m.cols() == 0 || m.nnz() == 0) {
    // Still detect bad primes so callers get consistent behaviour.
    for (const auto& e : m.entries())
      if (mpz_fdiv_ui(e.value.get_den().get_mpz_t(), p) == 0)
        throw BadPrimeError("prime divides an entry denominator");
    return 0;
  }
  Montgomery mg = Montgomery::make(p);
  if (!m.finalized()) {
    SparseMatrix copy = m;
    copy.finalize();
    detail::SparseElim e(copy, mg);
    return e.run(stats);
  }
  detail::SparseElim e(m, mg);
  return e.run(stats);
}

}  // namespace polemono
