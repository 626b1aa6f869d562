#pragma once

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/rational.hpp"
#include "polemono/sparse_matrix.hpp"

namespace polemono {

namespace detail {

// mpz_divexact is undefined on a non-exact quotient; guard it so a pivoting
// bug can never silently corrupt an exact rank.
inline void divexact_checked(Integer& x, const Integer& d) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw InternalError("fraction-free elimination lost integrality");
  x = q;
}

}  // namespace detail

// Exact rank over Q by fraction-free (Bareiss) elimination. Denominators are
// cleared per row first, then every update stays integral:
//
//   a[r][t] <- (piv * a[r][t] - a[r][pc] * prow[t]) / prev_piv
//
// with the division exact by the Sylvester identity. Entry growth makes this
// the slow-but-certain path; it backs the --exact flag and serves as the
// independent oracle the modular ranks are checked against in the tests.
inline long rank_exact(const SparseMatrix& m, long* pivot_bits_peak = nullptr) {
  const long nr = m.rows();
  const long nc = m.cols();
  if (nr == 0 || nc == 0 || m.nnz() == 0) return 0;

  SparseMatrix canon = m;
  canon.finalize();

  std::vector<std::vector<Integer>> a(static_cast<size_t>(nr),
                                      std::vector<Integer>(static_cast<size_t>(nc)));
  {
    std::vector<Integer> rowlcm(static_cast<size_t>(nr), 1);
    for (const auto& e : canon.entries()) {
      Integer& l = rowlcm[static_cast<size_t>(e.row)];
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den().get_mpz_t());
    }
    for (const auto& e : canon.entries()) {
      const Integer& l = rowlcm[static_cast<size_t>(e.row)];
      a[static_cast<size_t>(e.row)][static_cast<size_t>(e.col)] =
          e.value.get_num() * (l / e.value.get_den());
    }
  }

  std::vector<size_t> active(static_cast<size_t>(nr));
  for (long r = 0; r < nr; ++r) active[static_cast<size_t>(r)] = static_cast<size_t>(r);

  Integer prev = 1;
  long rank = 0;
  long peak_bits = 0;
  for (long c = 0; c < nc && !active.empty(); ++c) {
    // Smallest nonzero pivot keeps the fraction-free growth down.
    size_t best = active.size();
    size_t best_bits = 0;
    for (size_t i = 0; i < active.size(); ++i) {
      const Integer& v = a[active[i]][static_cast<size_t>(c)];
      if (v == 0) continue;
      size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
      if (best == active.size() || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == active.size()) continue;  // column has no pivot; rank deficiency
    std::swap(active[best], active.back());
    size_t pr = active.back();
    active.pop_back();
    const Integer& piv = a[pr][static_cast<size_t>(c)];
    peak_bits = std::max(peak_bits, static_cast<long>(best_bits));

    for (size_t r : active) {
      std::vector<Integer>& row = a[r];
      const Integer& lead = row[static_cast<size_t>(c)];
      if (lead == 0) {
        for (long t = c + 1; t < nc; ++t) {
          if (row[static_cast<size_t>(t)] == 0) continue;
          row[static_cast<size_t>(t)] *= piv;
          detail::divexact_checked(row[static_cast<size_t>(t)], prev);
        }
      } else {
        for (long t = c + 1; t < nc; ++t) {
          Integer& x = row[static_cast<size_t>(t)];
          x = piv * x - lead * a[pr][static_cast<size_t>(t)];
          if (x != 0) detail::divexact_checked(x, prev);
        }
        row[static_cast<size_t>(c)] = 0;
      }
    }
    prev = piv;
    ++rank;
  }
  if (pivot_bits_peak) *pivot_bits_peak = peak_bits;
  return rank;
}

}  // namespace polemono
