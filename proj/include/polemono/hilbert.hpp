#pragma once

#include <string>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/matrix_builder.hpp"
#include "polemono/polynomial.hpp"
#include "polemono/rank.hpp"
#include "polemono/thread_pool.hpp"

namespace polemono {

inline long comb2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Hilbert function of the Milnor algebra of a smooth curve of degree d,
// i.e. the coefficients of ((1 - t^{d-1}) / (1 - t))^3. Supported on
// [0, 3(d-2)], symmetric, and the reference every singular curve is
// measured against.
inline long smooth_milnor_dim(int d, int j) {
  return graded_dim(j) - 3 * graded_dim(j - (d - 1)) + 3 * graded_dim(j - 2 * (d - 1)) -
         graded_dim(j - 3 * (d - 1));
}

// Dimension of the degree-j piece of df ^ Omega^1, the wedge products with
// 1-forms. Zero through degree d, then polynomial in j with a correction
// once Koszul syzygies of the three partials enter at degree 2d.
inline long koszul_wedge_dim(int d, int j) {
  if (j <= d) return 0;
  long v = 3 * comb2(j - d + 1);
  if (j >= 2 * d) v -= comb2(j - 2 * d + 2);
  return v;
}

// Multiplication map S_{j-d+1}^3 -> S_j by the three partials; its cokernel
// is the degree-j piece of the Milnor algebra.
inline SparseMatrix jacobian_matrix(const Partials& pf, int d, int j) {
  BlockMatrixBuilder b;
  int r = b.add_row_block(j);
  int ca = b.add_col_block(j - d + 1);
  int cb = b.add_col_block(j - d + 1);
  int cc = b.add_col_block(j - d + 1);
  b.mult(r, ca, pf.fx, +1);
  b.mult(r, cb, pf.fy, +1);
  b.mult(r, cc, pf.fz, +1);
  return b.build();
}

inline long milnor_dim(const Partials& pf, int d, int j, const RankPolicy& policy) {
  if (j < 0) return 0;
  if (j < d - 1) return graded_dim(j);
  SparseMatrix m = jacobian_matrix(pf, d, j);
  return graded_dim(j) - rank_certified(m, policy).rank;
}

// Hilbert-series data of the Milnor algebra plus the syzygy dimensions
// derived from it. Array index ranges: m covers [0, 5d], m_smooth covers
// [0, 3(d-2)], kw / h2 / syz cover [0, 4d]; the *_at accessors extend by
// zero outside those ranges.
struct HilbertData {
  int d = 0;
  std::vector<long> m;
  std::vector<long> m_smooth;
  std::vector<long> kw;
  std::vector<long> h2;
  std::vector<long> syz;
  long tau = 0;
  long ct = 0;
  long st = 0;
  int mdr = 0;

  long m_at(int j) const {
    if (j < 0 || j >= static_cast<int>(m.size())) return j < 0 ? 0 : tau;
    return m[static_cast<size_t>(j)];
  }
  long m_smooth_at(int j) const {
    if (j < 0 || j >= static_cast<int>(m_smooth.size())) return 0;
    return m_smooth[static_cast<size_t>(j)];
  }
  long kw_at(int j) const { return koszul_wedge_dim(d, j); }
  long h2_at(int j) const {
    if (j < 2) return 0;
    if (j >= 2 * d - 2) return tau;
    return j < static_cast<int>(h2.size()) ? h2[static_cast<size_t>(j)] : tau;
  }
  long syz_at(int j) const {
    if (j < 0) return 0;
    if (j < static_cast<int>(syz.size())) return syz[static_cast<size_t>(j)];
    return h2_at(j) + kw_at(j);
  }
};

// Degree-by-degree Hilbert function of M(f) = S/(f_x, f_y, f_z) and the
// reduced/singularity thresholds read off from it.
//
// Reducedness guard: for a reduced curve m(f)_j is constant (= tau) from
// st <= 3d-5 on, while a non-reduced curve has one-dimensional singular
// locus and m(f)_j grows without bound, so constancy of the tail of the
// computed window decides. The smooth case is what forces the window to
// start at 3d-5 rather than 3d-6: there m(f)_{3d-6} = 1 (socle) with
// tau = 0.
inline HilbertData compute_hilbert(int d, const Partials& pf, const RankPolicy& policy,
                                   int threads, const DumpSink* dump = nullptr) {
  HilbertData h;
  h.d = d;
  const int mtop = 5 * d;
  h.m.assign(static_cast<size_t>(mtop) + 1, 0);

  std::vector<long> todo;
  for (int j = 0; j <= mtop; ++j) {
    if (j < d - 1) {
      h.m[static_cast<size_t>(j)] = graded_dim(j);
    } else {
      todo.push_back(j);
    }
  }
  parallel_for(static_cast<long>(todo.size()), threads, [&](long i) {
    int j = static_cast<int>(todo[static_cast<size_t>(i)]);
    SparseMatrix mat = jacobian_matrix(pf, d, j);
    maybe_dump(dump, "jacobian_j" + std::to_string(j), mat);
    h.m[static_cast<size_t>(j)] = graded_dim(j) - rank_certified(mat, policy).rank;
  });

  for (int j = 3 * d - 5; j <= mtop; ++j)
    if (h.m[static_cast<size_t>(j)] != h.m[static_cast<size_t>(3 * d - 5)])
      throw NonReducedError("Milnor algebra dimensions keep changing in degrees >= " +
                            std::to_string(3 * d - 5) + "; the curve is not reduced");
  h.tau = h.m[static_cast<size_t>(3 * d - 5)];

  // st: least degree from which m(f) is constant, ct: largest degree through
  // which m(f) agrees with the smooth reference.
  {
    int j = 3 * d - 5;
    while (j > 0 && h.m[static_cast<size_t>(j - 1)] == h.tau) --j;
    h.st = j;
  }
  h.m_smooth.assign(static_cast<size_t>(3 * (d - 2)) + 1, 0);
  for (int j = 0; j <= 3 * (d - 2); ++j)
    h.m_smooth[static_cast<size_t>(j)] = smooth_milnor_dim(d, j);
  {
    int j = 0;
    while (j < mtop && h.m_at(j + 1) == h.m_smooth_at(j + 1)) ++j;
    h.ct = j == 0 && h.m_at(0) != h.m_smooth_at(0) ? -1 : j;
    if (j == mtop) h.ct = mtop;  // no disagreement in the computed range (smooth curve)
  }

  const int top = 4 * d;
  h.kw.assign(static_cast<size_t>(top) + 1, 0);
  h.h2.assign(static_cast<size_t>(top) + 1, 0);
  h.syz.assign(static_cast<size_t>(top) + 1, 0);
  for (int j = 0; j <= top; ++j) {
    h.kw[static_cast<size_t>(j)] = koszul_wedge_dim(d, j);
    long h2j = 0;
    if (j >= 2 * d - 2) {
      h2j = h.tau;
    } else if (j >= 2) {
      h2j = h.m_at(j + d - 3) - h.m_smooth_at(j + d - 3);
    }
    if (h2j < 0)
      throw InternalError("negative Koszul cohomology dimension at degree " + std::to_string(j));
    h.h2[static_cast<size_t>(j)] = h2j;
    h.syz[static_cast<size_t>(j)] = h2j + h.kw[static_cast<size_t>(j)];
  }

  h.mdr = -1;
  for (int q = 0; q + 2 <= top; ++q)
    if (h.syz_at(q + 2) > 0) {
      h.mdr = q;
      break;
    }
  if (h.mdr < 0)
    throw InternalError("no syzygy found in the computed degree range");
  if (h.mdr == 0)
    throw CentralPencilError(
        "the partial derivatives admit a constant syzygy; the curve is a pencil of lines "
        "through a point and has no isolated singularities");
  return h;
}

inline long koszul_h2_dim(const HilbertData& h, int j) { return h.h2_at(j); }

}  // namespace polemono
