#pragma once

#include <array>
#include <string>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/hilbert.hpp"
#include "polemono/matrix_builder.hpp"
#include "polemono/rank.hpp"
#include "polemono/thread_pool.hpp"

namespace polemono {

// Kernel dimensions and derived dimension tables of the two elimination
// cycles, indexed by the twisted degree q in [0, 4d] (entries below q = 3
// are zero by convention).
struct CycleTables {
  int d = 0;
  std::vector<long> k_prime;    // kernel dims, first cycle
  std::vector<long> eps_prime;  // first-cycle limit dims on row 1
  std::vector<long> theta;      // row-2 dims after the first cycle
  std::vector<long> k;          // kernel dims, second cycle (when run)
  std::vector<long> eps;        // second-cycle limit dims on row 1
  bool second_cycle_ran = false;

  long eps_prime_at(int q) const {
    if (q < 3 || q >= static_cast<int>(eps_prime.size())) return 0;
    return eps_prime[static_cast<size_t>(q)];
  }
  long eps_at(int q) const {
    if (q < 3 || q >= static_cast<int>(eps.size())) return 0;
    return eps[static_cast<size_t>(q)];
  }
  long theta_at(int q) const {
    if (q < 2 || q >= static_cast<int>(theta.size())) return 0;
    return theta[static_cast<size_t>(q)];
  }
  long k_prime_at(int q) const {
    if (q < 3 || q >= static_cast<int>(k_prime.size())) return 0;
    return k_prime[static_cast<size_t>(q)];
  }
};

// First-cycle map in twisted degree q: the pair (df ^ ., d .) on 2-forms
// together with the df-coupling of the lower 1-form block,
//
//   [S_{q-2}]^3 (+) [S_{q-d-2}]^3  ->  S_{q+d-3} (+) S_{q-3}
//   (a,b,c | u,v,w)  |->  ( a f_x + b f_y + c f_z ,
//                           a_x + b_y + c_z - (u f_x + v f_y + w f_z) ).
//
// The second domain block is empty for q <= d+1.
inline SparseMatrix build_phi_prime(const Partials& pf, int d, int q) {
  BlockMatrixBuilder b;
  const int r1 = b.add_row_block(q + d - 3);
  const int r2 = b.add_row_block(q - 3);
  const int ca = b.add_col_block(q - 2);
  const int cb = b.add_col_block(q - 2);
  const int cc = b.add_col_block(q - 2);
  b.mult(r1, ca, pf.fx, +1);
  b.mult(r1, cb, pf.fy, +1);
  b.mult(r1, cc, pf.fz, +1);
  b.derivative(r2, ca, 0, +1);
  b.derivative(r2, cb, 1, +1);
  b.derivative(r2, cc, 2, +1);
  if (q - d - 2 >= 0) {
    const int cu = b.add_col_block(q - d - 2);
    const int cv = b.add_col_block(q - d - 2);
    const int cw = b.add_col_block(q - d - 2);
    b.mult(r2, cu, pf.fx, -1);
    b.mult(r2, cv, pf.fy, -1);
    b.mult(r2, cw, pf.fz, -1);
  }
  return b.build();
}

// Which block shape the second-cycle map has in twisted degree q.
enum class PhiCase { a, b, c, d };

inline PhiCase phi_case(int d, int mdr, int q) {
  if (q <= d + 1) return PhiCase::a;
  if (q <= d + mdr + 1) return PhiCase::b;
  if (q <= 2 * d) return PhiCase::c;
  return PhiCase::d;
}

// Second-cycle map in twisted degree q. Writing q1 = q - d, q2 = q - 2d and
// blocks w ~ (a,b,c), al ~ (u,v,w), al' ~ (u',v',w'), be ~ (u'',v'',w''),
// the components are
//
//   case a (3 <= q <= d+1):            (df^w, dw)
//   case b (d+2 <= q <= d+mdr+1):      (df^w, dw - df^al, d al)
//   case c (d+mdr+2 <= q <= 2d):       (df^w, dw - df^al, df^al', d al - d al')
//   case d (2d+1 <= q <= 4d):          (df^w, dw - df^al, df^al', d al - d al' - df^be)
//
// into S_{q+d-3} (+) S_{q-3} [(+) S_{q-3}] [(+) S_{q1-3}]. Cases only add
// blocks, so the builder nests them.
inline SparseMatrix build_phi(const Partials& pf, int d, int mdr, int q) {
  const PhiCase pc = phi_case(d, mdr, q);
  const int q1 = q - d;
  const int q2 = q - 2 * d;
  BlockMatrixBuilder b;
  const int r1 = b.add_row_block(q + d - 3);
  const int r2 = b.add_row_block(q - 3);
  const int r3 = pc >= PhiCase::c ? b.add_row_block(q - 3) : -1;
  const int r4 = pc >= PhiCase::b ? b.add_row_block(q1 - 3) : -1;

  const int ca = b.add_col_block(q - 2);
  const int cb = b.add_col_block(q - 2);
  const int cc = b.add_col_block(q - 2);
  b.mult(r1, ca, pf.fx, +1);
  b.mult(r1, cb, pf.fy, +1);
  b.mult(r1, cc, pf.fz, +1);
  b.derivative(r2, ca, 0, +1);
  b.derivative(r2, cb, 1, +1);
  b.derivative(r2, cc, 2, +1);

  if (pc >= PhiCase::b) {
    const int cu = b.add_col_block(q1 - 2);
    const int cv = b.add_col_block(q1 - 2);
    const int cw = b.add_col_block(q1 - 2);
    b.mult(r2, cu, pf.fx, -1);
    b.mult(r2, cv, pf.fy, -1);
    b.mult(r2, cw, pf.fz, -1);
    b.derivative(r4, cu, 0, +1);
    b.derivative(r4, cv, 1, +1);
    b.derivative(r4, cw, 2, +1);
  }
  if (pc >= PhiCase::c) {
    const int cu2 = b.add_col_block(q1 - 2);
    const int cv2 = b.add_col_block(q1 - 2);
    const int cw2 = b.add_col_block(q1 - 2);
    b.mult(r3, cu2, pf.fx, +1);
    b.mult(r3, cv2, pf.fy, +1);
    b.mult(r3, cw2, pf.fz, +1);
    b.derivative(r4, cu2, 0, -1);
    b.derivative(r4, cv2, 1, -1);
    b.derivative(r4, cw2, 2, -1);
  }
  if (pc >= PhiCase::d && q2 - 2 >= 0) {
    const int cx = b.add_col_block(q2 - 2);
    const int cy = b.add_col_block(q2 - 2);
    const int cz = b.add_col_block(q2 - 2);
    b.mult(r4, cx, pf.fx, -1);
    b.mult(r4, cy, pf.fy, -1);
    b.mult(r4, cz, pf.fz, -1);
  }
  return b.build();
}

// First cycle: kernel dimensions of phi'_q for q in [3, 4d], the limit
// dimensions eps'_q after subtracting the lower-block kernel and the wedge
// part, and the row-2 dimensions theta_q.
//
//   eps'_q  = k'_q - syz_{q-d} - kw_q
//   theta_q = m_{q-3} - h2_q + eps'_q          (q >= 2)
//
// The theta formula is used in this general form rather than the piecewise
// version valid only when st <= 3d-6; the two agree on singular curves and
// the general form also covers smooth input, whose socle survives into
// degree 3d-5.
inline CycleTables first_cycle(const Partials& pf, const HilbertData& hil,
                               const RankPolicy& policy, int threads,
                               const DumpSink* dump = nullptr) {
  const int d = hil.d;
  const int top = 4 * d;
  CycleTables t;
  t.d = d;
  t.k_prime.assign(static_cast<size_t>(top) + 1, 0);
  t.eps_prime.assign(static_cast<size_t>(top) + 1, 0);
  t.theta.assign(static_cast<size_t>(top) + 1, 0);
  t.k.assign(static_cast<size_t>(top) + 1, 0);
  t.eps.assign(static_cast<size_t>(top) + 1, 0);

  parallel_for(static_cast<long>(top) - 2, threads, [&](long i) {
    const int q = static_cast<int>(i) + 3;
    SparseMatrix m = build_phi_prime(pf, d, q);
    maybe_dump(dump, "phi_prime_q" + std::to_string(q), m);
    t.k_prime[static_cast<size_t>(q)] = kernel_dim(m, policy);
  });

  for (int q = 3; q <= top; ++q) {
    long e = t.k_prime[static_cast<size_t>(q)] - hil.syz_at(q - d) - hil.kw_at(q);
    if (e < 0)
      throw NegativeDimensionError("eps'_" + std::to_string(q) + " = " + std::to_string(e) +
                                   " < 0; a modular rank is wrong, retry with more primes or "
                                   "--exact");
    t.eps_prime[static_cast<size_t>(q)] = e;
  }
  for (int q = 2; q <= top; ++q) {
    long th = hil.m_at(q - 3) - hil.h2_at(q) + t.eps_prime_at(q);
    if (th < 0)
      throw NegativeDimensionError("theta_" + std::to_string(q) + " = " + std::to_string(th) +
                                   " < 0; a modular rank is wrong, retry with more primes or "
                                   "--exact");
    t.theta[static_cast<size_t>(q)] = th;
  }
  return t;
}

// Second cycle: kernel dimensions of phi_q for q in [3, 4d] and the limit
// dimensions
//
//   eps_q = k_q - syz_{q-d} - k'_{q-d} - kw_q
//
// (the subtracted terms vanish automatically below the degrees where the
// corresponding blocks appear).
inline void second_cycle(CycleTables& t, const Partials& pf, const HilbertData& hil,
                         const RankPolicy& policy, int threads,
                         const DumpSink* dump = nullptr) {
  const int d = hil.d;
  const int top = 4 * d;
  parallel_for(static_cast<long>(top) - 2, threads, [&](long i) {
    const int q = static_cast<int>(i) + 3;
    SparseMatrix m = build_phi(pf, d, hil.mdr, q);
    maybe_dump(dump, "phi_q" + std::to_string(q), m);
    t.k[static_cast<size_t>(q)] = kernel_dim(m, policy);
  });
  for (int q = 3; q <= top; ++q) {
    const int q1 = q - d;
    long e = t.k[static_cast<size_t>(q)] - hil.syz_at(q1) - t.k_prime_at(q1) - hil.kw_at(q);
    if (e < 0)
      throw NegativeDimensionError("eps_" + std::to_string(q) + " = " + std::to_string(e) +
                                   " < 0; a modular rank is wrong, retry with more primes or "
                                   "--exact");
    t.eps[static_cast<size_t>(q)] = e;
  }
  t.second_cycle_ran = true;
}

// Limit tables per monodromy eigenvalue. Eigenvalues are indexed by
// k in [1, d] (lambda_k = exp(-2 pi i k / d)); per-k arrays use index k and
// leave slot 0 unused.
struct SpectralReport {
  int d = 0;
  long chi_u = 0;
  bool h2_valid = false;        // false when only H^1 data could be derived
  bool wh_shortcut_used = false;
  std::array<std::vector<long>, 4> e2_row1, e2_row2, e3_row1;
  std::array<std::vector<long>, 3> e3_row2;
  std::array<std::vector<long>, 2> grp_h1;  // [p][k], p in {0,1}
  std::array<std::vector<long>, 3> grp_h2;  // [p][k], p in {0,1,2}
  std::vector<char> certificate;            // [k]; Euler identity per eigenvalue
  bool all_certified = false;
  int q0_observed = -1;
  std::vector<int> killed_by_p_filtration;  // q > 2d with eps_q still nonzero
};

// Assemble the limit tables from the cycle dimensions.
//
// Row 2 of the second table comes from rank-nullity of the connecting
// differential rather than from an assumed stabilized value:
//
//   E3row2[t][k] = theta_{td+k} - eps'_{(t+1)d+k} + eps_{(t+1)d+k},
//
// and the per-eigenvalue Euler identity
//
//   sum_t E3row2[t][k] - eps_k - eps_{d+k} + [k=d] = chi(U)
//
// certifies that the tables are a fixed point (this is what catches modular
// rank failures downstream).
inline SpectralReport assemble(const CycleTables& t, const HilbertData& hil, long mu,
                               bool h2_valid, bool wh_shortcut_used) {
  const int d = t.d;
  SpectralReport r;
  r.d = d;
  r.chi_u = static_cast<long>(d - 1) * (d - 2) + 1 - mu;
  r.h2_valid = h2_valid;
  r.wh_shortcut_used = wh_shortcut_used;

  auto fresh = [d]() { return std::vector<long>(static_cast<size_t>(d) + 1, 0); };
  for (auto& v : r.e2_row1) v = fresh();
  for (auto& v : r.e2_row2) v = fresh();
  for (auto& v : r.e3_row1) v = fresh();
  for (auto& v : r.e3_row2) v = fresh();
  for (auto& v : r.grp_h1) v = fresh();
  for (auto& v : r.grp_h2) v = fresh();

  for (int tt = 0; tt <= 3; ++tt)
    for (int k = 1; k <= d; ++k) {
      const int q = tt * d + k;
      r.e2_row1[static_cast<size_t>(tt)][static_cast<size_t>(k)] = t.eps_prime_at(q);
      r.e2_row2[static_cast<size_t>(tt)][static_cast<size_t>(k)] = t.theta_at(q);
      r.e3_row1[static_cast<size_t>(tt)][static_cast<size_t>(k)] = t.eps_at(q);
    }

  for (int k = 1; k <= d; ++k) {
    r.grp_h1[1][static_cast<size_t>(k)] = t.eps_at(k);
    r.grp_h1[0][static_cast<size_t>(k)] = t.eps_at(d + k);
  }

  if (h2_valid) {
    r.certificate.assign(static_cast<size_t>(d) + 1, 0);
    bool all = true;
    for (int tt = 0; tt <= 2; ++tt)
      for (int k = 1; k <= d; ++k) {
        const int q = tt * d + k;
        long v = t.theta_at(q) - t.eps_prime_at(q + d) + t.eps_at(q + d);
        if (v < 0)
          throw NegativeDimensionError("limit table entry at (t=" + std::to_string(tt) +
                                       ", k=" + std::to_string(k) + ") is " + std::to_string(v) +
                                       " < 0; a modular rank is wrong, retry with more primes "
                                       "or --exact");
        r.e3_row2[static_cast<size_t>(tt)][static_cast<size_t>(k)] = v;
        r.grp_h2[static_cast<size_t>(2 - tt)][static_cast<size_t>(k)] = v;
      }
    for (int k = 1; k <= d; ++k) {
      long sum = 0;
      for (int tt = 0; tt <= 2; ++tt) sum += r.e3_row2[static_cast<size_t>(tt)][static_cast<size_t>(k)];
      long lhs = sum - t.eps_at(k) - t.eps_at(d + k) + (k == d ? 1 : 0);
      r.certificate[static_cast<size_t>(k)] = lhs == r.chi_u ? 1 : 0;
      if (lhs != r.chi_u) all = false;
    }
    r.all_certified = all;
  }

  // Stability threshold actually observed: least q such that from q on the
  // first-cycle dims sit at mu - tau and the second-cycle dims vanish. Needs
  // trustworthy eps over the whole range, so it is skipped in the partial
  // H^1-only mode.
  if (h2_valid) {
    const long target = mu - hil.tau;
    int q0 = -1;
    for (int q = 4 * d; q >= 1; --q) {
      if (t.eps_prime_at(q) == target && t.eps_at(q) == 0)
        q0 = q;
      else
        break;
    }
    r.q0_observed = q0;

    for (int q = 2 * d + 1; q <= 4 * d; ++q)
      if (t.eps_at(q) > 0) r.killed_by_p_filtration.push_back(q);
  }

  return r;
}

}  // namespace polemono
