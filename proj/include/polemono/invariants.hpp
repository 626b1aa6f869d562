#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "polemono/errors.hpp"
#include "polemono/hilbert.hpp"
#include "polemono/spectral.hpp"

namespace polemono {

// Euler characteristic of the complement of the curve in the plane.
inline long euler_complement(int d, long mu) {
  return static_cast<long>(d - 1) * (d - 2) + 1 - mu;
}

// Characteristic polynomial written multiplicatively: the factor
// (t - lambda_k)^{mult[k]} for each eigenvalue lambda_k = exp(-2 pi i k / d),
// k in [1, d]. Index 0 of mult is unused.
struct EigenPoly {
  int d = 0;
  std::vector<long> mult;

  long total() const { return std::accumulate(mult.begin(), mult.end(), 0L); }
};

// One pole-order spectrum term mult * t^{num/den}; num/den is kept unreduced
// as q/d so terms line up with the twisted degrees they came from.
struct SpectrumEntry {
  int num = 0;
  int den = 1;
  long mult = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct PoleSpectrum {
  std::vector<SpectrumEntry> entries;

  long total() const {
    long s = 0;
    for (const auto& e : entries) s += e.mult;
    return s;
  }
  friend bool operator==(const PoleSpectrum&, const PoleSpectrum&) = default;
};

// A certified root of the Bernstein-Sato polynomial: alpha = (td+k)/d in
// lowest terms, witnessed by a nonzero graded piece Gr_P^{3-ceil...} at the
// eigenvalue index k (the stored (t, k) locate the witness in the tables).
struct BSRoot {
  long num = 0;
  long den = 1;
  int t = 0;
  int k = 0;

  friend bool operator==(const BSRoot&, const BSRoot&) = default;
};

struct InvariantReport {
  long chi_u = 0;
  std::vector<long> h1;  // [k], index 0 unused
  EigenPoly delta1;
  EigenPoly delta2;
  bool delta2_valid = false;
  PoleSpectrum sp_p0, sp_p1;
  bool sp_p0_valid = false;
  std::vector<BSRoot> bs_roots;
  bool bs_valid = false;
  std::string status;  // certified-wh | certified-euler | conjectural | h1-only
};

// Eigenspace dimensions of H^1 of the Milnor fiber: the two graded pieces
// in degrees k and d+k.
inline std::vector<long> h1_eigenspaces(const CycleTables& t) {
  const int d = t.d;
  std::vector<long> h1(static_cast<size_t>(d) + 1, 0);
  for (int k = 1; k <= d; ++k)
    h1[static_cast<size_t>(k)] = t.eps_at(k) + t.eps_at(d + k);
  return h1;
}

inline InvariantReport derive_invariants(const CycleTables& t, const SpectralReport& sp,
                                         long mu, long tau, bool second_cycle_ran) {
  const int d = t.d;
  InvariantReport inv;
  inv.chi_u = sp.chi_u;
  inv.h1 = h1_eigenspaces(t);

  inv.delta1.d = d;
  inv.delta1.mult = inv.h1;

  if (sp.h2_valid) {
    // Eigenspace dimensions of H^2 from the per-eigenvalue Euler identity;
    // when the certificate holds these coincide with the column sums of the
    // graded pieces, which we assert.
    inv.delta2.d = d;
    inv.delta2.mult.assign(static_cast<size_t>(d) + 1, 0);
    for (int k = 1; k <= d; ++k) {
      long e2 = sp.chi_u + inv.h1[static_cast<size_t>(k)] - (k == d ? 1 : 0);
      inv.delta2.mult[static_cast<size_t>(k)] = e2;
      if (!sp.certificate.empty() && sp.certificate[static_cast<size_t>(k)]) {
        long sum = 0;
        for (int p = 0; p <= 2; ++p) sum += sp.grp_h2[static_cast<size_t>(p)][static_cast<size_t>(k)];
        if (sum != e2)
          throw InternalError("graded pieces disagree with the Euler identity at k = " +
                              std::to_string(k));
      }
    }
    inv.delta2_valid = true;

    for (int tt = 0; tt <= 2; ++tt)
      for (int k = 1; k <= d; ++k) {
        const int q = tt * d + k;
        long m = sp.grp_h2[static_cast<size_t>(2 - tt)][static_cast<size_t>(k)];
        if (m > 0) inv.sp_p0.entries.push_back(SpectrumEntry{q, d, m});
      }
    inv.sp_p0_valid = true;

    for (int tt = 0; tt <= 2; ++tt)
      for (int k = 1; k <= d; ++k) {
        const int q = tt * d + k;
        long m = sp.grp_h2[static_cast<size_t>(2 - tt)][static_cast<size_t>(k)];
        if (m == 0) continue;
        long g = std::gcd(static_cast<long>(q), static_cast<long>(d));
        inv.bs_roots.push_back(BSRoot{q / g, d / g, tt, k});
      }
    inv.bs_valid = true;
  }

  for (int q = 3; q <= 2 * d; ++q) {
    long m = t.eps_at(q);
    if (m > 0) inv.sp_p1.entries.push_back(SpectrumEntry{q + d, d, m});
  }

  (void)second_cycle_ran;
  if (!sp.h2_valid)
    inv.status = "h1-only";
  else if (!sp.all_certified)
    inv.status = "conjectural";
  else
    inv.status = mu == tau ? "certified-wh" : "certified-euler";
  return inv;
}

}  // namespace polemono
