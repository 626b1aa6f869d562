#pragma once

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polemono/config.hpp"
#include "polemono/hilbert.hpp"
#include "polemono/invariants.hpp"
#include "polemono/milnor_number.hpp"
#include "polemono/spectral.hpp"

namespace polemono {

using Json = nlohmann::ordered_json;

// Wall-clock seconds per stage; shown in the human summary only and kept out
// of the JSON document so equal runs serialize byte for byte.
struct Timings {
  double hilbert_s = 0, milnor_s = 0, first_cycle_s = 0, second_cycle_s = 0, total_s = 0;
};

struct CurveReport {
  std::string input;      // the defining polynomial as given
  std::string canonical;  // normalized rendering of the parsed polynomial
  int degree = 0;
  Mode mode_requested = Mode::kAuto;
  Mode mode_effective = Mode::kFull;
  RunConfig config;
  HilbertData hilbert;
  MilnorResult milnor;
  CycleTables cycles;
  SpectralReport spectral;
  InvariantReport invariants;
  Timings timings;
};

namespace detail {

inline Json rational_json(const Rational& r) {
  if (r.get_den() == 1) return Json(static_cast<long>(r.get_num().get_si()));
  return Json(to_string(r));
}

inline Json long_array(const std::vector<long>& v) { return Json(v); }

// Per-eigenvalue vector indexed k = 1..d with slot 0 unused; the JSON array
// drops the unused slot.
inline Json per_k_array(const std::vector<long>& v) {
  return Json(std::vector<long>(v.begin() + 1, v.end()));
}

// Sparse object {"t,k": value} holding the nonzero entries of a limit table
// row family, t outer and k inner so insertion order is deterministic.
inline Json table_object(const std::vector<long>* rows, int nrows, int d) {
  Json o = Json::object();
  for (int t = 0; t < nrows; ++t)
    for (int k = 1; k <= d; ++k) {
      long v = rows[t][static_cast<size_t>(k)];
      if (v != 0) o[std::to_string(t) + "," + std::to_string(k)] = v;
    }
  return o;
}

inline Json eigenpoly_json(const EigenPoly& p) {
  Json a = Json::array();
  for (int k = 1; k <= p.d; ++k) {
    long m = p.mult[static_cast<size_t>(k)];
    if (m != 0) a.push_back(Json::array({k, m}));
  }
  return a;
}

inline Json spectrum_json(const PoleSpectrum& s) {
  Json a = Json::array();
  for (const auto& e : s.entries) a.push_back(Json::array({e.num, e.den, e.mult}));
  return a;
}

}  // namespace detail

inline Json to_json(const CurveReport& r) {
  Json j;
  j["schema"] = "polemono/1";

  j["curve"] = {{"input", r.input}, {"canonical", r.canonical}, {"degree", r.degree}};

  j["config"] = {{"mode_requested", mode_name(r.mode_requested)},
                 {"mode", mode_name(r.mode_effective)},
                 {"primes", r.config.rank.n_primes},
                 {"exact", r.config.rank.exact},
                 {"seed", r.config.rank.seed},
                 {"threads", r.config.threads},
                 {"strict", r.config.strict}};

  j["hilbert"] = {{"m", detail::long_array(r.hilbert.m)},
                  {"m_smooth", detail::long_array(r.hilbert.m_smooth)},
                  {"kw", detail::long_array(r.hilbert.kw)},
                  {"h2", detail::long_array(r.hilbert.h2)},
                  {"syz", detail::long_array(r.hilbert.syz)},
                  {"tau", r.hilbert.tau},
                  {"ct", r.hilbert.ct},
                  {"st", r.hilbert.st},
                  {"mdr", r.hilbert.mdr}};

  Json transform = Json::array();
  for (int row = 0; row < 3; ++row) {
    Json tr = Json::array();
    for (int col = 0; col < 3; ++col)
      tr.push_back(detail::rational_json(r.milnor.curve.transform[static_cast<size_t>(row)]
                                                                 [static_cast<size_t>(col)]));
    transform.push_back(tr);
  }
  j["milnor"] = {{"mu", r.milnor.mu},
                 {"transform", transform},
                 {"stabilization_degree", r.milnor.stabilization_degree}};

  j["cycles"] = {{"k_prime", detail::long_array(r.cycles.k_prime)},
                 {"eps_prime", detail::long_array(r.cycles.eps_prime)},
                 {"theta", detail::long_array(r.cycles.theta)},
                 {"k", r.cycles.second_cycle_ran ? detail::long_array(r.cycles.k) : Json()},
                 {"eps", detail::long_array(r.cycles.eps)}};

  const SpectralReport& sp = r.spectral;
  Json spectral;
  spectral["E2"] = {{"row1", detail::table_object(sp.e2_row1.data(), 4, sp.d)},
                    {"row2", detail::table_object(sp.e2_row2.data(), 4, sp.d)}};
  spectral["E3"] = {{"row1", detail::table_object(sp.e3_row1.data(), 4, sp.d)},
                    {"row2", sp.h2_valid ? detail::table_object(sp.e3_row2.data(), 3, sp.d)
                                         : Json()}};
  spectral["grP_H1"] = {{"0", detail::per_k_array(sp.grp_h1[0])},
                        {"1", detail::per_k_array(sp.grp_h1[1])}};
  if (sp.h2_valid)
    spectral["grP_H2"] = {{"0", detail::per_k_array(sp.grp_h2[0])},
                          {"1", detail::per_k_array(sp.grp_h2[1])},
                          {"2", detail::per_k_array(sp.grp_h2[2])}};
  else
    spectral["grP_H2"] = Json();
  if (sp.h2_valid) {
    Json cert = Json::array();
    for (int k = 1; k <= sp.d; ++k) cert.push_back(sp.certificate[static_cast<size_t>(k)] != 0);
    spectral["certificate_per_k"] = cert;
  } else {
    spectral["certificate_per_k"] = Json();
  }
  spectral["all_certified"] = sp.all_certified;
  spectral["q0_observed"] = sp.h2_valid && sp.q0_observed > 0 ? Json(sp.q0_observed) : Json();
  spectral["wh_shortcut_used"] = sp.wh_shortcut_used;
  spectral["killed_by_p_filtration"] = Json(sp.killed_by_p_filtration);
  j["spectral"] = spectral;

  const InvariantReport& inv = r.invariants;
  Json invariants;
  invariants["chi_U"] = inv.chi_u;
  invariants["h1_eigenspaces"] = detail::per_k_array(inv.h1);
  invariants["delta1"] = detail::eigenpoly_json(inv.delta1);
  invariants["delta2"] = inv.delta2_valid ? detail::eigenpoly_json(inv.delta2) : Json();
  invariants["sp_P0"] = inv.sp_p0_valid ? detail::spectrum_json(inv.sp_p0) : Json();
  invariants["sp_P1"] = detail::spectrum_json(inv.sp_p1);
  if (inv.bs_valid) {
    Json roots = Json::array();
    for (const auto& b : inv.bs_roots) roots.push_back(Json::array({b.num, b.den}));
    invariants["bs_roots_certified"] = roots;
  } else {
    invariants["bs_roots_certified"] = Json();
  }
  invariants["status"] = inv.status;
  j["invariants"] = invariants;

  return j;
}

namespace detail {

// "t^{q/d}" with a multiplicity prefix, the exponent kept unreduced so terms
// line up with twisted degrees.
inline std::string spectrum_string(const PoleSpectrum& s) {
  if (s.entries.empty()) return "0";
  std::string out;
  for (const auto& e : s.entries) {
    if (!out.empty()) out += " + ";
    if (e.mult != 1) out += std::to_string(e.mult) + "*";
    out += "t^{" + std::to_string(e.num) + "/" + std::to_string(e.den) + "}";
  }
  return out;
}

// Product of factors (t - z^k)^m with z = exp(-2 pi i / d); the k = d factor
// prints as (t - 1).
inline std::string eigenpoly_string(const EigenPoly& p) {
  std::string out;
  for (int k = 1; k <= p.d; ++k) {
    long m = p.mult[static_cast<size_t>(k)];
    if (m == 0) continue;
    out += k == p.d ? "(t - 1)" : "(t - z^" + std::to_string(k) + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "1" : out;
}

inline void print_row(std::ostream& os, const std::string& label, const std::vector<long>& v,
                      int from, int to) {
  os << std::setw(12) << label;
  for (int q = from; q <= to; ++q) os << std::setw(5) << v[static_cast<size_t>(q)];
  os << "\n";
}

}  // namespace detail

inline void print_summary(std::ostream& os, const CurveReport& r) {
  const auto& inv = r.invariants;
  os << "curve       " << r.canonical << "\n";
  os << "degree      " << r.degree << "\n";
  os << "mu          " << r.milnor.mu << "\n";
  os << "tau         " << r.hilbert.tau << "\n";
  os << "mdr         " << r.hilbert.mdr << "\n";
  os << "ct / st     " << r.hilbert.ct << " / " << r.hilbert.st << "\n";
  os << "chi(U)      " << inv.chi_u << "\n";
  os << "mode        " << mode_name(r.mode_effective);
  if (r.spectral.wh_shortcut_used) os << " (quasihomogeneous shortcut, mu == tau)";
  os << "\n";
  os << "status      " << inv.status << "\n";
  if (r.spectral.h2_valid) {
    os << "certificate " << (r.spectral.all_certified ? "pass" : "FAIL") << " (per-eigenvalue "
       << "Euler identity, " << r.degree << " eigenvalues)\n";
    if (r.spectral.q0_observed > 0) os << "q0          " << r.spectral.q0_observed << "\n";
  }
  long b1 = 0;
  for (int k = 1; k <= r.degree; ++k) b1 += inv.h1[static_cast<size_t>(k)];
  os << "b1(F)       " << b1 << "\n";
  os << "timing      hilbert " << std::fixed << std::setprecision(2) << r.timings.hilbert_s
     << "s, milnor " << r.timings.milnor_s << "s, cycle1 " << r.timings.first_cycle_s
     << "s, cycle2 " << r.timings.second_cycle_s << "s, total " << r.timings.total_s << "s\n";
  os.unsetf(std::ios::fixed);
}

inline void print_spectra(std::ostream& os, const CurveReport& r) {
  const auto& inv = r.invariants;
  os << "Sp^1(f)     " << detail::spectrum_string(inv.sp_p1) << "\n";
  if (inv.sp_p0_valid)
    os << "Sp^0(f)     " << detail::spectrum_string(inv.sp_p0) << "\n";
  else
    os << "Sp^0(f)     (not computed in this mode)\n";
}

inline void print_alexander(std::ostream& os, const CurveReport& r) {
  const auto& inv = r.invariants;
  os << "Delta^1(t)  " << detail::eigenpoly_string(inv.delta1) << "   [z = exp(-2 pi i/"
     << r.degree << ")]\n";
  if (inv.delta2_valid)
    os << "Delta^2(t)  " << detail::eigenpoly_string(inv.delta2) << "\n";
  else
    os << "Delta^2(t)  (not computed in this mode)\n";
}

inline void print_bs_roots(std::ostream& os, const CurveReport& r) {
  const auto& inv = r.invariants;
  if (!inv.bs_valid) {
    os << "bs roots    (not computed in this mode)\n";
    return;
  }
  os << "certified roots alpha of b_f(-s), with the graded piece witnessing each:\n";
  for (const auto& b : inv.bs_roots)
    os << "  " << b.num << "/" << b.den << "   (t = " << b.t << ", k = " << b.k << ")\n";
  if (inv.bs_roots.empty()) os << "  (none)\n";
}

inline void print_tables(std::ostream& os, const CurveReport& r) {
  const int d = r.degree;
  os << "cycle dimensions by twisted degree q:\n";
  os << std::setw(12) << "q";
  for (int q = 3; q <= 4 * d; ++q) os << std::setw(5) << q;
  os << "\n";
  detail::print_row(os, "k'", r.cycles.k_prime, 3, 4 * d);
  detail::print_row(os, "eps'", r.cycles.eps_prime, 3, 4 * d);
  detail::print_row(os, "theta", r.cycles.theta, 3, 4 * d);
  if (r.cycles.second_cycle_ran) detail::print_row(os, "k", r.cycles.k, 3, 4 * d);
  detail::print_row(os, "eps", r.cycles.eps, 3, 4 * d);

  os << "limit table rows by eigenvalue index k (q = t*d + k):\n";
  os << std::setw(12) << "k";
  for (int k = 1; k <= d; ++k) os << std::setw(5) << k;
  os << "\n";
  for (int t = 0; t <= 3; ++t)
    detail::print_row(os, "row1 t=" + std::to_string(t), r.spectral.e3_row1[static_cast<size_t>(t)], 1, d);
  if (r.spectral.h2_valid)
    for (int t = 0; t <= 2; ++t)
      detail::print_row(os, "row2 t=" + std::to_string(t), r.spectral.e3_row2[static_cast<size_t>(t)], 1, d);
  if (r.spectral.h2_valid && !r.spectral.certificate.empty()) {
    os << std::setw(12) << "certified";
    for (int k = 1; k <= d; ++k)
      os << std::setw(5) << (r.spectral.certificate[static_cast<size_t>(k)] ? "y" : "N");
    os << "\n";
  }
}

// Dispatch for --show section names; "json" prints the full document.
inline void print_section(std::ostream& os, const CurveReport& r, const std::string& name) {
  if (name == "summary")
    print_summary(os, r);
  else if (name == "spectra")
    print_spectra(os, r);
  else if (name == "alexander")
    print_alexander(os, r);
  else if (name == "bs-roots")
    print_bs_roots(os, r);
  else if (name == "tables")
    print_tables(os, r);
  else if (name == "json")
    os << to_json(r).dump(2) << "\n";
  else
    throw IoError("unknown --show section '" + name +
                  "' (expected summary, spectra, alexander, bs-roots, tables or json)");
}

}  // namespace polemono
