#pragma once

#include <chrono>
#include <istream>
#include <ostream>
#include <string>

#include "polemono/config.hpp"
#include "polemono/errors.hpp"
#include "polemono/hilbert.hpp"
#include "polemono/invariants.hpp"
#include "polemono/milnor_number.hpp"
#include "polemono/parser.hpp"
#include "polemono/report.hpp"
#include "polemono/spectral.hpp"

namespace polemono {

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Run the whole computation for one curve. Mode resolution:
//
//   auto              first cycle only when mu == tau (the first cycle already
//                     gives the limit dimensions there), otherwise both cycles
//   full              both cycles regardless
//   first-cycle-only  never run the second cycle; when mu != tau this yields a
//                     partial report (H^1 data only), since only the degrees
//                     q <= d+1 and the conjugate range are forced to agree with
//                     the second cycle
inline CurveReport run_curve(const std::string& input, const RunConfig& cfg) {
  detail::Stopwatch total;
  HomogPoly f = parse_homogeneous(input);
  const int d = f.degree();
  if (d < 3)
    throw InvalidDegreeError("degree " + std::to_string(d) +
                             " curve has no interesting monodromy here; need degree >= 3");
  const Partials pf = Partials::of(f);

  DumpSink sink;
  const DumpSink* dump = nullptr;
  if (!cfg.dump_dir.empty()) {
    sink.dir = cfg.dump_dir;
    dump = &sink;
  }

  CurveReport r;
  r.input = input;
  r.canonical = f.to_string();
  r.degree = d;
  r.mode_requested = cfg.mode;
  r.config = cfg;

  detail::Stopwatch lap;
  r.hilbert = compute_hilbert(d, pf, cfg.rank, cfg.threads, dump);
  r.timings.hilbert_s = lap.lap();

  r.milnor = total_milnor_number(f, cfg.rank, cfg.rank.seed, dump);
  r.timings.milnor_s = lap.lap();

  const bool wh = r.milnor.mu == r.hilbert.tau;
  bool run_second = false, h2_valid = false, shortcut = false;
  switch (cfg.mode) {
    case Mode::kAuto:
      run_second = !wh;
      h2_valid = true;
      shortcut = wh;
      break;
    case Mode::kFull:
      run_second = true;
      h2_valid = true;
      break;
    case Mode::kFirstCycleOnly:
      h2_valid = wh;
      shortcut = wh;
      break;
  }
  r.mode_effective = run_second ? Mode::kFull : Mode::kFirstCycleOnly;

  r.cycles = first_cycle(pf, r.hilbert, cfg.rank, cfg.threads, dump);
  r.timings.first_cycle_s = lap.lap();

  if (run_second) {
    second_cycle(r.cycles, pf, r.hilbert, cfg.rank, cfg.threads, dump);
    r.timings.second_cycle_s = lap.lap();
  } else if (shortcut) {
    r.cycles.eps = r.cycles.eps_prime;
  } else {
    // Partial mode: the second-cycle map equals the first-cycle map for
    // q <= d+1, and the H^1 graded pieces in the range (d, 2d] mirror the
    // conjugate eigenvalue, eps_{d+k} = eps_{d-k}.
    for (int q = 3; q <= d + 1; ++q)
      r.cycles.eps[static_cast<size_t>(q)] = r.cycles.eps_prime[static_cast<size_t>(q)];
    for (int q = d + 2; q <= 2 * d; ++q)
      r.cycles.eps[static_cast<size_t>(q)] = r.cycles.eps_prime_at(2 * d - q);
  }

  r.spectral = assemble(r.cycles, r.hilbert, r.milnor.mu, h2_valid, shortcut);
  r.invariants = derive_invariants(r.cycles, r.spectral, r.milnor.mu, r.hilbert.tau,
                                   r.cycles.second_cycle_ran);
  r.timings.total_s = total.lap();
  return r;
}

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

// Batch driver: one polynomial per input line, one JSON document per output
// line. Blank lines and '#' comments are skipped. A failing curve produces an
// error object on its line and processing continues; the return value is the
// number of failed lines.
inline int run_batch(std::istream& in, std::ostream& out, const RunConfig& cfg) {
  std::string line;
  int failures = 0;
  while (std::getline(in, line)) {
    const std::string input = detail::trim(line);
    if (input.empty() || input[0] == '#') continue;
    try {
      CurveReport r = run_curve(input, cfg);
      out << to_json(r).dump() << "\n";
    } catch (const Error& e) {
      ++failures;
      Json err = {{"input", input},
                  {"error",
                   {{"type", errc_name(e.code())},
                    {"code", e.exit_code()},
                    {"message", e.what()}}}};
      out << err.dump() << "\n";
    }
  }
  return failures;
}

}  // namespace polemono
