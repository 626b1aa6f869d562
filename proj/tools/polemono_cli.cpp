// Command line front end: parse a plane curve equation, run the two-cycle
// computation and print the requested report sections (or JSON).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polemono/pipeline.hpp"
#include "polemono/thread_pool.hpp"

namespace {

// -i accepts either the polynomial itself or a path to a file holding it.
std::string resolve_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw polemono::IoError("cannot open input file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monodromy eigenspaces and pole order filtration on the Milnor fiber cohomology "
               "of a plane curve"};
  app.set_version_flag("--version", "polemono 1.0.0");

  std::string input, batch, mode_str = "auto", json_path, show = "summary", dump_dir;
  int primes = 2;
  bool exact = false;
  unsigned long long seed = 1;
  int threads = 0;
  bool strict = false;

  app.add_option("-i,--input", input,
                 "defining polynomial in x,y,z, given literally or as a path to a file");
  app.add_option("--batch", batch,
                 "file with one polynomial per line, '-' for stdin; writes JSON lines to stdout");
  app.add_option("--mode", mode_str, "auto | first-cycle-only | full")
      ->default_str("auto")
      ->check(CLI::IsMember({"auto", "first-cycle-only", "full"}));
  app.add_option("--primes", primes, "independent primes per modular rank")
      ->default_val(2)
      ->check(CLI::PositiveNumber);
  app.add_flag("--exact", exact, "use exact fraction-free elimination instead of modular ranks");
  app.add_option("--seed", seed, "seed for prime selection and coordinate changes")
      ->default_val(1);
  app.add_option("--threads", threads, "worker threads (0 = hardware)")->default_val(0);
  app.add_option("--json", json_path, "write the full JSON report to this path");
  app.add_option("--show", show,
                 "comma separated sections: summary,spectra,alexander,bs-roots,tables,json")
      ->default_str("summary");
  app.add_flag("--strict", strict, "exit with code 7 when the Euler certificate fails");
  app.add_option("--dump-matrices", dump_dir, "write every assembled matrix to this directory");

  CLI11_PARSE(app, argc, argv);

  polemono::RunConfig cfg;
  try {
    cfg.mode = polemono::parse_mode(mode_str);
    cfg.rank.n_primes = primes;
    cfg.rank.exact = exact;
    cfg.rank.seed = seed;
    cfg.threads = threads > 0 ? threads : polemono::default_thread_count();
    cfg.strict = strict;
    cfg.dump_dir = dump_dir;

    if (!batch.empty()) {
      if (batch == "-") {
        polemono::run_batch(std::cin, std::cout, cfg);
      } else {
        std::ifstream in(batch);
        if (!in) throw polemono::IoError("cannot open batch file '" + batch + "'");
        polemono::run_batch(in, std::cout, cfg);
      }
      return 0;
    }

    if (input.empty()) throw polemono::IoError("no input; pass -i <polynomial> or --batch <file>");

    polemono::CurveReport report = polemono::run_curve(resolve_input(input), cfg);

    for (const std::string& section : split_csv(show))
      polemono::print_section(std::cout, report, section);

    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw polemono::IoError("cannot open '" + json_path + "' for writing");
      out << polemono::to_json(report).dump(2) << "\n";
    }

    if (strict && report.spectral.h2_valid && !report.spectral.all_certified) {
      std::cerr << "CertificateFailed: the per-eigenvalue Euler identity does not hold; "
                   "rerun with more primes or --exact\n";
      return static_cast<int>(polemono::Errc::certificate_failed);
    }
    return 0;
  } catch (const polemono::Error& e) {
    std::cerr << polemono::errc_name(e.code()) << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return static_cast<int>(polemono::Errc::internal);
  }
}
