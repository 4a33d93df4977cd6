// lehmer-lab: compute tables, run verification suites and scan the
// periodicity conjecture through the C API.
//
// Exit codes: 0 verified / success, 1 counterexample or failed check,
// 2 usage error, 3 unwritable output, 4 corrupt checkpoint, 5 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "format.hpp"
#include "lehmer/lehmer.h"

namespace {

using lehmer::cli::Format;

constexpr int kExitUsage = 2;
constexpr int kExitOutput = 3;

struct Options {
  std::optional<long> upto, k, m, r, alpha;
  std::optional<unsigned> jobs;
  std::string method;
  std::string format = "text";
  std::string out;
  std::string checkpoint;
  bool timings = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--upto", o.upto, "Index count N; rows or checks cover n < N");
  cmd->add_option("--k", o.k, "Power of the modulus, or Delta index");
  cmd->add_option("--m", o.m, "Incomplete bound m");
  cmd->add_option("--r", o.r, "Higher-order step r");
  cmd->add_option("--alpha", o.alpha, "Higher-order order alpha");
  cmd->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "Write output to this file instead of stdout");
  cmd->add_option("--jobs", o.jobs, "Worker threads (default: LEHMER_LAB_JOBS, then all cores)");
}

int exit_code(lel_status s) {
  switch (s) {
    case LEL_OK: return 0;
    case LEL_COUNTEREXAMPLE: return 1;
    case LEL_CONSISTENCY_ERROR: return 1;
    case LEL_INVALID_INPUT: return kExitUsage;
    case LEL_IO_ERROR: return kExitOutput;
    case LEL_CORRUPT_CHECKPOINT: return 4;
    case LEL_INTERNAL_ERROR: return 5;
  }
  return 5;
}

unsigned resolve_jobs(const Options& o) {
  if (o.jobs) return *o.jobs;
  if (const char* env = std::getenv("LEHMER_LAB_JOBS")) {
    try {
      std::size_t used = 0;
      long v = std::stol(env, &used);
      if (used == std::string(env).size() && v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring LEHMER_LAB_JOBS='" << env << "'\n";
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Returns false (after printing) when a bound is negative.
bool to_params(const Options& o, lel_params& p) {
  lel_params_init(&p);
  const std::pair<const char*, const std::optional<long>*> fields[] = {
      {"upto", &o.upto}, {"k", &o.k}, {"m", &o.m}, {"r", &o.r}, {"alpha", &o.alpha}};
  for (auto [name, v] : fields) {
    if (*v && **v < 0) {
      std::cerr << "error: --" << name << " must be non-negative\n";
      return false;
    }
  }
  p.upto = o.upto.value_or(-1);
  p.k = o.k.value_or(-1);
  p.m = o.m.value_or(-1);
  p.r = o.r.value_or(-1);
  p.alpha = o.alpha.value_or(-1);
  p.method = o.method.empty() ? nullptr : o.method.c_str();
  p.jobs = resolve_jobs(o);
  return true;
}

int write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) {
    std::cerr << "error: cannot write '" << o.out << "'\n";
    return kExitOutput;
  }
  return 0;
}

int report_error(lel_status s) {
  std::cerr << "error: " << lel_last_error() << "\n";
  return exit_code(s);
}

int run_compute(const std::string& kind, const Options& o) {
  lel_params p;
  if (!to_params(o, p)) return kExitUsage;
  lel_table* t = nullptr;
  lel_status s = lel_compute_table(kind.c_str(), &p, &t);
  if (s != LEL_OK) return report_error(s);
  std::string text = lehmer::cli::emit_table(t, *lehmer::cli::parse_format(o.format), "compute",
                                             {"table=" + kind});
  lel_table_free(t);
  return write_output(o, text);
}

int finish_report(lel_status s, lel_report* rep, const Options& o, const char* command,
                  std::vector<std::string> extra) {
  if (!rep) return report_error(s);
  std::string text =
      lehmer::cli::emit_report(rep, *lehmer::cli::parse_format(o.format), command, extra, o.timings);
  lel_report_free(rep);
  int w = write_output(o, text);
  if (w != 0) return w;
  if (s != LEL_OK) {
    if (s == LEL_IO_ERROR) std::cerr << "error: " << lel_last_error() << "\n";
    return exit_code(s);
  }
  return 0;
}

int run_verify(const std::string& suite, const Options& o) {
  lel_params p;
  if (!to_params(o, p)) return kExitUsage;
  lel_report* rep = nullptr;
  lel_status s = lel_verify(suite.c_str(), &p, &rep);
  return finish_report(s, rep, o, "verify", {});
}

int run_scan(const Options& o) {
  lel_params p;
  if (!to_params(o, p)) return kExitUsage;
  lel_report* rep = nullptr;
  lel_status s = lel_scan(&p, o.checkpoint.empty() ? nullptr : o.checkpoint.c_str(), &rep);
  return finish_report(s, rep, o, "scan", {"suite=conjecture"});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lehmer-Euler numbers: exact tables and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lel_version()));

  Options o;
  std::string kind, suite;

  CLI::App* compute = app.add_subcommand("compute", "Emit a table");
  compute->add_option("table", kind, "w, w-le, w-ge, higher, e, t, T or delta")->required()
      ->check(CLI::IsMember({"w", "w-le", "w-ge", "higher", "e", "t", "T", "delta"}));
  compute->add_option("--method", o.method,
                      "recurrence, explicit, determinant, trudi or series");
  add_common(compute, o);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite,
                     "all, methods, mod9, mod27, mod81, cycles, conjecture, stern, incomplete, "
                     "higher, cfn, thm5 or thm6")
      ->required();
  verify->add_flag("--timings", o.timings, "Include wall-clock seconds per check");
  add_common(verify, o);

  CLI::App* scan = app.add_subcommand("scan", "Scan the periodicity conjecture for one k");
  scan->add_option("--checkpoint", o.checkpoint, "Resume from and update this file");
  scan->add_flag("--timings", o.timings, "Include wall-clock seconds");
  add_common(scan, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (compute->parsed()) return run_compute(kind, o);
  if (verify->parsed()) return run_verify(suite, o);
  return run_scan(o);
}
