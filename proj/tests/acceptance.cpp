// Acceptance run: one PASS/FAIL line per criterion, with wall-clock time.
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lehmer/central_factorial.hpp"
#include "lehmer/congruence.hpp"
#include "lehmer/hessenberg.hpp"
#include "lehmer/lehmer_euler.hpp"
#include "lehmer/reference.hpp"
#include "lehmer/series.hpp"
#include "lehmer/verify.hpp"

using namespace lehmer;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void suite(Outcome& o, std::string_view name, const SuiteBounds& b = {}) {
  SuiteResult r = run_suite(name, b, jobs());
  for (const CheckOutcome& c : r.checks) {
    o.require(c.report.verified(), std::string(name) + "/" + c.name + " " +
                                       std::string(status_name(c.report.status)));
  }
}

Rat small_rat(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  long p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Rat(ArbInt(p), ArbInt(den(rng)));
}

Rat cofactor_det(const std::vector<std::vector<Rat>>& a) {
  if (a.empty()) return Rat(1);
  Rat det;
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::vector<std::vector<Rat>> minor;
    for (std::size_t i = 1; i < a.size(); ++i) {
      std::vector<Rat> row;
      for (std::size_t c = 0; c < a.size(); ++c) {
        if (c != j) row.push_back(a[i][c]);
      }
      minor.push_back(std::move(row));
    }
    Rat term = a[0][j] * cofactor_det(minor);
    det += j % 2 ? -term : term;
  }
  return det;
}

Outcome values() {
  Outcome o;
  WTable w = w_recurrence(11);
  for (std::size_t n = 0; n < 11; ++n) {
    o.require(w[n].abs() == ArbInt::parse(reference::kAbsW[n]), "|W_" + std::to_string(3 * n) + "|");
  }
  return o;
}

Outcome agreement(double& poly_secs, double& explicit_secs) {
  Outcome o;
  auto t0 = Clock::now();
  WTable ref = w_recurrence(61);
  o.require(w_series(61).values == ref.values, "series");
  for (unsigned n = 1; n <= 60; ++n) {
    o.require(w_determinant(n) == ref[n], "determinant n=" + std::to_string(n));
    o.require(w_trudi(n) == ref[n], "trudi n=" + std::to_string(n));
  }
  poly_secs = since(t0);
  auto t1 = Clock::now();
  for (unsigned n = 1; n <= 18; ++n) o.require(w_explicit(n) == ref[n], "explicit n=" + std::to_string(n));
  explicit_secs = since(t1);
  o.require(poly_secs < 30, "four methods over 30 s");
  o.require(explicit_secs < 60, "explicit over 60 s");
  return o;
}

Outcome inversion() {
  Outcome o;
  WTable w = w_recurrence(16);
  for (unsigned n = 1; n <= 15; ++n) o.require(inversion_det_check(n, w), "n=" + std::to_string(n));
  return o;
}

Outcome mod9_mod27() {
  Outcome o;
  WTable w = w_recurrence(301);
  CongruenceReport a = verify_mod9(w);
  CongruenceReport b = verify_mod27(w);
  o.require(a.verified(), "mod 9: " + std::string(status_name(a.status)));
  o.require(b.verified(), "mod 27: " + std::string(status_name(b.status)));
  return o;
}

Outcome cycles() {
  Outcome o;
  for (unsigned k = 2; k <= 5; ++k) {
    std::string tag = "k=" + std::to_string(k);
    CycleDetection d = residue_cycle(k, default_cycle_scan(k));
    o.require(d.confirmed, tag + " unconfirmed");
    o.require(d.cycle.pre_period == std::vector<std::uint64_t>{1}, tag + " pre-period");
    auto ref = reference::cycle(k);
    o.require(d.cycle.period == std::vector<std::uint64_t>(ref.begin(), ref.end()), tag + " period");
    o.require(palindrome_check(d.cycle), tag + " palindrome");
  }
  CycleDetection six = residue_cycle(6, default_cycle_scan(6));
  o.require(six.confirmed, "k=6 unconfirmed");
  o.require(!palindrome_check(six.cycle), "k=6 palindromic");
  return o;
}

Outcome conjecture() {
  Outcome o;
  for (unsigned k = 1; k <= 5; ++k) {
    std::size_t n = 3 * 2 * pow_u64(3, k - 1) + 1;
    o.require(scan_conjecture(k, n).verified(), "k=" + std::to_string(k));
  }
  // Fault injection: one altered residue must surface as a counterexample.
  const unsigned k = 4;
  std::vector<std::uint64_t> res = w_residues(3 * 2 * 27 + 1, pow_u64(3, k + 1));
  res[100] = (res[100] + 3) % pow_u64(3, k + 1);
  CongruenceReport bad = scan_conjecture_residues(k, res);
  o.require(bad.status == CongruenceReport::Status::kCounterexample, "fault not detected");
  o.require(bad.counterexample_index == 100u, "fault index");
  o.require(bad.witness.size() >= 2, "fault witness");
  return o;
}

Outcome stern() {
  Outcome o;
  for (unsigned k = 1; k <= 6; ++k) o.require(stern_check(k, 101).verified(), "k=" + std::to_string(k));
  return o;
}

Outcome properties() {
  Outcome o;
  WTable w = w_recurrence(301);
  for (std::size_t n = 0; n < w.size(); ++n) {
    o.require(w[n].sign() == (n % 2 ? -1 : 1), "sign n=" + std::to_string(n));
  }
  ETable e = euler_numbers(13);
  std::vector<IntPoly> d = delta_polys(12);
  for (unsigned k = 0; k <= 12; ++k) {
    o.require(d[k].eval(ArbInt(0)) == (k % 2 ? -e[k] : e[k]), "Delta(0," + std::to_string(k) + ")");
  }
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> c(10);
    c[0] = small_rat(rng, true);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = small_rat(rng, false);
    Egf3 f(c);
    o.require(series_invert(series_invert(f)) == f, "series_invert involution");
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<Rat>> dense(n, std::vector<Rat>(n));
      LowerHessenberg h(n, [&](std::size_t i, std::size_t j) {
        return dense[i][j] = small_rat(rng, false);
      });
      o.require(hessenberg_det(h) == cofactor_det(dense), "Hessenberg n=" + std::to_string(n));
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double bound;  // seconds; 0 for none
    std::function<Outcome()> run;
  };
  double poly_secs = 0, explicit_secs = 0;
  const std::vector<Criterion> criteria{
      {1, "|W_3n| for n <= 10", 1, values},
      {2, "methods agree (four n <= 60, explicit n <= 18)", 0,
       [&] { return agreement(poly_secs, explicit_secs); }},
      {3, "inversion determinant n <= 15", 0, inversion},
      {4, "mod 9 for n <= 300, mod 27 tracks to raw index 900", 0, mod9_mod27},
      {5, "cycles mod 3^2..3^5, palindromes", 0, cycles},
      {6, "conjecture k <= 5, fault injection", 0, conjecture},
      {7, "Stern k <= 6, n, m <= 100", 0, stern},
      {8, "incomplete n <= 30, m <= 6", 0,
       [] {
         Outcome o;
         suite(o, "incomplete");
         return o;
       }},
      {9, "higher order r in {2,3}, alpha <= 4, n <= 24", 0,
       [] {
         Outcome o;
         suite(o, "higher");
         return o;
       }},
      {10, "central factorial identities", 30,
       [] {
         Outcome o;
         suite(o, "cfn");
         suite(o, "thm5");
         suite(o, "thm6");
         return o;
       }},
      {11, "properties", 0, properties},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = since(t0);
    if (c.bound > 0 && secs >= c.bound) o.require(false, "time bound exceeded");
    std::printf("criterion %2d: %s  %s  (%.2f s", c.id, o.ok ? "PASS" : "FAIL", c.what, secs);
    if (c.bound > 0) std::printf(", bound %.0f s", c.bound);
    if (c.id == 2) std::printf("; four methods %.2f s of 30, explicit %.2f s of 60", poly_secs, explicit_secs);
    std::printf(")");
    if (!o.ok) std::printf("  [%s]", o.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
