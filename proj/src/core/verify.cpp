#include "lehmer/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <sstream>
#include <thread>

#include "lehmer/central_factorial.hpp"
#include "lehmer/error.hpp"
#include "lehmer/higher_order.hpp"
#include "lehmer/incomplete.hpp"
#include "lehmer/lehmer_euler.hpp"
#include "lehmer/reference.hpp"

namespace lehmer {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckOutcome& c) { return c.report.verified(); });
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> kNames{
      "all",        "methods", "mod9",       "mod27",  "mod81", "cycles", "conjecture",
      "stern",      "incomplete", "higher",  "cfn",    "thm5",  "thm6"};
  return kNames;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

using Status = CongruenceReport::Status;

struct Check {
  std::string name;
  std::function<CongruenceReport()> run;
};

CongruenceReport report(std::string id, std::string range) {
  CongruenceReport r;
  r.theorem_id = std::move(id);
  r.range_checked = std::move(range);
  return r;
}

void fail(CongruenceReport& r, std::uint64_t index, std::vector<std::string> witness) {
  r.status = Status::kCounterexample;
  r.counterexample_index = index;
  r.witness = std::move(witness);
}

std::string kv(std::string_view key, const std::string& value) {
  return std::string(key) + "=" + value;
}
std::string kv(std::string_view key, std::uint64_t value) { return kv(key, std::to_string(value)); }

std::string below(std::string_view var, unsigned n) {
  return "0 <= " + std::string(var) + " < " + std::to_string(n);
}

std::string join(std::span<const std::uint64_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "[" + s + "]";
}

unsigned bound(const std::optional<unsigned>& v, unsigned fallback) { return v ? *v : fallback; }

std::vector<unsigned> powers(const std::optional<unsigned>& k, unsigned lo, unsigned hi) {
  if (k) return {*k};
  std::vector<unsigned> out;
  for (unsigned i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------

void add_methods(std::vector<Check>& out, const SuiteBounds& b) {
  const unsigned n = bound(b.upto, 61);
  if (n < 1) throw InvalidInput("methods: --upto must be at least 1");
  auto base = std::make_shared<const WTable>(w_recurrence(std::max(n, 301u)));

  out.push_back({"values", [base] {
    CongruenceReport r = report("values", "|W_{3n}|, " + below("n", 11));
    for (std::size_t i = 0; i < reference::kAbsW.size(); ++i) {
      ArbInt want = ArbInt::parse(reference::kAbsW[i]);
      if ((*base)[i].abs() != want) {
        fail(r, 3 * i, {kv("n", i), kv("W", (*base)[i].str()), kv("expected_abs", want.str())});
        break;
      }
    }
    return r;
  }});

  auto agree = [&out, base](WMethod method, unsigned count) {
    std::string name = "agree." + std::string(method_name(method));
    out.push_back({name, [base, method, count] {
      CongruenceReport r =
          report(std::string(method_name(method)) + " = recurrence", below("n", count));
      WTable t = w_table(method, count);
      for (std::size_t i = 0; i < count; ++i) {
        if (t[i] != (*base)[i]) {
          fail(r, 3 * i,
               {kv("n", i), kv(method_name(method), t[i].str()), kv("recurrence", (*base)[i].str())});
          break;
        }
      }
      return r;
    }});
  };
  agree(WMethod::kSeries, n);
  agree(WMethod::kDeterminant, n);
  agree(WMethod::kTrudi, n);
  agree(WMethod::kExplicit, std::min(n, 19u));

  out.push_back({"sign_law", [base] {
    CongruenceReport r = report("(-1)^n W_{3n} > 0", below("n", static_cast<unsigned>(base->size())));
    for (std::size_t i = 0; i < base->size(); ++i) {
      int s = (*base)[i].sign() * (i % 2 == 0 ? 1 : -1);
      if (s <= 0) {
        fail(r, 3 * i, {kv("n", i), kv("W", (*base)[i].str())});
        break;
      }
    }
    return r;
  }});

  out.push_back({"inversion_det", [base] {
    CongruenceReport r = report("inversion determinant", "1 <= n <= 15");
    for (unsigned i = 1; i <= 15; ++i) {
      if (!inversion_det_check(i, *base)) {
        fail(r, i, {kv("n", i)});
        break;
      }
    }
    return r;
  }});
}

void add_theorem(std::vector<Check>& out, std::string_view which, const SuiteBounds& b) {
  const unsigned n = bound(b.upto, 301);
  if (n < (which == "mod81" ? 3u : 1u)) throw InvalidInput(std::string(which) + ": --upto too small");
  auto w = std::make_shared<const WTable>(w_recurrence(n));
  if (which == "mod9") {
    out.push_back({"mod9", [w] { return verify_mod9(*w); }});
  } else if (which == "mod27") {
    out.push_back({"mod27", [w] { return verify_mod27(*w); }});
  } else {
    out.push_back({"mod81", [w] { return verify_mod81_cases(*w); }});
  }
}

void add_cycles(std::vector<Check>& out, const SuiteBounds& b) {
  for (unsigned k : powers(b.k, 2, 6)) {
    if (k < 1 || k > 8) throw InvalidInput("cycles: k must be in 1..8");
    const unsigned n = bound(b.upto, static_cast<unsigned>(default_cycle_scan(k)));
    auto detected = std::make_shared<CycleDetection>();
    auto once = std::make_shared<std::once_flag>();
    auto get = [detected, once, k, n]() -> const CycleDetection& {
      std::call_once(*once, [&] { *detected = residue_cycle(k, n); });
      return *detected;
    };
    out.push_back({"cycle.k=" + std::to_string(k), [get, k, n] {
      const CycleDetection& d = get();
      CongruenceReport r =
          report("W_{3n} mod 3^" + std::to_string(k) + " cycle", below("n", n));
      if (!d.confirmed) {
        r.status = Status::kInconclusive;
        r.note = "scan shorter than three candidate periods";
        return r;
      }
      r.note = "modulus " + std::to_string(d.cycle.modulus) + ": pre-period " +
               join(d.cycle.pre_period) + ", period " + join(d.cycle.period) + " (length " +
               std::to_string(d.cycle.period.size()) + ")";
      auto expected = reference::cycle(k);
      if (!expected.empty()) {
        bool ok = d.cycle.pre_period == std::vector<std::uint64_t>{1} &&
                  std::equal(d.cycle.period.begin(), d.cycle.period.end(), expected.begin(),
                             expected.end());
        if (!ok) {
          fail(r, 0, {kv("k", k), kv("detected", join(d.cycle.period)),
                      kv("expected", join(expected))});
        }
      }
      return r;
    }});
    out.push_back({"palindrome.k=" + std::to_string(k), [get, k, n] {
      const CycleDetection& d = get();
      const bool expected = k <= 5;
      CongruenceReport r = report("palindromic halves mod 3^" + std::to_string(k) +
                                      (expected ? " hold" : " fail"),
                                  below("n", n));
      if (!d.confirmed) {
        r.status = Status::kInconclusive;
        r.note = "cycle not confirmed";
        return r;
      }
      bool got = palindrome_check(d.cycle);
      r.note = std::string("palindromic: ") + (got ? "yes" : "no");
      if (got != expected) fail(r, 0, {kv("k", k), kv("period", join(d.cycle.period))});
      return r;
    }});
  }
}

void add_conjecture(std::vector<Check>& out, const SuiteBounds& b) {
  for (unsigned k : powers(b.k, 1, 5)) {
    if (k < 1 || k > 12) throw InvalidInput("conjecture: k must be in 1..12");
    const unsigned n = bound(b.upto, static_cast<unsigned>(3 * 2 * pow_u64(3, k - 1) + 1));
    out.push_back({"conjecture.k=" + std::to_string(k), [k, n] { return scan_conjecture(k, n); }});
  }
}

void add_stern(std::vector<Check>& out, const SuiteBounds& b) {
  const unsigned n = bound(b.upto, 101);
  for (unsigned k : powers(b.k, 1, 6)) {
    if (k < 1 || k > 63) throw InvalidInput("stern: k must be in 1..63");
    out.push_back({"stern.k=" + std::to_string(k), [k, n] { return stern_check(k, n); }});
  }
}

void add_incomplete(std::vector<Check>& out, const SuiteBounds& b) {
  const unsigned n = bound(b.upto, 31);
  const unsigned mmax = bound(b.m, 6);
  if (n < 2) throw InvalidInput("incomplete: --upto must be at least 2");
  if (mmax < 1) throw InvalidInput("incomplete: --m must be at least 1");
  auto base = std::make_shared<const WTable>(w_recurrence(n));

  for (IncompleteKind kind : {IncompleteKind::kAtMost, IncompleteKind::kAtLeast}) {
    for (unsigned m = 1; m <= mmax; ++m) {
      std::string name = std::string(kind_name(kind)) + ".m=" + std::to_string(m);
      out.push_back({name, [kind, m, n] {
        CongruenceReport r = report(
            std::string(kind_name(kind)) + " four methods, m=" + std::to_string(m), "1 <= n < " +
                                                                                       std::to_string(n));
        IncompleteWTable rec = incomplete_recurrence(kind, n, m);
        for (unsigned i = 1; i < n; ++i) {
          ArbInt e = incomplete_explicit(kind, i, m);
          ArbInt d = incomplete_determinant(kind, i, m);
          ArbInt t = incomplete_trudi(kind, i, m);
          if (e != rec.values[i] || d != rec.values[i] || t != rec.values[i]) {
            fail(r, i, {kv("n", i), kv("m", m), kv("recurrence", rec.values[i].str()),
                        kv("explicit", e.str()), kv("determinant", d.str()), kv("trudi", t.str())});
            break;
          }
        }
        return r;
      }});
    }
  }

  out.push_back({"reduction", [base, n] {
    CongruenceReport r = report("le with m >= n and ge with m = 1 give W_{3n}", below("n", n));
    IncompleteWTable ge1 = w_ge_recurrence(n, 1);
    if (ge1.values != base->values) {
      fail(r, 0, {kv("kind", "ge"), kv("m", 1)});
      return r;
    }
    for (unsigned m = 1; m < n; ++m) {
      IncompleteWTable le = w_le_recurrence(n, m);
      for (unsigned i = 0; i <= m; ++i) {
        if (le.values[i] != (*base)[i]) {
          fail(r, i, {kv("kind", "le"), kv("m", m), kv("n", i), kv("value", le.values[i].str()),
                      kv("W", (*base)[i].str())});
          return r;
        }
      }
    }
    // The per-index methods with m >= n, on the sizes where the explicit
    // sum is cheap.
    for (unsigned i = 1; i < std::min(n, 13u); ++i) {
      if (w_le_explicit(i, i) != (*base)[i] || w_le_trudi(i, i) != (*base)[i] ||
          w_le_determinant(i, i) != (*base)[i] || w_ge_explicit(i, 1) != (*base)[i] ||
          w_ge_trudi(i, 1) != (*base)[i] || w_ge_determinant(i, 1) != (*base)[i]) {
        fail(r, i, {kv("n", i), kv("W", (*base)[i].str())});
        return r;
      }
    }
    return r;
  }});

  out.push_back({"zero_block", [n] {
    CongruenceReport r = report("W_{3n,>=m} = 0 for 0 < n < m, W_{3m,>=m} = -1",
                                "1 <= m < " + std::to_string(n));
    for (unsigned m = 1; m < n; ++m) {
      IncompleteWTable ge = w_ge_recurrence(n, m);
      for (unsigned i = 1; i < m; ++i) {
        if (!ge.values[i].is_zero()) {
          fail(r, i, {kv("m", m), kv("n", i), kv("value", ge.values[i].str())});
          return r;
        }
      }
      if (ge.values[m] != ArbInt(-1)) {
        fail(r, m, {kv("m", m), kv("n", m), kv("value", ge.values[m].str())});
        return r;
      }
    }
    return r;
  }});
}

void add_higher(std::vector<Check>& out, const SuiteBounds& b) {
  const unsigned n = bound(b.upto, 25);
  const unsigned amax = bound(b.alpha, 4);
  if (n < 1) throw InvalidInput("higher: --upto must be at least 1");
  if (amax < 1) throw InvalidInput("higher: --alpha must be at least 1");
  std::vector<unsigned> rs = b.r ? std::vector<unsigned>{*b.r} : std::vector<unsigned>{2, 3};
  for (unsigned r : rs) {
    if (r < 2) throw InvalidInput("higher: r must be at least 2");
  }

  for (unsigned r : rs) {
    for (unsigned a = 1; a <= amax; ++a) {
      std::string tag = "r=" + std::to_string(r) + ".alpha=" + std::to_string(a);
      out.push_back({"series." + tag, [r, a, n] {
        CongruenceReport rep = report("series entries vanish off multiples of r", below("n", n));
        HigherWTable s = w_higher_series(r, a, n);
        for (unsigned i = 0; i < n; ++i) {
          if (i % r != 0 && !s[i].is_zero()) {
            fail(rep, i, {kv("n", i), kv("value", s[i].str())});
            break;
          }
        }
        return rep;
      }});
      if (r != 2 && r != 3) continue;
      out.push_back({"explicit." + tag, [r, a, n] {
        CongruenceReport rep = report("explicit = series", below("n", n));
        HigherWTable s = w_higher_series(r, a, n);
        for (unsigned i = 0; i < n; ++i) {
          ArbInt e = w_higher_explicit(r, a, i);
          if (e != s[i]) {
            fail(rep, i, {kv("n", i), kv("explicit", e.str()), kv("series", s[i].str())});
            break;
          }
        }
        return rep;
      }});
      if (r != 2) continue;
      out.push_back({"luo.alpha=" + std::to_string(a), [a, n] {
        CongruenceReport rep = report("Luo form = series", below("n", n));
        HigherWTable s = w_higher_series(2, a, n);
        for (unsigned i = 0; i < n; ++i) {
          ArbInt l = euler_higher_luo(a, i);
          if (l != s[i]) {
            fail(rep, i, {kv("n", i), kv("luo", l.str()), kv("series", s[i].str())});
            break;
          }
        }
        return rep;
      }});
    }
  }

  out.push_back({"reduction", [n] {
    CongruenceReport rep = report("r=3 alpha=1 gives W_n, r=2 alpha=1 gives E_n", below("n", n));
    HigherWTable s3 = w_higher_series(3, 1, n);
    HigherWTable s2 = w_higher_series(2, 1, n);
    WTable w = w_recurrence((n + 2) / 3);
    ETable e = euler_numbers((n + 1) / 2);
    for (unsigned i = 0; i < n; ++i) {
      if (s3[i] != w.raw(i)) {
        fail(rep, i, {kv("r", 3), kv("n", i), kv("series", s3[i].str()), kv("W", w.raw(i).str())});
        break;
      }
      if (s2[i] != e.raw(i)) {
        fail(rep, i, {kv("r", 2), kv("n", i), kv("series", s2[i].str()), kv("E", e.raw(i).str())});
        break;
      }
    }
    return rep;
  }});
}

void add_cfn(std::vector<Check>& out, const SuiteBounds& b) {
  const unsigned n = bound(b.upto, 15);
  if (n < 2) throw InvalidInput("cfn: --upto must be at least 2");

  out.push_back({"delta.displayed", [] {
    CongruenceReport r = report("Delta(x, k) displayed polynomials", "1 <= k <= 3");
    auto as_poly = [](auto coeffs) {
      std::vector<ArbInt> c;
      for (long v : coeffs) c.emplace_back(v);
      return IntPoly(std::move(c));
    };
    const IntPoly want[] = {as_poly(reference::kDelta1), as_poly(reference::kDelta2),
                            as_poly(reference::kDelta3)};
    std::vector<IntPoly> d = delta_polys(3);
    for (unsigned k = 1; k <= 3; ++k) {
      if (d[k] != want[k - 1]) {
        std::ostringstream got, exp;
        got << d[k];
        exp << want[k - 1];
        fail(r, k, {kv("k", k), kv("computed", got.str()), kv("expected", exp.str())});
        break;
      }
    }
    return r;
  }});

  out.push_back({"delta.shape", [] {
    CongruenceReport r = report("Delta(x, k) has degree 2k and leading coefficient 1", "0 <= k <= 15");
    std::vector<IntPoly> d = delta_polys(15);
    for (unsigned k = 0; k <= 15; ++k) {
      if (d[k].degree() != static_cast<long>(2 * k) || d[k].leading() != ArbInt(1)) {
        fail(r, k, {kv("k", k), kv("degree", std::to_string(d[k].degree()))});
        break;
      }
    }
    return r;
  }});

  out.push_back({"delta.euler", [] {
    CongruenceReport r = report("Delta(0, k) = (-1)^k E_{2k}", "0 <= k <= 12");
    std::vector<IntPoly> d = delta_polys(12);
    ETable e = euler_numbers(13);
    for (unsigned k = 0; k <= 12; ++k) {
      ArbInt v = d[k].eval(ArbInt(0));
      if (k % 2 == 1) v = -v;
      if (v != e[k]) {
        fail(r, k, {kv("k", k), kv("signed_delta", v.str()), kv("E", e[k].str())});
        break;
      }
    }
    return r;
  }});

  out.push_back({"t.product", [n] {
    CongruenceReport r = report("t recurrence = central factorial product", "1 <= n < " + std::to_string(n));
    for (unsigned i = 1; i < n; ++i) {
      try {
        t_first_via_product(i);
      } catch (const ConsistencyError& e) {
        fail(r, i, {kv("n", i), kv("error", e.what())});
        break;
      }
    }
    return r;
  }});

  out.push_back({"T.basis", [n] {
    CongruenceReport r = report("T recurrence expands x^n in the central factorial basis",
                                "1 <= n < " + std::to_string(n));
    for (unsigned i = 1; i < n; ++i) {
      if (!basis_check_second(i)) {
        fail(r, i, {kv("n", i)});
        break;
      }
    }
    return r;
  }});

  for (int kind = 1; kind <= 2; ++kind) {
    out.push_back({kind == 1 ? "gf.first" : "gf.second", [kind, n] {
      CongruenceReport r = report(kind == 1 ? "generating function of t" : "generating function of T",
                                  "1 <= k <= 5, series order " + std::to_string(n - 1));
      for (unsigned k = 1; k <= 5; ++k) {
        bool ok = kind == 1 ? gf_check_first(k, n - 1) : gf_check_second(k, n - 1);
        if (!ok) {
          fail(r, k, {kv("k", k)});
          break;
        }
      }
      return r;
    }});
  }
}

void add_thm5(std::vector<Check>& out, const SuiteBounds& b) {
  const unsigned n = bound(b.upto, 11);
  if (n < 1) throw InvalidInput("thm5: --upto must be at least 1");
  for (unsigned k = 0; k < n; ++k) {
    out.push_back({"thm5.k=" + std::to_string(k), [k, n] {
      CongruenceReport r = report("E_{2n+2k} from Delta(j, k) and T(2n, 2j), k=" + std::to_string(k),
                                  below("n", n));
      for (unsigned i = 0; i < n; ++i) {
        if (!thm5_check(i, k)) {
          fail(r, i, {kv("n", i), kv("k", k)});
          break;
        }
      }
      return r;
    }});
  }
}

void add_thm6(std::vector<Check>& out, const SuiteBounds& b) {
  const unsigned n = bound(b.upto, 11);
  if (n < 1) throw InvalidInput("thm6: --upto must be at least 1");
  out.push_back({"thm6", [n] {
    CongruenceReport r = report("sum (-4)^{n-j} t(2n+1, 2j+1) Delta(x, j) = (x+1)...(x+2n)", below("n", n));
    for (unsigned i = 0; i < n; ++i) {
      if (!thm6_check(i)) {
        fail(r, i, {kv("n", i)});
        break;
      }
    }
    return r;
  }});
  out.push_back({"thm6.remark", [n] {
    CongruenceReport r = report("sum 4^{n-j} t(2n+1, 2j+1) E_{2j} = (-1)^n (2n)!", below("n", n));
    for (unsigned i = 0; i < n; ++i) {
      if (!thm6_remark_check(i)) {
        fail(r, i, {kv("n", i)});
        break;
      }
    }
    return r;
  }});
}

void add_suite(std::vector<Check>& out, std::string_view name, const SuiteBounds& b,
               const std::string& prefix) {
  std::size_t first = out.size();
  if (name == "methods") add_methods(out, b);
  else if (name == "mod9" || name == "mod27" || name == "mod81") add_theorem(out, name, b);
  else if (name == "cycles") add_cycles(out, b);
  else if (name == "conjecture") add_conjecture(out, b);
  else if (name == "stern") add_stern(out, b);
  else if (name == "incomplete") add_incomplete(out, b);
  else if (name == "higher") add_higher(out, b);
  else if (name == "cfn") add_cfn(out, b);
  else if (name == "thm5") add_thm5(out, b);
  else if (name == "thm6") add_thm6(out, b);
  else throw InvalidInput("unknown suite '" + std::string(name) + "'");
  for (std::size_t i = first; i < out.size(); ++i) out[i].name = prefix + out[i].name;
}

CheckOutcome run_one(const Check& c) {
  CheckOutcome o;
  o.name = c.name;
  auto start = std::chrono::steady_clock::now();
  try {
    o.report = c.run();
  } catch (const std::exception& e) {
    o.report = report(c.name, "aborted");
    o.report.status = Status::kCounterexample;
    o.report.witness = {kv("error", e.what())};
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return o;
}

}  // namespace

SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds, unsigned jobs) {
  std::vector<Check> checks;
  if (name == "all") {
    if (bounds.upto || bounds.k || bounds.m || bounds.r || bounds.alpha) {
      throw InvalidInput("bounds apply to a single suite, not 'all'");
    }
    for (std::string_view s : suite_names()) {
      if (s != "all") add_suite(checks, s, bounds, std::string(s) + ".");
    }
  } else {
    add_suite(checks, name, bounds, "");
  }

  SuiteResult result{std::string(name), std::vector<CheckOutcome>(checks.size())};
  const unsigned workers =
      std::max(1u, std::min<unsigned>(jobs == 0 ? 1 : jobs, static_cast<unsigned>(checks.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&checks, &result, &next] {
    for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) {
      result.checks[i] = run_one(checks[i]);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return result;
}

}  // namespace lehmer
