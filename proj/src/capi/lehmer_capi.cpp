#include "lehmer/lehmer.h"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lehmer/central_factorial.hpp"
#include "lehmer/error.hpp"
#include "lehmer/higher_order.hpp"
#include "lehmer/incomplete.hpp"
#include "lehmer/lehmer_euler.hpp"
#include "lehmer/verify.hpp"

#ifndef LEHMER_VERSION
#define LEHMER_VERSION "0.0.0"
#endif

struct lel_table {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> params;
};

struct StoredCheck {
  std::string name, theorem_id, range, status, note;
  std::optional<std::uint64_t> index;
  std::vector<std::string> witness;
  double seconds = 0;
};

struct lel_report {
  std::string name;
  bool passed = true;
  std::vector<StoredCheck> checks;
  std::vector<std::string> params;
};

namespace {

using namespace lehmer;

thread_local std::string g_error;

lel_status set_error(lel_status s, const std::string& message) {
  g_error = message;
  return s;
}

// Runs body, mapping exceptions to status codes.
template <typename Body>
lel_status guarded(Body body) {
  try {
    g_error.clear();
    return body();
  } catch (const InvalidInput& e) {
    return set_error(LEL_INVALID_INPUT, e.what());
  } catch (const ConsistencyError& e) {
    return set_error(LEL_CONSISTENCY_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(LEL_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(LEL_INTERNAL_ERROR, e.what());
  }
}

std::optional<unsigned> opt(long v, const char* name) {
  if (v < 0) return std::nullopt;
  if (v > 100000000L) throw InvalidInput(std::string("--") + name + " is too large");
  return static_cast<unsigned>(v);
}

unsigned value_or(long v, const char* name, unsigned fallback) {
  return opt(v, name).value_or(fallback);
}

unsigned positive(long v, const char* name, unsigned fallback) {
  unsigned u = value_or(v, name, fallback);
  if (u < 1) throw InvalidInput(std::string("--") + name + " must be at least 1");
  return u;
}

std::string param(const char* name, long v) { return std::string(name) + "=" + std::to_string(v); }

// Descending powers, e.g. "x^2+3x+1".
std::string poly_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (long d = p.degree(); d >= 0; --d) {
    ArbInt c = p[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    ArbInt a = c.abs();
    if (!s.empty() || neg) s += neg ? "-" : "+";
    if (d == 0 || a != ArbInt(1)) s += a.str();
    if (d >= 1) s += "x";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

lel_table* make_w_table(const lel_params& p) {
  unsigned n = positive(p.upto, "upto", 11);
  WMethod method = p.method ? parse_method(p.method) : WMethod::kRecurrence;
  WTable w = w_table(method, n);
  auto t = std::make_unique<lel_table>(lel_table{"w", {"n", "W_3n"}, {}, {}});
  for (std::size_t i = 0; i < w.size(); ++i) t->rows.push_back({std::to_string(i), w[i].str()});
  t->params = {param("upto", n), std::string("method=") + std::string(method_name(method))};
  return t.release();
}

lel_table* make_incomplete_table(const lel_params& p, IncompleteKind kind) {
  unsigned n = positive(p.upto, "upto", 11);
  unsigned m = positive(p.m, "m", 1);
  std::string method = p.method ? p.method : "recurrence";
  std::vector<ArbInt> values;
  if (method == "recurrence") {
    values = incomplete_recurrence(kind, n, m).values;
  } else {
    values.emplace_back(1);
    for (unsigned i = 1; i < n; ++i) {
      if (method == "explicit") values.push_back(incomplete_explicit(kind, i, m));
      else if (method == "determinant") values.push_back(incomplete_determinant(kind, i, m));
      else if (method == "trudi") values.push_back(incomplete_trudi(kind, i, m));
      else throw InvalidInput("method '" + method + "' is not available for incomplete tables");
    }
  }
  std::string kn = kind == IncompleteKind::kAtMost ? "w-le" : "w-ge";
  auto t = std::make_unique<lel_table>(lel_table{kn, {"n", "W_3n"}, {}, {}});
  for (std::size_t i = 0; i < values.size(); ++i) t->rows.push_back({std::to_string(i), values[i].str()});
  t->params = {param("upto", n), param("m", m), "method=" + method};
  return t.release();
}

lel_table* make_higher_table(const lel_params& p) {
  unsigned n = positive(p.upto, "upto", 25);
  unsigned r = value_or(p.r, "r", 3);
  unsigned alpha = positive(p.alpha, "alpha", 1);
  if (r < 2) throw InvalidInput("--r must be at least 2");
  std::string method = p.method ? p.method : "series";
  std::vector<ArbInt> values;
  if (method == "series") {
    values = w_higher_series(r, alpha, n).values;
  } else if (method == "explicit") {
    for (unsigned i = 0; i < n; ++i) values.push_back(w_higher_explicit(r, alpha, i));
  } else {
    throw InvalidInput("method '" + method + "' is not available for higher-order tables");
  }
  auto t = std::make_unique<lel_table>(lel_table{"higher", {"n", "W_r_n"}, {}, {}});
  for (std::size_t i = 0; i < values.size(); ++i) t->rows.push_back({std::to_string(i), values[i].str()});
  t->params = {param("upto", n), param("r", r), param("alpha", alpha), "method=" + method};
  return t.release();
}

lel_table* make_e_table(const lel_params& p) {
  unsigned n = positive(p.upto, "upto", 11);
  ETable e = euler_numbers(n);
  auto t = std::make_unique<lel_table>(lel_table{"e", {"n", "E_2n"}, {}, {}});
  for (std::size_t i = 0; i < e.size(); ++i) t->rows.push_back({std::to_string(i), e[i].str()});
  t->params = {param("upto", n)};
  return t.release();
}

lel_table* make_cfn_table(const lel_params& p, bool first) {
  unsigned n = positive(p.upto, "upto", 8);
  CfnTable c = first ? cfn_first_table(n - 1) : cfn_second_table(n - 1);
  auto t = std::make_unique<lel_table>(lel_table{first ? "t" : "T", {"n", "k", first ? "t" : "T"}, {}, {}});
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = i % 2; k <= i; k += 2) {
      t->rows.push_back({std::to_string(i), std::to_string(k), c.at(i, k).str()});
    }
  }
  t->params = {param("upto", n)};
  return t.release();
}

lel_table* make_delta_table(const lel_params& p) {
  std::optional<unsigned> k = opt(p.k, "k");
  unsigned lo = k ? *k : 0;
  unsigned hi = k ? *k : positive(p.upto, "upto", 5) - 1;
  std::vector<IntPoly> d = delta_polys(hi);
  auto t = std::make_unique<lel_table>(lel_table{"delta", {"k", "polynomial", "coefficients"}, {}, {}});
  for (unsigned i = lo; i <= hi; ++i) {
    std::string coeffs;
    for (std::size_t j = 0; j < d[i].coeffs().size(); ++j) {
      coeffs += (j ? " " : "") + d[i].coeffs()[j].str();
    }
    t->rows.push_back({std::to_string(i), poly_text(d[i]), coeffs});
  }
  t->params = k ? std::vector<std::string>{param("k", *k)}
                : std::vector<std::string>{param("upto", hi + 1)};
  return t.release();
}

void store(lel_report& rep, const SuiteResult& result) {
  rep.passed = result.passed();
  for (const CheckOutcome& c : result.checks) {
    StoredCheck s;
    s.name = c.name;
    s.theorem_id = c.report.theorem_id;
    s.range = c.report.range_checked;
    s.status = std::string(status_name(c.report.status));
    s.note = c.report.note;
    s.index = c.report.counterexample_index;
    s.witness = c.report.witness;
    s.seconds = c.seconds;
    rep.checks.push_back(std::move(s));
  }
}

// FNV-1a, 64 bit.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(unsigned k) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a("lehmer-scan k=" + std::to_string(k)));
  return buf;
}

struct Checkpoint {
  unsigned k;
  std::uint64_t verified;
};

// nullopt when the file does not exist. Throws on a malformed file.
std::optional<Checkpoint> read_checkpoint(const std::string& path, bool& corrupt) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  if (!content.empty() && content.back() == '\n') content.pop_back();
  std::istringstream ls(content);
  long long k = -1, n = -1;
  std::string hash, tail;
  if (content.find('\n') != std::string::npos || !(ls >> k >> n >> hash) || (ls >> tail) ||
      k < 1 || k > 38 || n < 0 || hash != config_hash(static_cast<unsigned>(k))) {
    corrupt = true;
    return std::nullopt;
  }
  return Checkpoint{static_cast<unsigned>(k), static_cast<std::uint64_t>(n)};
}

bool write_checkpoint(const std::string& path, unsigned k, std::uint64_t verified) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << k << ' ' << verified << ' ' << config_hash(k) << '\n';
    if (!out.flush()) return false;
  }
  return std::rename(tmp.c_str(), path.c_str()) == 0;
}

}  // namespace

extern "C" {

const char* lel_version(void) { return LEHMER_VERSION; }

const char* lel_last_error(void) { return g_error.c_str(); }

void lel_params_init(lel_params* p) {
  if (!p) return;
  p->upto = -1;
  p->k = -1;
  p->m = -1;
  p->r = -1;
  p->alpha = -1;
  p->method = nullptr;
  p->jobs = 0;
}

lel_status lel_compute_table(const char* kind, const lel_params* params, lel_table** out) {
  return guarded([&] {
    if (!kind || !params || !out) throw InvalidInput("null argument");
    *out = nullptr;
    const std::string k = kind;
    if (k == "w") *out = make_w_table(*params);
    else if (k == "w-le") *out = make_incomplete_table(*params, IncompleteKind::kAtMost);
    else if (k == "w-ge") *out = make_incomplete_table(*params, IncompleteKind::kAtLeast);
    else if (k == "higher") *out = make_higher_table(*params);
    else if (k == "e") *out = make_e_table(*params);
    else if (k == "t") *out = make_cfn_table(*params, true);
    else if (k == "T") *out = make_cfn_table(*params, false);
    else if (k == "delta") *out = make_delta_table(*params);
    else throw InvalidInput("unknown table '" + k + "'");
    return LEL_OK;
  });
}

const char* lel_table_kind(const lel_table* t) { return t ? t->kind.c_str() : ""; }
size_t lel_table_columns(const lel_table* t) { return t ? t->columns.size() : 0; }
const char* lel_table_column_name(const lel_table* t, size_t c) {
  return t && c < t->columns.size() ? t->columns[c].c_str() : nullptr;
}
size_t lel_table_rows(const lel_table* t) { return t ? t->rows.size() : 0; }
const char* lel_table_cell(const lel_table* t, size_t r, size_t c) {
  if (!t || r >= t->rows.size() || c >= t->rows[r].size()) return nullptr;
  return t->rows[r][c].c_str();
}
size_t lel_table_param_count(const lel_table* t) { return t ? t->params.size() : 0; }
const char* lel_table_param(const lel_table* t, size_t i) {
  return t && i < t->params.size() ? t->params[i].c_str() : nullptr;
}
void lel_table_free(lel_table* t) { delete t; }

lel_status lel_verify(const char* suite, const lel_params* params, lel_report** out) {
  return guarded([&] {
    if (!suite || !params || !out) throw InvalidInput("null argument");
    *out = nullptr;
    if (!is_suite(suite)) throw InvalidInput(std::string("unknown suite '") + suite + "'");
    SuiteBounds b;
    b.upto = opt(params->upto, "upto");
    b.k = opt(params->k, "k");
    b.m = opt(params->m, "m");
    b.r = opt(params->r, "r");
    b.alpha = opt(params->alpha, "alpha");
    SuiteResult result = run_suite(suite, b, params->jobs);
    auto rep = std::make_unique<lel_report>();
    rep->name = suite;
    rep->params.push_back(std::string("suite=") + suite);
    if (b.upto) rep->params.push_back(param("upto", *b.upto));
    if (b.k) rep->params.push_back(param("k", *b.k));
    if (b.m) rep->params.push_back(param("m", *b.m));
    if (b.r) rep->params.push_back(param("r", *b.r));
    if (b.alpha) rep->params.push_back(param("alpha", *b.alpha));
    store(*rep, result);
    *out = rep.release();
    if ((*out)->passed) return LEL_OK;
    return set_error(LEL_COUNTEREXAMPLE, "suite '" + std::string(suite) + "' did not verify");
  });
}

lel_status lel_scan(const lel_params* params, const char* checkpoint_path, lel_report** out) {
  return guarded([&] {
    if (!params || !out) throw InvalidInput("null argument");
    *out = nullptr;
    std::optional<unsigned> k = opt(params->k, "k");
    if (!k) throw InvalidInput("scan needs --k");
    if (*k < 1 || *k > 38) throw InvalidInput("--k must be in 1..38");
    unsigned n = positive(params->upto, "upto", static_cast<unsigned>(3 * 2 * pow_u64(3, *k - 1) + 1));

    std::size_t resume = 0;
    std::string resume_note;
    if (checkpoint_path) {
      bool corrupt = false;
      std::optional<Checkpoint> cp = read_checkpoint(checkpoint_path, corrupt);
      if (corrupt) {
        return set_error(LEL_CORRUPT_CHECKPOINT,
                         std::string("checkpoint '") + checkpoint_path + "' is corrupt");
      }
      if (cp && cp->k == *k) {
        resume = static_cast<std::size_t>(std::min<std::uint64_t>(cp->verified, n));
        resume_note = "resumed at n = " + std::to_string(resume);
      } else if (cp) {
        resume_note = "checkpoint for k = " + std::to_string(cp->k) + " ignored";
      }
    }

    auto start = std::chrono::steady_clock::now();
    CongruenceReport r = scan_conjecture(*k, n, resume);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!resume_note.empty()) r.note += "; " + resume_note;

    auto rep = std::make_unique<lel_report>();
    rep->name = "scan";
    rep->params = {param("k", *k), param("upto", n)};
    SuiteResult sr{"scan", {CheckOutcome{"conjecture.k=" + std::to_string(*k), r, secs}}};
    store(*rep, sr);
    *out = rep.release();

    if (checkpoint_path) {
      std::uint64_t verified = r.counterexample_index ? *r.counterexample_index : n;
      if (r.status == CongruenceReport::Status::kInconclusive) verified = resume;
      verified = std::max<std::uint64_t>(verified, resume);
      if (!write_checkpoint(checkpoint_path, *k, verified)) {
        return set_error(LEL_IO_ERROR, std::string("cannot write checkpoint '") + checkpoint_path + "'");
      }
    }
    if ((*out)->passed) return LEL_OK;
    return set_error(LEL_COUNTEREXAMPLE, "conjecture scan did not verify");
  });
}

const char* lel_report_name(const lel_report* r) { return r ? r->name.c_str() : ""; }
int lel_report_passed(const lel_report* r) { return r && r->passed ? 1 : 0; }
size_t lel_report_checks(const lel_report* r) { return r ? r->checks.size() : 0; }

lel_status lel_report_check(const lel_report* r, size_t i, lel_check_info* out) {
  if (!r || !out || i >= r->checks.size()) return set_error(LEL_INVALID_INPUT, "check index out of range");
  const StoredCheck& c = r->checks[i];
  out->name = c.name.c_str();
  out->theorem_id = c.theorem_id.c_str();
  out->range_checked = c.range.c_str();
  out->status = c.status.c_str();
  out->has_index = c.index ? 1 : 0;
  out->counterexample_index = c.index.value_or(0);
  out->note = c.note.c_str();
  out->seconds = c.seconds;
  out->witness_count = c.witness.size();
  return LEL_OK;
}

const char* lel_report_witness(const lel_report* r, size_t check, size_t i) {
  if (!r || check >= r->checks.size() || i >= r->checks[check].witness.size()) return nullptr;
  return r->checks[check].witness[i].c_str();
}

size_t lel_report_param_count(const lel_report* r) { return r ? r->params.size() : 0; }
const char* lel_report_param(const lel_report* r, size_t i) {
  return r && i < r->params.size() ? r->params[i].c_str() : nullptr;
}

void lel_report_free(lel_report* r) { delete r; }

}  // extern "C"
