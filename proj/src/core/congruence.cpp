#include "lehmer/congruence.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "lehmer/combinatorics.hpp"
#include "lehmer/eisenstein.hpp"
#include "lehmer/error.hpp"

namespace lehmer {

std::string_view status_name(CongruenceReport::Status s) {
  switch (s) {
    case CongruenceReport::Status::kVerified: return "verified";
    case CongruenceReport::Status::kCounterexample: return "counterexample";
    case CongruenceReport::Status::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Least non-negative residue of a small signed value.
u64 norm(long long v, u64 m) {
  long long r = v % static_cast<long long>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<long long>(m) : r);
}

long long sg(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

std::string kv(const std::string& key, const std::string& value) { return key + "=" + value; }
std::string kv(const std::string& key, u64 value) { return kv(key, std::to_string(value)); }

CongruenceReport make_report(std::string id, std::string range) {
  CongruenceReport r;
  r.theorem_id = std::move(id);
  r.range_checked = std::move(range);
  return r;
}

void fail(CongruenceReport& r, u64 index, std::vector<std::string> witness) {
  r.status = CongruenceReport::Status::kCounterexample;
  r.counterexample_index = index;
  r.witness = std::move(witness);
}

void require_offsets(unsigned n, unsigned offset, unsigned extra) {
  if (n < 1) throw InvalidInput("roots-of-unity sum needs n >= 1");
  if (offset > 2 || extra > 2) throw InvalidInput("offset and extra must be 0, 1 or 2");
}

// x(n) = - sum_{k<n} binom(step*n, step*k) x(k)  (mod m), x(0) = 1.
std::vector<u64> sectioned_residues(std::size_t count, unsigned step, u64 m) {
  if (m == 0) throw InvalidInput("modulus must be positive");
  std::vector<u64> x;
  x.reserve(count);
  if (count == 0) return x;
  x.push_back(1 % m);
  std::vector<u64> row{1 % m};  // Pascal row, updated in place
  for (std::size_t n = 1; n < count; ++n) {
    std::size_t target = step * n;
    while (row.size() <= target) {
      row.push_back(row.front());  // binom(r, r) = 1
      for (std::size_t k = row.size() - 2; k >= 1; --k) {
        u64 s = row[k] + row[k - 1];
        row[k] = s >= m ? s - m : s;
      }
    }
    u64 acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      acc = (acc + mulmod(row[step * k], x[k], m)) % m;
    }
    x.push_back(acc == 0 ? 0 : m - acc);
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lucas

bool is_prime(u64 p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (u64 d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

// binom(a, b) mod p for 0 <= b <= a < p, p prime.
u64 small_binom_mod(u64 a, u64 b, u64 p) {
  b = std::min(b, a - b);
  u64 num = 1 % p, den = 1 % p;
  for (u64 i = 0; i < b; ++i) {
    num = mulmod(num, a - i, p);
    den = mulmod(den, i + 1, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

u64 binom_mod_prime(const ArbInt& m, const ArbInt& n, u64 p) {
  if (p > 0xffffffffULL) throw InvalidInput("prime modulus must be below 2^32");
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (m.sign() < 0 || n.sign() < 0) throw InvalidInput("binomial arguments must be non-negative");
  if (n > m) return 0;
  mpz_class mm = m.mpz(), nn = n.mpz();
  u64 result = 1 % p;
  while (sgn(mm) > 0 || sgn(nn) > 0) {
    u64 mi = mpz_fdiv_q_ui(mm.get_mpz_t(), mm.get_mpz_t(), p);
    u64 ni = mpz_fdiv_q_ui(nn.get_mpz_t(), nn.get_mpz_t(), p);
    if (ni > mi) return 0;
    result = mulmod(result, small_binom_mod(mi, ni, p), p);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Roots-of-unity sums

ArbInt rou_binomial_sum_direct(unsigned n, unsigned offset, unsigned extra) {
  require_offsets(n, offset, extra);
  unsigned top = 3 * n + extra;
  ArbInt sum;
  for (unsigned j = offset; j <= top; j += 3) {
    if (j % 2 == 0) {
      sum += binomial(top, j);
    } else {
      sum -= binomial(top, j);
    }
  }
  return sum;
}

ArbInt rou_binomial_sum_closed(unsigned n, unsigned offset, unsigned extra) {
  require_offsets(n, offset, extra);
  using E = EisensteinInt;
  const E w = E::omega();
  const E w2 = E::omega_squared();
  const E s3 = E::sqrt_minus_three();
  // j = 0 contributes (1 - 1)^{3n+e} = 0 since 3n + e >= 3.
  E a = pow(w, (3 - offset) % 3) * pow(E(Rat(1)) - w, extra) * pow(s3 * Rat(-3), n);
  E b = pow(w2, (3 - offset) % 3) * pow(E(Rat(1)) - w2, extra) * pow(s3 * Rat(3), n);
  E total = (a + b) * Rat(1, 3);
  if (!total.is_rational() || !total.real_part().is_integer()) {
    throw ConsistencyError("closed form did not reduce to an integer");
  }
  return total.real_part().num();
}

ArbInt rou_binomial_sum_parity(unsigned n, unsigned offset, unsigned extra) {
  require_offsets(n, offset, extra);
  // Coefficient by n mod 4 in the order 1, 2, 3, 0.
  static constexpr std::array<std::array<std::array<int, 4>, 3>, 3> kCoeff{{
      {{{0, -2, 0, 2}, {-1, -1, 1, 1}, {-1, -1, 1, 1}}},
      {{{-1, 1, 1, -1}, {-1, 1, 1, -1}, {0, 2, 0, -2}}},
      {{{1, 1, -1, -1}, {2, 0, -2, 0}, {1, -1, -1, 1}}},
  }};
  int c = kCoeff[offset][extra][(n + 3) % 4];
  unsigned e;
  if (n % 2 == 1) {
    e = extra == 2 ? (3 * n + 1) / 2 : (3 * n - 1) / 2;
  } else {
    e = extra == 0 ? 3 * n / 2 - 1 : 3 * n / 2;
  }
  return ArbInt(c) * pow(ArbInt(3), e);
}

ArbInt rou_binomial_sum(unsigned n, unsigned offset, unsigned extra) {
  ArbInt direct = rou_binomial_sum_direct(n, offset, extra);
  ArbInt closed = rou_binomial_sum_closed(n, offset, extra);
  if (direct != closed) {
    throw ConsistencyError("roots-of-unity sum (" + std::to_string(n) + "," +
                           std::to_string(offset) + "," + std::to_string(extra) +
                           "): direct " + direct.str() + " vs closed " + closed.str());
  }
  return direct;
}

// ---------------------------------------------------------------------------
// Residues

std::vector<u64> w_residues(std::size_t count, u64 modulus) {
  return sectioned_residues(count, 3, modulus);
}

std::vector<u64> e_residues(std::size_t count, u64 modulus) {
  return sectioned_residues(count, 2, modulus);
}

std::vector<u64> reduce(std::span<const ArbInt> values, u64 modulus) {
  if (modulus == 0) throw InvalidInput("modulus must be positive");
  std::vector<u64> out;
  out.reserve(values.size());
  for (const ArbInt& v : values) out.push_back(v.mod_u64(modulus));
  return out;
}

u64 pow_u64(u64 base, unsigned exponent) {
  u64 r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw InvalidInput("power overflows 64 bits");
    r *= base;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Theorems

namespace {

std::string raw_range(std::size_t count) {
  return "W_{3n}, 0 <= n < " + std::to_string(count) + " (raw index <= " +
         std::to_string(3 * (count == 0 ? 0 : count - 1)) + ")";
}

// Checks w[i] == expected(i) mod m for every i; first failure wins.
template <typename Expected>
bool check_track(CongruenceReport& r, const WTable& w, u64 m, const std::string& label,
                 Expected expected) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::optional<long long> want = expected(i);
    if (!want) continue;
    u64 got = w[i].mod_u64(m);
    if (got != norm(*want, m)) {
      fail(r, 3 * i,
           {kv("statement", label), kv("index", 3 * i), kv("W", w[i].str()),
            kv("modulus", m), kv("residue", got), kv("expected", norm(*want, m))});
      return false;
    }
  }
  return true;
}

}  // namespace

CongruenceReport verify_mod9(const WTable& w) {
  CongruenceReport r = make_report("mod9", raw_range(w.size()));
  r.note = "W_{3n} == (-1)^n (mod 9)";
  check_track(r, w, 9, "W_{3n} == (-1)^n",
              [](std::size_t i) -> std::optional<long long> { return sg(i); });
  return r;
}

CongruenceReport verify_mod9(std::size_t count) {
  if (count < 1) throw InvalidInput("range must be at least 1");
  return verify_mod9(w_recurrence(count));
}

CongruenceReport verify_mod27(const WTable& w) {
  CongruenceReport r = make_report("mod27", raw_range(w.size()));
  r.note = "three tracks 9n, 9n+3, 9n+6 and six residues of 18m+j";
  // W_{9n}, W_{9n+3}, W_{9n+6}: i = 3n + t.
  static constexpr std::array<long long, 3> kTrack{1, -1, -8};
  static constexpr std::array<const char*, 3> kTrackName{
      "W_{9n} == (-1)^n", "W_{9n+3} == (-1)^{n-1}", "W_{9n+6} == 8(-1)^{n-1}"};
  for (std::size_t t = 0; t < 3; ++t) {
    bool ok = check_track(r, w, 27, kTrackName[t], [t](std::size_t i) -> std::optional<long long> {
      if (i % 3 != t) return std::nullopt;
      return kTrack[t] * sg(i / 3);
    });
    if (!ok) return r;
  }
  // W_{18m+j}, j = 0, 3, ..., 15: i = 6m + j/3.
  static constexpr std::array<long long, 6> kPeriodic{1, -1, -8, -1, 1, 8};
  for (std::size_t j = 0; j < 6; ++j) {
    std::string label = "W_{18m+" + std::to_string(3 * j) + "} == " + std::to_string(kPeriodic[j]);
    bool ok = check_track(r, w, 27, label, [j](std::size_t i) -> std::optional<long long> {
      if (i % 6 != j) return std::nullopt;
      return kPeriodic[j];
    });
    if (!ok) return r;
  }
  return r;
}

CongruenceReport verify_mod27(std::size_t count) {
  if (count < 1) throw InvalidInput("range must be at least 1");
  return verify_mod27(w_recurrence(count));
}

std::vector<std::uint32_t> mod27_track_valuations(const WTable& w) {
  static constexpr std::array<long long, 3> kTrack{1, -1, -8};
  std::vector<std::uint32_t> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    mpz_class d = w[i].mpz() - static_cast<long>(kTrack[i % 3] * sg(i / 3));
    if (d == 0) {
      out.push_back(UINT32_MAX);
      continue;
    }
    mpz_class three = 3;
    out.push_back(static_cast<std::uint32_t>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), three.get_mpz_t())));
  }
  return out;
}

namespace {

// sum_{k=0}^{upper} binom(27n, 27k + offset) (-1)^{k + shift} * factor, with
// the nonzero values expected mod 81 (every other n gives 0).
struct CaseTable {
  unsigned offset;
  bool upper_is_n;  // upper limit n, otherwise n - 1
  unsigned shift;
  long long factor;
  std::map<unsigned, long long> cases;
};

const std::array<CaseTable, 9>& case_tables() {
  static const std::array<CaseTable, 9> kTables{{
      {0, true, 0, 1, {{2, -18}}},
      {3, false, 1, 1, {{1, -9}}},
      {6, true, 0, 19, {{1, 36}}},
      {9, false, 0, 26, {{1, -3}, {2, 9}}},
      {12, true, 0, 28, {{1, 45}}},
      {15, false, 1, 19, {{1, 36}}},
      {18, true, 0, 28, {{1, 3}, {2, 9}}},
      {21, false, 0, 26, {{1, -36}}},
      {24, false, 0, 19, {{1, 9}}},
  }};
  return kTables;
}

u64 case_sum_mod81(const CaseTable& t, unsigned n) {
  long long upper = t.upper_is_n ? n : static_cast<long long>(n) - 1;
  ArbInt sum;
  for (long long k = 0; k <= upper; ++k) {
    const ArbInt& b = binomial(27 * n, static_cast<unsigned>(27 * k + t.offset));
    if ((k + t.shift) % 2 == 0) {
      sum += b;
    } else {
      sum -= b;
    }
  }
  return (sum * ArbInt(t.factor)).mod_u64(81);
}

}  // namespace

CongruenceReport verify_mod81_cases(const WTable& w, unsigned table_upto) {
  CongruenceReport r = make_report("mod81", raw_range(w.size()) + "; case tables 1 <= n <= " +
                                  std::to_string(table_upto));
  r.note = "nine classes W_{27n+j} mod 81 and nine binomial-sum case tables";
  static constexpr std::array<long long, 9> kClass{1, -1, 19, 26, 28, -19, 28, 26, 19};
  for (std::size_t c = 0; c < 9; ++c) {
    std::string label = "W_{27n+" + std::to_string(3 * c) + "} == (-1)^n " +
                        std::to_string(kClass[c]);
    bool ok = check_track(r, w, 81, label, [c](std::size_t i) -> std::optional<long long> {
      if (i % 9 != c) return std::nullopt;
      return kClass[c] * sg(i / 9);
    });
    if (!ok) return r;
  }
  for (const CaseTable& t : case_tables()) {
    for (unsigned n = 1; n <= table_upto; ++n) {
      auto it = t.cases.find(n);
      u64 want = norm(it == t.cases.end() ? 0 : it->second, 81);
      u64 got = case_sum_mod81(t, n);
      if (got != want) {
        fail(r, n,
             {kv("statement", "case table offset " + std::to_string(t.offset)), kv("n", n),
              kv("residue", got), kv("expected", want)});
        return r;
      }
    }
  }
  return r;
}

CongruenceReport verify_mod81_cases(std::size_t count, unsigned table_upto) {
  if (count < 3) throw InvalidInput("range must be at least 3");
  return verify_mod81_cases(w_recurrence(count), table_upto);
}

// ---------------------------------------------------------------------------
// Cycles

CycleDetection detect_cycle(std::span<const u64> residues, u64 modulus,
                            std::size_t min_pre_period) {
  CycleDetection d;
  d.scanned = residues.size();
  d.cycle.modulus = modulus;
  const std::size_t n = residues.size();
  for (std::size_t len = 1; min_pre_period + 3 * len <= n; ++len) {
    std::size_t pre = min_pre_period;
    for (std::size_t i = n - len; i-- > 0;) {
      if (residues[i] != residues[i + len]) {
        pre = std::max(pre, i + 1);
        break;
      }
    }
    if (n - pre < 3 * len) continue;
    d.confirmed = true;
    d.cycle.pre_period.assign(residues.begin(), residues.begin() + pre);
    d.cycle.period.assign(residues.begin() + pre, residues.begin() + pre + len);
    return d;
  }
  return d;
}

std::size_t default_cycle_scan(unsigned k) {
  std::size_t expected = k >= 2 ? 2 * pow_u64(3, k - 2) : 2;
  return 1 + 4 * expected;
}

CycleDetection residue_cycle(unsigned k, std::size_t count) {
  if (k < 1) throw InvalidInput("power k must be at least 1");
  if (k > 39) throw InvalidInput("power k must be at most 39");
  u64 m = pow_u64(3, k);
  std::vector<u64> r = w_residues(count, m);
  return detect_cycle(r, m, 1);
}

bool palindrome_check(const ResidueCycle& cycle) {
  const auto& p = cycle.period;
  auto is_pal = [](auto first, auto last) { return std::equal(first, last, std::reverse_iterator(last)); };
  if (p.size() % 2 == 1) return is_pal(p.begin(), p.end());
  auto mid = p.begin() + static_cast<std::ptrdiff_t>(p.size() / 2);
  return is_pal(p.begin(), mid) && is_pal(mid, p.end());
}

// ---------------------------------------------------------------------------
// Conjecture and Stern

CongruenceReport scan_conjecture_residues(unsigned k, std::span<const u64> residues,
                                          std::size_t resume_from) {
  if (k < 1) throw InvalidInput("power k must be at least 1");
  const u64 classes = 2 * pow_u64(3, k - 1);
  const u64 m = pow_u64(3, k + 1);
  CongruenceReport r = make_report("conjecture",
                     "W_{3n} mod " + std::to_string(m) + ", 0 <= n < " +
                         std::to_string(residues.size()));
  r.note = "3n == 3m (mod " + std::to_string(3 * classes) + ") checked as n == m (mod " +
           std::to_string(classes) + ")";
  if (residues.size() <= classes) {
    r.status = CongruenceReport::Status::kInconclusive;
    r.note += "; scan shorter than one class period";
    return r;
  }
  for (std::size_t n = std::max<std::size_t>(resume_from, classes); n < residues.size(); ++n) {
    std::size_t rep = n % classes;
    if (residues[n] != residues[rep]) {
      fail(r, n,
           {kv("n", n), kv("m", rep), kv("modulus", m), kv("W_3n_mod", residues[n]),
            kv("W_3m_mod", residues[rep])});
      return r;
    }
  }
  return r;
}

CongruenceReport scan_conjecture(unsigned k, std::size_t count, std::size_t resume_from) {
  if (k < 1) throw InvalidInput("power k must be at least 1");
  if (k > 38) throw InvalidInput("power k must be at most 38");
  std::vector<u64> res = w_residues(count, pow_u64(3, k + 1));
  return scan_conjecture_residues(k, res, resume_from);
}

CongruenceReport stern_check(unsigned k, std::span<const u64> res) {
  if (k < 1) throw InvalidInput("power k must be at least 1");
  const u64 m = pow_u64(2, k);
  CongruenceReport r = make_report("stern", "E_{2n} mod " + std::to_string(m) + ", 0 <= n, m < " +
                                  std::to_string(res.size()));
  r.note = "both directions over all pairs";
  for (std::size_t a = 0; a < res.size(); ++a) {
    for (std::size_t b = a + 1; b < res.size(); ++b) {
      bool values = res[a] == res[b];
      bool indices = (2 * a) % m == (2 * b) % m;
      if (values != indices) {
        fail(r, b,
             {kv("n", a), kv("m", b), kv("modulus", m), kv("E_2n_mod", res[a]),
              kv("E_2m_mod", res[b]),
              kv("direction", values ? "values agree, indices differ"
                                     : "indices agree, values differ")});
        return r;
      }
    }
  }
  return r;
}

CongruenceReport stern_check(unsigned k, std::size_t count) {
  if (k < 1) throw InvalidInput("power k must be at least 1");
  if (k > 63) throw InvalidInput("power k must be at most 63");
  std::vector<u64> res = e_residues(count, pow_u64(2, k));
  return stern_check(k, res);
}

}  // namespace lehmer
