#pragma once

// Congruences of W_{3n} modulo powers of three and of E_{2n} modulo powers
// of two: the mod 9 / 27 / 81 theorems, Lucas's theorem, the
// roots-of-unity binomial sums behind them, residue cycles, and a scanner
// for the periodicity conjecture
//   n == m (mod 2*3^{k-1})  =>  W_{3n} == W_{3m} (mod 3^{k+1}).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lehmer/arb.hpp"
#include "lehmer/lehmer_euler.hpp"

namespace lehmer {

struct CongruenceReport {
  enum class Status { kVerified, kCounterexample, kInconclusive };

  std::string theorem_id;
  std::string range_checked;
  Status status = Status::kVerified;
  std::optional<std::uint64_t> counterexample_index;
  std::vector<std::string> witness;  // "name=value" pairs reproducing the failure
  std::string note;

  bool verified() const { return status == Status::kVerified; }
};

std::string_view status_name(CongruenceReport::Status s);

// ---------------------------------------------------------------------------
// Binomial coefficients mod p and roots-of-unity sums

// Trial division; adequate for the small moduli used here.
bool is_prime(std::uint64_t p);

// binom(m, n) mod p via base-p digits (Lucas). Throws InvalidInput when p
// is not prime or m, n are negative.
std::uint64_t binom_mod_prime(const ArbInt& m, const ArbInt& n, std::uint64_t p);

// S(n, o, e) = sum_k binom(3n+e, 3k+o) (-1)^{3k+o}, o, e in {0,1,2}, n >= 1.
ArbInt rou_binomial_sum_direct(unsigned n, unsigned offset, unsigned extra);
// (1/3) sum_j w^{-jo} (1 - w^j)^{3n+e} evaluated through
// (1-w)^3 = -3 sqrt(-3) and (1-w^2)^3 = 3 sqrt(-3) in Eisenstein arithmetic.
ArbInt rou_binomial_sum_closed(unsigned n, unsigned offset, unsigned extra);
// The same value as +-c * 3^e(n) with the sign/coefficient read off n mod 4.
ArbInt rou_binomial_sum_parity(unsigned n, unsigned offset, unsigned extra);
// Direct value, after checking the closed form agrees (ConsistencyError
// otherwise).
ArbInt rou_binomial_sum(unsigned n, unsigned offset, unsigned extra);

// ---------------------------------------------------------------------------
// Residues

// W_{3n} mod `modulus` for n < count, by the recurrence run in machine
// arithmetic (binomials from Pascal's rule mod modulus).
std::vector<std::uint64_t> w_residues(std::size_t count, std::uint64_t modulus);
// E_{2n} mod `modulus` likewise.
std::vector<std::uint64_t> e_residues(std::size_t count, std::uint64_t modulus);
// Least non-negative residues of exact values.
std::vector<std::uint64_t> reduce(std::span<const ArbInt> values, std::uint64_t modulus);

std::uint64_t pow_u64(std::uint64_t base, unsigned exponent);

// ---------------------------------------------------------------------------
// Theorems

// W_{3n} == (-1)^n (mod 9) for n < count.
CongruenceReport verify_mod9(std::size_t count);
CongruenceReport verify_mod9(const WTable& w);

// W_{9n} == (-1)^n, W_{9n+3} == (-1)^{n-1}, W_{9n+6} == 8(-1)^{n-1} (mod 27),
// and the six 18-periodic residues, for every raw index 3i with i < count.
CongruenceReport verify_mod27(std::size_t count);
CongruenceReport verify_mod27(const WTable& w);

// Exploratory: for each raw index 3i, the 3-adic valuation of
// W_{3i} - c(i) with c the mod 27 track value (1, -1 or -8 times (-1)^n).
// Large values show where a track holds to a higher power of three. Zero
// differences are reported as UINT32_MAX.
std::vector<std::uint32_t> mod27_track_valuations(const WTable& w);

// The nine residue classes of W_{27n+j} mod 81, plus the nine binomial-sum
// case tables for 1 <= n <= table_upto, recomputed mod 81.
CongruenceReport verify_mod81_cases(std::size_t count, unsigned table_upto = 10);
CongruenceReport verify_mod81_cases(const WTable& w, unsigned table_upto = 10);

// ---------------------------------------------------------------------------
// Cycles

struct ResidueCycle {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> pre_period;
  std::vector<std::uint64_t> period;
};

struct CycleDetection {
  bool confirmed = false;  // false: scan too short to confirm any period
  ResidueCycle cycle;
  std::size_t scanned = 0;
};

// Smallest period L (then smallest pre-period p >= min_pre_period) such
// that r_i = r_{i+L} for all i >= p in the scan and the periodic part
// covers at least three periods.
CycleDetection detect_cycle(std::span<const std::uint64_t> residues, std::uint64_t modulus,
                            std::size_t min_pre_period = 1);

// W_{3n} mod 3^k for n < count. The n = 0 term is always reported as the
// pre-period.
CycleDetection residue_cycle(unsigned k, std::size_t count);
// Scan length covering four of the expected periods 2*3^{k-2}.
std::size_t default_cycle_scan(unsigned k);

// Even period: both halves palindromic. Odd period: the whole period is.
bool palindrome_check(const ResidueCycle& cycle);

// ---------------------------------------------------------------------------
// Conjecture and Stern

// Residues must be W_{3n} mod 3^{k+1}. Classes n mod 2*3^{k-1} are checked
// for constancy; indices below resume_from are taken as already verified.
CongruenceReport scan_conjecture_residues(unsigned k, std::span<const std::uint64_t> residues,
                                          std::size_t resume_from = 0);
CongruenceReport scan_conjecture(unsigned k, std::size_t count, std::size_t resume_from = 0);

// E_{2n} == E_{2m} (mod 2^k)  <=>  2n == 2m (mod 2^k), all n, m < count.
CongruenceReport stern_check(unsigned k, std::size_t count);
CongruenceReport stern_check(unsigned k, std::span<const std::uint64_t> e_residues_mod_2k);

}  // namespace lehmer
