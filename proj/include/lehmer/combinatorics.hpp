#pragma once

// Memoized factorials and binomial rows, multinomial coefficients, and the
// composition / partition streams the explicit formulas sum over.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lehmer/arb.hpp"

namespace lehmer {

// n!, memoized in a process-wide grow-only table. The returned reference
// stays valid for the lifetime of the process. Thread-safe.
const ArbInt& factorial(unsigned n);

// binom(n, k), zero when k > n. Rows are memoized whole on first use.
const ArbInt& binomial(unsigned n, unsigned k);
// The whole row binom(n, 0..n).
std::span<const ArbInt> binomial_row(unsigned n);

// (sum parts)! / prod(parts!)
ArbInt multinomial(std::span<const unsigned> parts);

// Partition-count oracle p(n) by dynamic programming (used by tests and
// by callers that want to size work up front).
ArbInt partition_count(unsigned n);

// Ordered tuples (i_1, ..., i_k), every length k, each part in
// [min_part, max_part], summing to n, in lexicographic order.
// Iterative; holds O(n) state.
class CompositionStream {
 public:
  static constexpr unsigned kUnbounded = 0;

  CompositionStream(unsigned n, unsigned min_part, unsigned max_part = kUnbounded);

  // Advances to the next tuple; false when exhausted.
  bool next();
  std::span<const unsigned> current() const { return parts_; }
  // Number of leading parts that equal the previous tuple's.
  std::size_t stable_prefix() const { return stable_; }

 private:
  // Extends parts_ from the current remainder with minimal choices.
  bool fill_minimal();

  unsigned n_;
  unsigned min_;
  unsigned max_;
  std::vector<unsigned> parts_;
  std::vector<char> feasible_;  // feasible_[r]: r splits into allowed parts
  unsigned remaining_ = 0;
  std::size_t stable_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Multiplicity vectors (t_1, ..., t_n) with sum l*t_l = n, and t_l = 0
// outside [min_part, max_part]. Index 0 of current() holds t_1.
// Enumerated with the largest part's multiplicity varying slowest.
class PartitionStream {
 public:
  static constexpr unsigned kUnbounded = 0;

  PartitionStream(unsigned n, unsigned min_part, unsigned max_part = kUnbounded);

  bool next();
  std::span<const unsigned> current() const { return mult_; }
  // Largest part size whose multiplicity changed since the previous
  // vector (the top part for the first vector); multiplicities of larger
  // parts are unchanged.
  unsigned changed_part() const { return changed_; }

 private:
  // Greedily refills parts < from, largest first. False when the
  // remainder cannot be represented.
  bool refill(unsigned from);

  unsigned n_;
  unsigned lo_;
  unsigned hi_;
  std::vector<unsigned> mult_;
  unsigned changed_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Convenience collectors used by tests and small callers.
std::vector<std::vector<unsigned>> compositions(unsigned n, unsigned min_part,
                                                unsigned max_part = CompositionStream::kUnbounded);
std::vector<std::vector<unsigned>> partitions_multiplicity(
    unsigned n, unsigned min_part, unsigned max_part = PartitionStream::kUnbounded);

}  // namespace lehmer
