#include "lehmer/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "lehmer/error.hpp"

namespace lehmer {
namespace {

class FactorialTable {
 public:
  const ArbInt& get(unsigned n) {
    {
      std::shared_lock lock(mu_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mu_);
    while (values_.size() <= n) {
      values_.push_back(values_.back() * ArbInt(values_.size()));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mu_;
  std::deque<ArbInt> values_{ArbInt(1)};  // deque: references survive growth
};

class BinomialRows {
 public:
  std::span<const ArbInt> get(unsigned n) {
    {
      std::shared_lock lock(mu_);
      if (auto it = rows_.find(n); it != rows_.end()) return *it->second;
    }
    auto row = std::make_unique<std::vector<ArbInt>>();
    row->reserve(n + 1);
    mpz_class c = 1;
    for (unsigned k = 0; k <= n; ++k) {
      row->emplace_back(c);
      c *= n - k;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1);
    }
    std::unique_lock lock(mu_);
    // A concurrent writer may have won; its row is identical.
    auto [it, inserted] = rows_.try_emplace(n, std::move(row));
    return *it->second;
  }

 private:
  std::shared_mutex mu_;
  std::unordered_map<unsigned, std::unique_ptr<const std::vector<ArbInt>>> rows_;
};

FactorialTable& factorials() {
  static FactorialTable table;
  return table;
}

BinomialRows& binomial_rows() {
  static BinomialRows rows;
  return rows;
}

const ArbInt kZero{0};

}  // namespace

const ArbInt& factorial(unsigned n) { return factorials().get(n); }

const ArbInt& binomial(unsigned n, unsigned k) {
  if (k > n) return kZero;
  return binomial_rows().get(n)[k];
}

std::span<const ArbInt> binomial_row(unsigned n) { return binomial_rows().get(n); }

ArbInt multinomial(std::span<const unsigned> parts) {
  unsigned total = std::accumulate(parts.begin(), parts.end(), 0U);
  ArbInt den(1);
  for (unsigned p : parts) {
    if (p > 1) den *= factorial(p);
  }
  return divexact(factorial(total), den);
}

ArbInt partition_count(unsigned n) {
  std::vector<ArbInt> p(n + 1, ArbInt(0));
  p[0] = ArbInt(1);
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned s = part; s <= n; ++s) p[s] += p[s - part];
  }
  return p[n];
}

// ---------------------------------------------------------------------------

CompositionStream::CompositionStream(unsigned n, unsigned min_part, unsigned max_part)
    : n_(n), min_(min_part), max_(max_part == kUnbounded ? n : max_part) {
  if (min_part == 0) throw InvalidInput("compositions: min_part must be positive");
  if (max_part != kUnbounded && max_part < min_part) {
    throw InvalidInput("compositions: max_part < min_part");
  }
  parts_.reserve(n);
  // r is reachable iff r == 0 or some k >= 1 has k*min <= r <= k*max.
  feasible_.resize(n + 1);
  feasible_[0] = 1;
  for (unsigned r = 1; r <= n; ++r) {
    feasible_[r] = r >= min_ && (r + max_ - 1) / max_ <= r / min_;
  }
}

bool CompositionStream::fill_minimal() {
  while (remaining_ > 0) {
    unsigned top = std::min(max_, remaining_);
    unsigned p = min_;
    while (p <= top && !feasible_[remaining_ - p]) ++p;
    if (p > top) return false;
    parts_.push_back(p);
    remaining_ -= p;
  }
  return true;
}

bool CompositionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    remaining_ = n_;
    stable_ = 0;
    if (n_ == 0 || !feasible_[n_] || !fill_minimal()) {
      done_ = true;
      return false;
    }
    return true;
  }
  while (!parts_.empty()) {
    unsigned x = parts_.back();
    parts_.pop_back();
    remaining_ += x;
    unsigned top = std::min(max_, remaining_);
    for (unsigned p = x + 1; p <= top; ++p) {
      if (feasible_[remaining_ - p]) {
        stable_ = parts_.size();
        parts_.push_back(p);
        remaining_ -= p;
        fill_minimal();
        return true;
      }
    }
  }
  done_ = true;
  return false;
}

// ---------------------------------------------------------------------------

PartitionStream::PartitionStream(unsigned n, unsigned min_part, unsigned max_part)
    : n_(n), lo_(min_part), hi_(std::min(n, max_part == kUnbounded ? n : max_part)), mult_(n, 0) {
  if (min_part == 0) throw InvalidInput("partitions: min_part must be positive");
}

bool PartitionStream::refill(unsigned from) {
  // Parts in (lo, from) are refilled greedily; whatever is left must be a
  // multiple of lo.
  unsigned rest = n_;
  for (unsigned l = from; l <= hi_; ++l) rest -= l * mult_[l - 1];
  for (unsigned l = from - 1; l > lo_; --l) {
    mult_[l - 1] = rest / l;
    rest -= l * mult_[l - 1];
  }
  if (rest % lo_ != 0) {
    mult_[lo_ - 1] = 0;
    return false;
  }
  mult_[lo_ - 1] = rest / lo_;
  return true;
}

bool PartitionStream::next() {
  if (done_) return false;
  if (hi_ < lo_ || n_ == 0) {
    done_ = true;
    return false;
  }
  unsigned changed = 0;
  if (!started_) {
    started_ = true;
    changed = hi_;
    if (refill(hi_ + 1)) {
      changed_ = changed;
      return true;
    }
  }
  for (;;) {
    unsigned l = lo_ + 1;
    while (l <= hi_ && mult_[l - 1] == 0) ++l;
    if (l > hi_) {
      done_ = true;
      return false;
    }
    --mult_[l - 1];
    changed = std::max(changed, l);
    if (refill(l)) {
      changed_ = changed;
      return true;
    }
  }
}

std::vector<std::vector<unsigned>> compositions(unsigned n, unsigned min_part, unsigned max_part) {
  std::vector<std::vector<unsigned>> out;
  CompositionStream s(n, min_part, max_part);
  while (s.next()) out.emplace_back(s.current().begin(), s.current().end());
  return out;
}

std::vector<std::vector<unsigned>> partitions_multiplicity(unsigned n, unsigned min_part,
                                                           unsigned max_part) {
  std::vector<std::vector<unsigned>> out;
  PartitionStream s(n, min_part, max_part);
  while (s.next()) out.emplace_back(s.current().begin(), s.current().end());
  return out;
}

}  // namespace lehmer
