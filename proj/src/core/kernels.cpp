#include "lehmer/kernels.hpp"

#include <vector>

#include "lehmer/combinatorics.hpp"

namespace lehmer::kernels {
namespace {

// binom3[r][i] = binom(3r, 3i), pointing into the memoized rows.
std::vector<std::vector<const mpz_class*>> binomial3_table(unsigned n) {
  std::vector<std::vector<const mpz_class*>> table(n + 1);
  for (unsigned r = 0; r <= n; ++r) {
    auto row = binomial_row(3 * r);
    table[r].resize(r + 1);
    for (unsigned i = 0; i <= r; ++i) table[r][i] = &row[3 * i].mpz();
  }
  return table;
}

}  // namespace

ArbInt composition_sum(unsigned n, unsigned min_part, unsigned max_part) {
  // A composition i_1..i_k of n contributes (-1)^k (3n)! / prod (3 i_j)!,
  // which is the product of binom(3 R_j, 3 i_j) over its parts, R_j being
  // what is left before part j. The last factor is binom(3R, 3R) = 1, so a
  // tuple's value is the prefix product over its first k-1 parts.
  const auto binom3 = binomial3_table(n);

  std::vector<mpz_class> prefix(n + 1);  // prefix[d]: product over parts < d
  std::vector<unsigned> rest(n + 1);     // rest[d]: remainder before part d
  prefix[0] = 1;
  rest[0] = n;
  std::size_t valid = 1;  // prefix/rest entries [0, valid) are current

  mpz_class even, odd;
  CompositionStream stream(n, min_part, max_part);
  while (stream.next()) {
    auto parts = stream.current();
    const std::size_t k = parts.size();
    if (valid > stream.stable_prefix() + 1) valid = stream.stable_prefix() + 1;
    for (std::size_t d = valid - 1; d + 1 < k; ++d) {
      mpz_mul(prefix[d + 1].get_mpz_t(), prefix[d].get_mpz_t(),
              binom3[rest[d]][parts[d]]->get_mpz_t());
      rest[d + 1] = rest[d] - parts[d];
    }
    if (k > valid) valid = k;
    mpz_class& acc = (k % 2 == 0) ? even : odd;
    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), prefix[k - 1].get_mpz_t());
  }
  return ArbInt(mpz_class(even - odd));
}

ArbInt partition_sum(unsigned n, unsigned min_part, unsigned max_part) {
  // For a multiplicity vector t with K parts the term is
  //   (-1)^K K! * (3n)! / prod_l (t_l! (3l)!^{t_l}).
  // The quotient Q(t) is the number of ways to split 3n labelled items into
  // the blocks described by t, built level by level (largest part first) as
  //   prod binom(R, 3 l t_l) * (3 l t_l)! / ((3l)!^{t_l} t_l!).
  // Q is summed per K; the K! weights are applied once at the end.
  const unsigned hi = (max_part == kUnbounded || max_part > n) ? n : max_part;

  // split[l][t] = (3lt)! / ((3l)!^t t!)
  std::vector<std::vector<mpz_class>> split(hi + 1);
  for (unsigned l = 1; l <= hi; ++l) {
    split[l].resize(n / l + 1);
    for (unsigned t = 0; t <= n / l; ++t) {
      ArbInt den = pow(factorial(3 * l), t) * factorial(t);
      split[l][t] = divexact(factorial(3 * l * t), den).mpz();
    }
  }

  struct Level {
    unsigned part;
    unsigned rest_after;  // remaining size (units of 1) below this level
    unsigned count;       // parts so far, including this level
    mpz_class q;
  };
  std::vector<Level> stack;
  stack.reserve(hi + 1);
  std::vector<mpz_class> by_count(n + 1);
  const mpz_class one = 1;
  const auto binom3 = binomial3_table(n);

  PartitionStream stream(n, min_part, max_part);
  while (stream.next()) {
    auto mult = stream.current();
    const unsigned changed = stream.changed_part();
    while (!stack.empty() && stack.back().part <= changed) stack.pop_back();

    unsigned from = stack.empty() ? hi : changed;
    unsigned rest = stack.empty() ? n : stack.back().rest_after;
    unsigned count = stack.empty() ? 0 : stack.back().count;
    for (unsigned l = from; l >= 1; --l) {
      unsigned t = mult[l - 1];
      if (t == 0) continue;
      Level level{l, rest - l * t, count + t, {}};
      const mpz_class& prev = stack.empty() ? one : stack.back().q;
      mpz_mul(level.q.get_mpz_t(), prev.get_mpz_t(), binom3[rest][l * t]->get_mpz_t());
      mpz_mul(level.q.get_mpz_t(), level.q.get_mpz_t(), split[l][t].get_mpz_t());
      rest = level.rest_after;
      count = level.count;
      stack.push_back(std::move(level));
    }
    mpz_add(by_count[count].get_mpz_t(), by_count[count].get_mpz_t(), stack.back().q.get_mpz_t());
  }

  mpz_class total;
  for (unsigned k = 1; k <= n; ++k) {
    if (by_count[k] == 0) continue;
    mpz_class term = by_count[k] * factorial(k).mpz();
    if (k % 2 == 0) total += term; else total -= term;
  }
  return ArbInt(std::move(total));
}

}  // namespace lehmer::kernels
