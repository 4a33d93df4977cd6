#include "lehmer/hessenberg.hpp"

#include <algorithm>
#include <string>

#include "lehmer/error.hpp"

namespace lehmer {

LowerHessenberg::LowerHessenberg(std::size_t n) : n_(n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += std::min(i + 2, n);
  entries_.resize(count);
}

LowerHessenberg::LowerHessenberg(std::size_t n,
                                 const std::function<Rat(std::size_t, std::size_t)>& entry)
    : LowerHessenberg(n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= std::min(i + 1, n - 1); ++j) set(i, j, entry(i, j));
  }
}

LowerHessenberg LowerHessenberg::toeplitz(std::size_t n, const std::vector<Rat>& band,
                                          const Rat& super) {
  if (band.size() < n) throw InvalidInput("toeplitz: band shorter than dimension");
  return LowerHessenberg(n, [&](std::size_t i, std::size_t j) {
    return j == i + 1 ? super : band[i - j];
  });
}

std::size_t LowerHessenberg::offset(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_ || j > i + 1) {
    throw InvalidInput("hessenberg: entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") outside the stored band");
  }
  // Rows 0..i-1 store min(r+2, n) entries each.
  std::size_t base = 0;
  if (i > 0) {
    std::size_t full = std::min(i, n_ - 1);  // rows r < n-1 store r+2 entries
    base = full * (full + 3) / 2;
    if (i > full) base += (i - full) * n_;
  }
  return base + j;
}

const Rat& LowerHessenberg::at(std::size_t i, std::size_t j) const {
  return entries_[offset(i, j)];
}

void LowerHessenberg::set(std::size_t i, std::size_t j, Rat value) {
  entries_[offset(i, j)] = std::move(value);
}

Rat hessenberg_det(const LowerHessenberg& m) {
  const std::size_t n = m.size();
  std::vector<Rat> minors(n + 1);
  minors[0] = Rat(1);
  for (std::size_t k = 1; k <= n; ++k) {
    // Walk j downward so the superdiagonal product grows incrementally.
    Rat acc;
    Rat super_prod(1);
    bool negative = false;
    for (std::size_t j = k; j >= 1; --j) {
      const Rat& a = m.at(k - 1, j - 1);
      if (!a.is_zero() && !super_prod.is_zero()) {
        Rat term = a * super_prod * minors[j - 1];
        if (negative) acc -= term; else acc += term;
      }
      if (j > 1) super_prod *= m.at(j - 2, j - 1);
      negative = !negative;
    }
    minors[k] = std::move(acc);
  }
  return minors[n];
}

}  // namespace lehmer
