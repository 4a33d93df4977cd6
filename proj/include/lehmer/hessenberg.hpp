#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lehmer/arb.hpp"

namespace lehmer {

// n x n lower Hessenberg matrix: only entries with j <= i + 1 are stored.
// Indices are 0-based; (i, i+1) is the superdiagonal.
class LowerHessenberg {
 public:
  explicit LowerHessenberg(std::size_t n);
  // Builds from a generator called for every stored (i, j).
  LowerHessenberg(std::size_t n, const std::function<Rat(std::size_t, std::size_t)>& entry);

  // Toeplitz shape of the determinant identities: entry (i, j) for j <= i
  // is band[i - j], superdiagonal all `super`.
  static LowerHessenberg toeplitz(std::size_t n, const std::vector<Rat>& band, const Rat& super);

  std::size_t size() const { return n_; }
  // Throws InvalidInput for j > i + 1 or out of range.
  const Rat& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Rat value);

 private:
  std::size_t offset(std::size_t i, std::size_t j) const;

  std::size_t n_;
  std::vector<Rat> entries_;  // row i holds columns 0..min(i+1, n-1)
};

// Leading-minor recurrence
//   D_0 = 1,
//   D_k = sum_{j=1..k} (-1)^{k-j} a[k][j] (prod_{i=j..k-1} a[i][i+1]) D_{j-1}
// (1-based). O(n^2) multiplications, no pivoting.
Rat hessenberg_det(const LowerHessenberg& m);

}  // namespace lehmer
