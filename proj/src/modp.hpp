#pragma once

// Raw-residue kernels for prime fields; hot loops avoid Scalar overhead here.

#include <cstdint>
#include <utility>
#include <vector>

namespace thickrep::modp {

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

/// In-place reduced row echelon form of a row-major rows x cols residue
/// matrix. Returns the rank; pivot columns go to `pivots` when given.
inline std::size_t rref(std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols, std::int64_t p,
                        std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::int64_t s = inv(a[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::int64_t t = a[i * cols + c];
      if (t == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::int64_t v = (a[i * cols + j] - t * a[r * cols + j]) % p;
        a[i * cols + j] = v < 0 ? v + p : v;
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

/// Rank by forward elimination only (destroys the input).
inline std::size_t rank(std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols, std::int64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::int64_t s = inv(a[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t t = a[i * cols + c] * s % p;
      if (t == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::int64_t v = (a[i * cols + j] - t * a[r * cols + j]) % p;
        a[i * cols + j] = v < 0 ? v + p : v;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace thickrep::modp
