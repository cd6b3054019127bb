// Shared helpers for the test suite: seeded generators and independent
// oracles that deliberately avoid the library's own linear algebra paths.
#pragma once

#include <ellrot/ellrot.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace support {

using ellrot::EllipticSpace;
using ellrot::Mat;
using ellrot::Vec;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline EllipticSpace random_space(std::mt19937_64& g, std::size_t n) {
  std::vector<double> coeffs(n);
  for (auto& c : coeffs) c = uniform(g, 0.1, 10.0);
  return ellrot::make_space(coeffs);
}

inline Vec random_vec(std::mt19937_64& g, std::size_t n, double lo = -2.0, double hi = 2.0) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = uniform(g, lo, hi);
  return v;
}

// Random vector of B-norm one; resamples the rare near-zero draw.
inline Vec random_unit(std::mt19937_64& g, const EllipticSpace& s) {
  for (;;) {
    Vec v = random_vec(g, s.dim());
    double n = ellrot::norm(s, v);
    if (n > 1e-3) return v * (1.0 / n);
  }
}

// Determinant by recursive cofactor expansion. Exponential and test-only,
// kept separate from the library's LU so determinant checks are two-route.
inline double det_oracle(const std::vector<std::vector<double>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  double sum = 0.0;
  double sign = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<double>> minor(n - 1, std::vector<double>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    sum += sign * m[0][j] * det_oracle(minor);
    sign = -sign;
  }
  return sum;
}

inline double det_oracle(const Mat& m) {
  std::size_t n = m.dim();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
  return det_oracle(rows);
}

// Textbook Euclidean Rodrigues formula about a Euclidean-unit axis w.
inline Mat euclidean_rodrigues(const Vec& w, double theta) {
  Mat k(3);
  k(0, 1) = -w[2];
  k(0, 2) = w[1];
  k(1, 0) = w[2];
  k(1, 2) = -w[0];
  k(2, 0) = -w[1];
  k(2, 1) = w[0];
  Mat k2 = k * k;
  Mat r = Mat::identity(3);
  double s = std::sin(theta);
  double c = 1.0 - std::cos(theta);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) += s * k(i, j) + c * k2(i, j);
  return r;
}

// Comparison scale for matrix residuals: absolute for small matrices,
// relative once entries grow past one.
inline double scale_of(const Mat& m) { return std::max(1.0, ellrot::max_abs(m)); }

inline double diff_at_scale(const Mat& a, const Mat& b) {
  return ellrot::max_abs_diff(a, b) / std::max(scale_of(a), scale_of(b));
}

}  // namespace support
