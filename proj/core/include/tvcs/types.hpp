#pragma once

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>
#include <vector>

namespace tvcs {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// Forward differences of an N x N grid. d1 differences along the first
// index (rows), d2 along the second (columns); the last row of d1 and the
// last column of d2 are identically zero (Neumann truncation).
struct GradientField {
  CMat d1, d2;
};

struct FreqIndex2 {
  int k1 = 0;
  int k2 = 0;
  friend bool operator==(const FreqIndex2&, const FreqIndex2&) = default;
  friend auto operator<=>(const FreqIndex2&, const FreqIndex2&) = default;
};

// Frequency sets are kept sorted and duplicate-free.
using FreqSet1 = std::vector<int>;
using FreqSet2 = std::vector<FreqIndex2>;

// Canonical frequency grid per dimension: {-floor(N/2)+1, ..., ceil(N/2)}.
inline int freq_min(int n) { return -(n / 2) + 1; }
inline int freq_max(int n) { return (n + 1) / 2; }
inline bool freq_in_grid(int k, int n) { return k >= freq_min(n) && k <= freq_max(n); }

// Spectra of length n store frequency k at array position k mod n.
inline int freq_to_index(int k, int n) { return ((k % n) + n) % n; }
inline int index_to_freq(int i, int n) { return i <= (n + 1) / 2 ? i : i - n; }

// Pixel (i, j) of an N x N grid stored flat in column-major order,
// matching Eigen's default layout.
inline int pixel_to_flat(int i, int j, int n) { return i + n * j; }

} // namespace tvcs
