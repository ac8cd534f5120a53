#pragma once

// Smith normal form over Z for exponent matrices; only the invariant
// factors are needed, so this is the classic gcd-reduction algorithm on
// exact integers.

#include <vector>

#include "absum/errors.hpp"
#include "absum/laurent.hpp"
#include "absum/numeric.hpp"

namespace absum {

using IntMatrix = std::vector<std::vector<Int>>;

inline Int int_matrix_det(IntMatrix m) {
  const size_t n = m.size();
  // fraction-free Gaussian elimination (Bareiss)
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Diagonal of the Smith normal form (d_1 | d_2 | ... | d_n), all >= 0.
inline std::vector<Int> smith_normal_form_diagonal(IntMatrix m) {
  const size_t rows = m.size();
  require(rows > 0, errc::empty_input, "empty matrix");
  const size_t cols = m[0].size();
  std::vector<Int> diag;
  size_t top = 0;
  while (top < rows && top < cols) {
    // find a nonzero pivot
    size_t pi = top, pj = top;
    bool found = false;
    for (size_t i = top; i < rows && !found; ++i)
      for (size_t j = top; j < cols && !found; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[top], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pj]);
    // clear row and column by gcd reduction
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = top + 1; i < rows; ++i) {
        while (m[i][top] != 0) {
          Int q = m[top][top] == 0 ? Int(0) : m[i][top] / m[top][top];
          for (size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
          if (m[i][top] != 0) {
            std::swap(m[i], m[top]);
            again = true;
          }
        }
      }
      for (size_t j = top + 1; j < cols; ++j) {
        while (m[top][j] != 0) {
          Int q = m[top][top] == 0 ? Int(0) : m[top][j] / m[top][top];
          for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
          if (m[top][j] != 0) {
            for (size_t i = top; i < rows; ++i) std::swap(m[i][j], m[i][top]);
            again = true;
          }
        }
      }
    }
    diag.push_back(m[top][top] < 0 ? -m[top][top] : m[top][top]);
    ++top;
  }
  // enforce the divisibility chain
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j)
      if (diag[j] % diag[i] != 0) {
        Int g = int_gcd(diag[i], diag[j]);
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  return diag;
}

inline Int smith_largest_invariant_factor(const IntMatrix& m) {
  require(!m.empty() && m.size() == m[0].size(), errc::internal, "matrix must be square");
  require(int_matrix_det(m) != 0, errc::singular_matrix, "exponent matrix is singular");
  auto diag = smith_normal_form_diagonal(m);
  return diag.back();
}

inline IntMatrix exponent_matrix_of(const LaurentPoly& L) {
  IntMatrix m;
  for (const auto& e : L.support()) {
    std::vector<Int> row;
    row.reserve(e.size());
    for (int v : e) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return m;
}

// Exponent matrices of the diagonal members of the two face families:
//   G1^0 = t0^A (1 + t1^d + ... + tn^d), largest invariant factor [d, A];
//   G2^0 = t0^A (t1^d + ... + tn^d) + t0^{-B}, largest factor dividing dB.
inline IntMatrix diagonal_g1_matrix(int A, int d, int n) {
  IntMatrix m;
  for (int r = 0; r <= n; ++r) {
    std::vector<Int> row(static_cast<size_t>(n) + 1, 0);
    row[0] = A;
    if (r >= 1) row[static_cast<size_t>(r)] = d;
    m.push_back(std::move(row));
  }
  return m;
}

inline IntMatrix diagonal_g2_matrix(int A, int B, int d, int n) {
  IntMatrix m;
  for (int r = 1; r <= n; ++r) {
    std::vector<Int> row(static_cast<size_t>(n) + 1, 0);
    row[0] = A;
    row[static_cast<size_t>(r)] = d;
    m.push_back(std::move(row));
  }
  std::vector<Int> tail(static_cast<size_t>(n) + 1, 0);
  tail[0] = -B;
  m.push_back(std::move(tail));
  return m;
}

}  // namespace absum
