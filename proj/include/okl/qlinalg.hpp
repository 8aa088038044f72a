#ifndef OKL_QLINALG_HPP
#define OKL_QLINALG_HPP

#include <optional>
#include <vector>

#include "okl/rat.hpp"

namespace okl {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

inline QMat qmat_of(const IMat& a) {
  QMat q(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (auto x : a[i]) q[i].push_back(Rat((long)x));
  return q;
}

inline int qmat_rank(QMat a) {
  int rows = (int)a.size();
  if (rows == 0) return 0;
  int cols = (int)a[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rank][c];
      for (int cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Solves x A = b for a row vector x (A given row-major).  Returns nullopt if
// inconsistent; if the solution space is positive-dimensional the returned
// point has free coordinates set to zero.
inline std::optional<QVec> solve_left(const QMat& A, const QVec& b) {
  int rows = (int)A.size();
  int cols = rows ? (int)A[0].size() : 0;
  if ((int)b.size() != cols) throw Error("solve_left: size mismatch");
  // Transpose to A^T x^T = b^T and run Gauss with augmented column.
  QMat m(cols, QVec(rows + 1, Rat(0)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[j][i] = A[i][j];
  for (int j = 0; j < cols; ++j) m[j][rows] = b[j];
  std::vector<int> pivot_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < rows && rank < cols; ++c) {
    int piv = -1;
    for (int r = rank; r < cols; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < cols; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int cc = c; cc <= rows; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    pivot_col[rank] = c;
    ++rank;
  }
  for (int r = rank; r < cols; ++r)
    if (m[r][rows] != 0) return std::nullopt;
  QVec x(rows, Rat(0));
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m[r][rows] / m[r][pivot_col[r]];
  return x;
}

inline Rat qmat_det(QMat a) {
  int n = (int)a.size();
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
    }
  }
  return det;
}

inline std::optional<QMat> qmat_inverse(QMat a) {
  int n = (int)a.size();
  QMat inv(n, QVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rat d = a[c][c];
    for (int cc = 0; cc < n; ++cc) { a[c][cc] /= d; inv[c][cc] /= d; }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int cc = 0; cc < n; ++cc) {
        a[r][cc] -= f * a[c][cc];
        inv[r][cc] -= f * inv[c][cc];
      }
    }
  }
  return inv;
}

inline long long imat_det(const IMat& a) {
  Rat d = qmat_det(qmat_of(a));
  if (d.get_den() != 1) throw Error("imat_det: non-integer determinant");
  return to_long(Zint(d.get_num()));
}

// Inverse of a unimodular integer matrix, as an integer matrix.
inline IMat imat_inverse_unimodular(const IMat& a) {
  auto inv = qmat_inverse(qmat_of(a));
  if (!inv) throw Error("imat_inverse_unimodular: singular matrix");
  IMat out(inv->size());
  for (size_t i = 0; i < inv->size(); ++i)
    for (auto& x : (*inv)[i]) {
      if (x.get_den() != 1) throw Error("imat_inverse_unimodular: matrix is not unimodular");
      out[i].push_back(to_long(Zint(x.get_num())));
    }
  return out;
}

inline IVec ivec_mul_mat(const IVec& v, const IMat& m) {
  if (m.empty()) return {};
  IVec out(m[0].size(), 0);
  if (v.size() != m.size()) throw Error("ivec_mul_mat: size mismatch");
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  return out;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
  IMat out(a.size(), IVec(b.empty() ? 0 : b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace okl

#endif
