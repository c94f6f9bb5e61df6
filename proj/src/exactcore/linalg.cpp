#include "qsos/linalg.hpp"

namespace qsos {

SymMatrix::SymMatrix(MatrixQ m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw Error(ErrorKind::DimensionMismatch, "matrix is not symmetric");
}

PsdVerdict psd_check(const SymMatrix& m) {
  const Eigen::Index n = m.size();
  MatrixQ s = m.matrix();
  PsdVerdict v;
  v.l = MatrixQ::Identity(n, n);
  v.pivots = VectorQ::Constant(n, Rational(0));

  VectorQ w;
  for (Eigen::Index k = 0; k < n && w.size() == 0; ++k) {
    const Rational a = s(k, k);
    if (a.sign() < 0) {
      w = VectorQ::Constant(n, Rational(0));
      w(k) = 1;
      break;
    }
    if (a.is_zero()) {
      Eigen::Index j = k + 1;
      while (j < n && s(k, j).is_zero()) ++j;
      if (j == n) continue;
      const Rational b = s(k, j), c = s(j, j);
      w = VectorQ::Constant(n, Rational(0));
      if (c.sign() < 0) {
        w(j) = 1;
      } else if (c.is_zero()) {
        w(k) = 1;
        w(j) = b.sign() > 0 ? -1 : 1;
      } else {
        w(k) = -c / b;
        w(j) = 1;
      }
      break;
    }
    v.pivots(k) = a;
    ++v.rank;
    for (Eigen::Index i = k + 1; i < n; ++i) v.l(i, k) = s(i, k) / a;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (s(i, k).is_zero()) continue;
      for (Eigen::Index j = k + 1; j < n; ++j) s(i, j) -= v.l(i, k) * s(k, j);
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      s(i, k) = 0;
      s(k, i) = 0;
    }
  }

  if (w.size() == 0) {
    v.psd = true;
    return v;
  }
  // Map the reduced witness back through L^T v = w.
  VectorQ x = w;
  for (Eigen::Index i = n; i-- > 0;)
    for (Eigen::Index j = i + 1; j < n; ++j) x(i) -= v.l(j, i) * x(j);
  v.psd = false;
  v.witness = x;
  v.witness_value = (x.transpose() * m.matrix() * x)(0, 0);
  v.l.resize(0, 0);
  v.pivots.resize(0);
  v.rank = 0;
  return v;
}

std::vector<WeightedSquare> ldl_sos(const SymMatrix& m) {
  PsdVerdict v = psd_check(m);
  if (!v.psd) throw Error(ErrorKind::NotPsd, "matrix is not positive semidefinite");
  std::vector<WeightedSquare> out;
  for (Eigen::Index k = 0; k < m.size(); ++k)
    if (v.pivots(k).sign() > 0) out.push_back({v.pivots(k), v.l.col(k)});
  return out;
}

}  // namespace qsos
