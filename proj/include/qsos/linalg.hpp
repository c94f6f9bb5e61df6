#ifndef QSOS_LINALG_HPP
#define QSOS_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "qsos/errors.hpp"
#include "qsos/rational.hpp"

namespace qsos {

/// Reduced row echelon form together with its pivot columns.
template <class Scalar>
struct Echelon {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> rref;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Gauss-Jordan elimination over an exact field; pivots are taken in index
/// order (first nonzero entry in the column).
template <class Derived>
Echelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e;
  e.rref = m;
  auto& a = e.rref;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == Scalar(0)) continue;
      Scalar f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m).rank();
}

/// Kernel basis, one vector per free column with that coordinate set to 1.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> nullspace(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto e = row_reduce(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis(n, n - e.rank());
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis.col(k).setConstant(Scalar(0));
    basis(free, k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], k) = -e.rref(static_cast<Eigen::Index>(r), free);
    ++k;
  }
  return basis;
}

/// Row space basis in reduced echelon form (rows).
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> row_space(
    const Eigen::MatrixBase<Derived>& m) {
  auto e = row_reduce(m);
  return e.rref.topRows(e.rank());
}

template <class Scalar>
struct LinearSolution {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
  bool unique = false;
};

/// One solution of A x = b, or nullopt when inconsistent.
template <class DA, class DB>
std::optional<LinearSolution<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a,
                                                         const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: row count mismatch");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  auto e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  LinearSolution<Scalar> s;
  s.x = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Constant(a.cols(), Scalar(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    s.x(e.pivots[r]) = e.rref(static_cast<Eigen::Index>(r), a.cols());
  s.unique = e.rank() == a.cols();
  return s;
}

/// Exact symmetric matrix.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(Eigen::Index n) : m_(MatrixQ::Constant(n, n, Rational(0))) {}
  explicit SymMatrix(MatrixQ m);

  Eigen::Index size() const { return m_.rows(); }
  const MatrixQ& matrix() const { return m_; }
  const Rational& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  void set(Eigen::Index i, Eigen::Index j, const Rational& v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.size() == b.size() && a.m_ == b.m_;
  }

 private:
  MatrixQ m_;
};

struct PsdVerdict {
  bool psd = false;
  /// PSD case: m = l * diag(pivots) * l^T with l unit lower triangular.
  MatrixQ l;
  VectorQ pivots;
  Eigen::Index rank = 0;
  /// Non-PSD case: witness^T m witness = witness_value < 0.
  VectorQ witness;
  Rational witness_value;
};

PsdVerdict psd_check(const SymMatrix& m);

struct WeightedSquare {
  Rational weight;
  VectorQ vec;
};

/// m = sum of weight * vec vec^T over the positive pivots. Throws NotPsd.
std::vector<WeightedSquare> ldl_sos(const SymMatrix& m);

}  // namespace qsos

#endif  // QSOS_LINALG_HPP
