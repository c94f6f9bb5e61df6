#ifndef QSOS_DETERMINANT_HPP
#define QSOS_DETERMINANT_HPP

#include <vector>

#include "qsos/poly.hpp"

namespace qsos {

/// Square matrix over an arbitrary commutative ring, row-major.
template <class R>
using RingMatrix = std::vector<std::vector<R>>;

/// Characteristic polynomial coefficients (1, c1, ..., cn) of det(lambda I - m),
/// computed division-free with Berkowitz's algorithm.
template <class R>
std::vector<R> berkowitz_charpoly(const RingMatrix<R>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {RingTraits<R>::one()};
  std::vector<R> p = {RingTraits<R>::one(), -m[n - 1][n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t sz = n - k - 1;
    // t = (1, -a, -R C, -R A C, ..., -R A^{sz-1} C)
    std::vector<R> t(sz + 2);
    t[0] = RingTraits<R>::one();
    t[1] = -m[k][k];
    std::vector<R> col(sz);
    for (std::size_t i = 0; i < sz; ++i) col[i] = m[k + 1 + i][k];
    for (std::size_t j = 0; j < sz; ++j) {
      R acc{};
      for (std::size_t i = 0; i < sz; ++i) acc += m[k][k + 1 + i] * col[i];
      t[j + 2] = -acc;
      if (j + 1 == sz) break;
      std::vector<R> next(sz);
      for (std::size_t i = 0; i < sz; ++i) {
        R s{};
        for (std::size_t l = 0; l < sz; ++l) s += m[k + 1 + i][k + 1 + l] * col[l];
        next[i] = std::move(s);
      }
      col = std::move(next);
    }
    std::vector<R> q(sz + 2);
    for (std::size_t i = 0; i < sz + 2; ++i) {
      R s{};
      for (std::size_t j = 0; j <= i && j < p.size(); ++j) s += t[i - j] * p[j];
      q[i] = std::move(s);
    }
    p = std::move(q);
  }
  return p;
}

template <class R>
R determinant(const RingMatrix<R>& m) {
  auto p = berkowitz_charpoly(m);
  R d = p.back();
  return (m.size() % 2 == 0) ? d : -d;
}

}  // namespace qsos

#endif  // QSOS_DETERMINANT_HPP
