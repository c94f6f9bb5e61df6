#ifndef QSOS_RESULTANT_HPP
#define QSOS_RESULTANT_HPP

#include "qsos/determinant.hpp"
#include "qsos/unipoly.hpp"

namespace qsos {

/// Sylvester matrix of a (degree m) and b (degree n), rows of a first,
/// coefficients from the leading one down.
template <class R>
RingMatrix<R> sylvester_matrix(const UniPoly<R>& a, const UniPoly<R>& b) {
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  RingMatrix<R> s(m + n, std::vector<R>(m + n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b.coeff(n - k);
  return s;
}

/// Res(a, b) as the Sylvester determinant. Throws ZeroPolynomial.
template <class R>
R resultant(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant of the zero polynomial");
  if (a.degree() == 0 && b.degree() == 0) return RingTraits<R>::one();
  return determinant(sylvester_matrix(a, b));
}

/// Res_t(a(t), b(t; x)) for a with rational coefficients.
Poly resultant(const UniPolyQ& a, const UniPoly<Poly>& b);

}  // namespace qsos

#endif  // QSOS_RESULTANT_HPP
