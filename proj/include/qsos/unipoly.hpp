#ifndef QSOS_UNIPOLY_HPP
#define QSOS_UNIPOLY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsos/errors.hpp"
#include "qsos/poly.hpp"
#include "qsos/rational.hpp"

namespace qsos {

/// Dense univariate polynomial over a commutative ring R, coefficients stored
/// from the constant term upwards. The zero polynomial has no coefficients.
template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const R& c) {
    if (!scalar_is_zero(c)) c_.push_back(c);
  }
  explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(unsigned k, const R& c = RingTraits<R>::one()) {
    std::vector<R> v(k + 1, R());
    v[k] = c;
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(); }
  const R& lead() const { return c_.back(); }

  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + T(c_[k]);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<R> d(c_.size() - 1, R());
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * RingTraits<R>::from_int(static_cast<long>(k));
    return UniPoly(std::move(d));
  }

  UniPoly operator-() const {
    UniPoly o(*this);
    for (auto& x : o.c_) x = -x;
    return o;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly scaled(const R& s) const {
    UniPoly o(*this);
    for (auto& x : o.c_) x *= s;
    o.trim();
    return o;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  std::vector<R> c_;
  void trim() {
    while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
  }
};

template <class R>
inline bool scalar_is_zero(const UniPoly<R>& p) {
  return p.is_zero();
}

template <class R>
struct RingTraits<UniPoly<R>> {
  static UniPoly<R> one() { return UniPoly<R>(RingTraits<R>::one()); }
  static UniPoly<R> from_int(long k) { return UniPoly<R>(RingTraits<R>::from_int(k)); }
};

using UniPolyQ = UniPoly<Rational>;

/// Quotient and remainder over a field.
std::pair<UniPolyQ, UniPolyQ> divmod(const UniPolyQ& a, const UniPolyQ& b);
UniPolyQ gcd(UniPolyQ a, UniPolyQ b);
UniPolyQ monic(const UniPolyQ& p);
bool is_squarefree(const UniPolyQ& p);
/// Integer primitive multiple with positive leading coefficient.
UniPolyQ primitive_part(const UniPolyQ& p);

std::string to_string(const UniPolyQ& p, std::string_view var = "t");
/// Parses a polynomial in the single variable `var`.
UniPolyQ parse_unipoly(std::string_view text, std::string_view var = "t");
UniPolyQ to_unipoly(const Poly& p);

}  // namespace qsos

#endif  // QSOS_UNIPOLY_HPP
