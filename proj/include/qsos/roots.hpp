#ifndef QSOS_ROOTS_HPP
#define QSOS_ROOTS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "qsos/perm.hpp"
#include "qsos/rational.hpp"
#include "qsos/unipoly.hpp"

namespace qsos {

/// Complex number with mpf_class parts at a fixed working precision.
struct ComplexF {
  mpf_class re, im;

  ComplexF() = default;
  ComplexF(const mpf_class& r, const mpf_class& i) : re(r), im(i) {}
  explicit ComplexF(int v) : re(v), im(0) {}
  explicit ComplexF(const Rational& v) : re(v.value()), im(0) {}
  ComplexF(const ComplexF&) = default;
  ComplexF(ComplexF&&) = default;
  // mpf assignment keeps the target precision; take the source's instead.
  ComplexF& operator=(const ComplexF& o) {
    if (this != &o) {
      re.set_prec(o.re.get_prec());
      im.set_prec(o.im.get_prec());
      re = o.re;
      im = o.im;
    }
    return *this;
  }
  ComplexF& operator=(ComplexF&& o) noexcept {
    mpf_swap(re.get_mpf_t(), o.re.get_mpf_t());
    mpf_swap(im.get_mpf_t(), o.im.get_mpf_t());
    return *this;
  }

  static ComplexF zero(mp_bitcnt_t prec) { return {mpf_class(0, prec), mpf_class(0, prec)}; }

  mp_bitcnt_t prec() const { return std::max(re.get_prec(), im.get_prec()); }

  // Results carry the larger operand precision; gmpxx would otherwise fall
  // back to the default precision for fresh temporaries.
  friend ComplexF operator+(const ComplexF& a, const ComplexF& b) {
    const auto p = std::max(a.prec(), b.prec());
    return {mpf_class(a.re + b.re, p), mpf_class(a.im + b.im, p)};
  }
  friend ComplexF operator-(const ComplexF& a, const ComplexF& b) {
    const auto p = std::max(a.prec(), b.prec());
    return {mpf_class(a.re - b.re, p), mpf_class(a.im - b.im, p)};
  }
  friend ComplexF operator*(const ComplexF& a, const ComplexF& b) {
    const auto p = std::max(a.prec(), b.prec());
    mpf_class rr(a.re * b.re, p), ii(a.im * b.im, p), ri(a.re * b.im, p), ir(a.im * b.re, p);
    return {mpf_class(rr - ii, p), mpf_class(ri + ir, p)};
  }
  friend ComplexF operator/(const ComplexF& a, const ComplexF& b) {
    const auto p = std::max(a.prec(), b.prec());
    mpf_class den(b.re * b.re, p);
    den += mpf_class(b.im * b.im, p);
    mpf_class x(a.re * b.re, p), y(a.im * b.re, p);
    x += mpf_class(a.im * b.im, p);
    y -= mpf_class(a.re * b.im, p);
    x /= den;
    y /= den;
    return {x, y};
  }
  ComplexF operator-() const { return {mpf_class(-re, prec()), mpf_class(-im, prec())}; }
  ComplexF& operator+=(const ComplexF& o) { return *this = *this + o; }
  ComplexF& operator-=(const ComplexF& o) { return *this = *this - o; }
  ComplexF& operator*=(const ComplexF& o) { return *this = *this * o; }
  friend bool operator==(const ComplexF& a, const ComplexF& b) { return a.re == b.re && a.im == b.im; }
  ComplexF conj() const { return {re, mpf_class(-im, im.get_prec())}; }
  mpf_class norm2() const {
    mpf_class n(re * re, prec());
    n += mpf_class(im * im, prec());
    return n;
  }
};

/// Exact Gaussian rational a + b i.
struct ComplexQ {
  Rational re, im;
  friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Rational norm2() const { return re * re + im * im; }
};

/// Rectangle [re_lo, re_hi] x [im_lo, im_hi] with rational corners.
struct ComplexInterval {
  Rational re_lo, re_hi, im_lo, im_hi;

  static ComplexInterval point(const Rational& x) { return {x, x, 0, 0}; }
  bool contains_zero() const {
    return re_lo.sign() <= 0 && re_hi.sign() >= 0 && im_lo.sign() <= 0 && im_hi.sign() >= 0;
  }
  bool contains(const Rational& x) const {
    return re_lo <= x && x <= re_hi && im_lo.sign() <= 0 && im_hi.sign() >= 0;
  }
  /// Widens the corners outward onto the grid 2^-bits.
  ComplexInterval rounded(unsigned bits) const;

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re_lo + b.re_lo, a.re_hi + b.re_hi, a.im_lo + b.im_lo, a.im_hi + b.im_hi};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re_lo - b.re_hi, a.re_hi - b.re_lo, a.im_lo - b.im_hi, a.im_hi - b.im_lo};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
};

/// Square box |Re z - center.re| <= radius, |Im z - center.im| <= radius.
struct RootBox {
  ComplexQ center;
  Rational radius;
  ComplexF approx;  // high-precision estimate used for numeric products

  ComplexInterval interval() const {
    return {center.re - radius, center.re + radius, center.im - radius, center.im + radius};
  }
  bool intersects(const RootBox& o) const;
  RootBox conj() const { return {{center.re, -center.im}, radius, approx.conj()}; }
};

struct RootSystem {
  std::vector<RootBox> boxes;
  unsigned precision_bits = 0;
  /// Complex conjugation on box indices; a fixed point is a real root.
  Perm tau;
  int real_roots = 0;
  bool totally_imaginary() const { return real_roots == 0; }
};

/// Certified isolation of all complex roots of a squarefree polynomial.
/// Precision doubles from precision_bits up to max_bits before giving up.
/// Boxes are ordered by the argument of their centre in [0, 2 pi), then by
/// modulus. Throws NotSquarefree or PrecisionExhausted.
RootSystem isolate_roots(const UniPolyQ& m, unsigned precision_bits = 128, unsigned max_bits = 1024);

ComplexInterval evaluate(const UniPolyQ& p, const ComplexInterval& z, unsigned bits);

}  // namespace qsos

#endif  // QSOS_ROOTS_HPP
