#include "qsos/roots.hpp"

#include <algorithm>
#include <cmath>

#include "qsos/errors.hpp"
#include "qsos/sturm.hpp"

namespace qsos {

namespace {

struct RealIv {
  Rational lo, hi;
};

RealIv mul(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Rational p[4] = {a * c, a * d, b * c, b * d};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Rational floor_to_grid(const Rational& x, unsigned bits) {
  mpz_class scaled = x.numerator() << bits;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
  return Rational(q, mpz_class(1) << bits);
}

Rational ceil_to_grid(const Rational& x, unsigned bits) {
  mpz_class scaled = x.numerator() << bits;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
  return Rational(q, mpz_class(1) << bits);
}

Rational nearest_on_grid(const mpf_class& x, unsigned bits) {
  Rational exact{mpq_class(x)};
  return floor_to_grid(exact + Rational(1, Integer(mpz_class(1) << (bits + 1))), bits);
}

ComplexQ eval_exact(const UniPolyQ& p, const ComplexQ& z) {
  ComplexQ acc{0, 0};
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * z + ComplexQ{p.coeffs()[k], 0};
  return acc;
}

ComplexF eval_float(const std::vector<ComplexF>& c, const ComplexF& z) {
  ComplexF acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

std::vector<ComplexF> aberth(const UniPolyQ& m, unsigned bits, std::vector<ComplexF> z) {
  const int n = m.degree();
  std::vector<ComplexF> c, dc;
  for (const auto& q : m.coeffs()) c.push_back({mpf_class(q.value(), bits), mpf_class(0, bits)});
  const UniPolyQ deriv = m.derivative();
  for (const auto& q : deriv.coeffs()) dc.push_back({mpf_class(q.value(), bits), mpf_class(0, bits)});

  if (z.empty()) {
    double bound = root_bound(m).to_double() / 2;
    for (int k = 0; k < n; ++k) {
      double ang = 2 * M_PI * k / n + 0.7;
      z.push_back({mpf_class(bound * std::cos(ang), bits), mpf_class(bound * std::sin(ang), bits)});
    }
  } else {
    for (auto& w : z) {
      w.re.set_prec(bits);
      w.im.set_prec(bits);
    }
  }
  mpf_class tol(1, bits);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 2 * (bits - 8));
  const int max_iter = 200 + 40 * n;
  for (int it = 0; it < max_iter; ++it) {
    mpf_class worst(0, bits);
    for (int k = 0; k < n; ++k) {
      ComplexF pz = eval_float(c, z[static_cast<std::size_t>(k)]);
      ComplexF dz = eval_float(dc, z[static_cast<std::size_t>(k)]);
      if (pz.norm2() == 0) continue;
      if (dz.norm2() == 0) dz = ComplexF(mpf_class(1e-30, bits), mpf_class(0, bits));
      ComplexF ratio = pz / dz;
      ComplexF s = ComplexF::zero(bits);
      for (int j = 0; j < n; ++j)
        if (j != k) {
          ComplexF diff = z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
          if (diff.norm2() == 0) diff = ComplexF(mpf_class(1e-30, bits), mpf_class(0, bits));
          s += ComplexF(mpf_class(1, bits), mpf_class(0, bits)) / diff;
        }
      ComplexF w = ratio / (ComplexF(mpf_class(1, bits), mpf_class(0, bits)) - ratio * s);
      z[static_cast<std::size_t>(k)] -= w;
      mpf_class scale = z[static_cast<std::size_t>(k)].norm2();
      if (scale < 1) scale = 1;
      mpf_class rel = w.norm2() / scale;
      if (rel > worst) worst = rel;
    }
    if (worst < tol) break;
  }
  return z;
}

// Half-plane then cross-product comparison of arguments in [0, 2 pi).
bool arg_less(const ComplexQ& a, const ComplexQ& b) {
  auto half = [](const ComplexQ& z) { return (z.im.sign() > 0 || (z.im.is_zero() && z.re.sign() >= 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Rational cross = a.re * b.im - a.im * b.re;
  if (!cross.is_zero()) return cross.sign() > 0;
  Rational na = a.norm2(), nb = b.norm2();
  if (na != nb) return na < nb;
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

bool certify(const UniPolyQ& m, const std::vector<ComplexF>& approx, unsigned bits, int sturm_real, RootSystem& out) {
  const int n = m.degree();
  UniPolyQ dm = m.derivative();
  std::vector<RootBox> boxes;
  for (const auto& z : approx) {
    RootBox b;
    b.center = {nearest_on_grid(z.re, bits), nearest_on_grid(z.im, bits)};
    b.approx = z;
    ComplexQ pv = eval_exact(m, b.center), dv = eval_exact(dm, b.center);
    Rational dn = dv.norm2();
    if (dn.is_zero()) return false;
    // A disc of radius n |p(c)/p'(c)| about c holds at least one root.
    Rational r2 = Rational(n * n) * pv.norm2() / dn;
    Rational r(0);
    if (!r2.is_zero()) {
      r = Rational(1, Integer(mpz_class(1) << (2 * bits)));
      while (r * r < r2) r *= 2;
    }
    b.radius = r;
    boxes.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size(); ++j)
      if (boxes[i].intersects(boxes[j])) return false;
  std::sort(boxes.begin(), boxes.end(), [](const RootBox& a, const RootBox& b) { return arg_less(a.center, b.center); });

  std::vector<int> img(boxes.size(), -1);
  int fixed = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    RootBox cb = boxes[i].conj();
    int hits = 0;
    for (std::size_t j = 0; j < boxes.size(); ++j)
      if (cb.intersects(boxes[j])) {
        ++hits;
        img[i] = static_cast<int>(j);
      }
    if (hits != 1) return false;
    if (img[i] == static_cast<int>(i)) ++fixed;
  }
  if (fixed != sturm_real) return false;
  out.boxes = std::move(boxes);
  out.precision_bits = bits;
  out.tau = Perm(img);
  out.real_roots = fixed;
  return true;
}

}  // namespace

ComplexInterval ComplexInterval::rounded(unsigned bits) const {
  return {floor_to_grid(re_lo, bits), ceil_to_grid(re_hi, bits), floor_to_grid(im_lo, bits),
          ceil_to_grid(im_hi, bits)};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  RealIv rr = mul(a.re_lo, a.re_hi, b.re_lo, b.re_hi);
  RealIv ii = mul(a.im_lo, a.im_hi, b.im_lo, b.im_hi);
  RealIv ri = mul(a.re_lo, a.re_hi, b.im_lo, b.im_hi);
  RealIv ir = mul(a.im_lo, a.im_hi, b.re_lo, b.re_hi);
  return {rr.lo - ii.hi, rr.hi - ii.lo, ri.lo + ir.lo, ri.hi + ir.hi};
}

bool RootBox::intersects(const RootBox& o) const {
  Rational reach = radius + o.radius;
  return abs(center.re - o.center.re) <= reach && abs(center.im - o.center.im) <= reach;
}

ComplexInterval evaluate(const UniPolyQ& p, const ComplexInterval& z, unsigned bits) {
  if (p.is_zero()) return ComplexInterval::point(0);
  ComplexInterval acc = ComplexInterval::point(p.lead());
  for (std::size_t k = p.coeffs().size() - 1; k-- > 0;)
    acc = (acc * z).rounded(bits) + ComplexInterval::point(p.coeffs()[k]);
  return acc;
}

RootSystem isolate_roots(const UniPolyQ& m, unsigned precision_bits, unsigned max_bits) {
  if (m.degree() < 1) throw Error(ErrorKind::InvalidArgument, "root isolation needs a nonconstant polynomial");
  if (!is_squarefree(m)) throw Error(ErrorKind::NotSquarefree, to_string(m) + " is not squarefree");
  const int real = sturm_real_roots(m);
  std::vector<ComplexF> z;
  for (unsigned bits = std::max(precision_bits, 64u); bits <= max_bits; bits *= 2) {
    z = aberth(m, bits, std::move(z));
    RootSystem rs;
    if (certify(m, z, bits, real, rs)) return rs;
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "could not certify the roots of " + to_string(m) + " within " + std::to_string(max_bits) + " bits");
}

}  // namespace qsos
