#ifndef QSOS_POLY_HPP
#define QSOS_POLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsos/errors.hpp"
#include "qsos/rational.hpp"

namespace qsos {

using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
  unsigned s = 0;
  for (unsigned e : m) s += e;
  return s;
}

/// Graded lexicographic order with x1 > x2 > ...; true when a sorts before b
/// in descending order (a is the larger monomial).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// All monomials of total degree d in n variables, in descending grlex order.
std::vector<Monomial> monomial_basis(unsigned n, unsigned d);

/// Position of m inside monomial_basis(m.size(), deg m).
std::size_t monomial_index(const Monomial& m);

std::string monomial_str(const Monomial& m, std::string_view var = "x");

inline Monomial operator+(const Monomial& a, const Monomial& b) {
  Monomial c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

template <class Scalar>
inline bool scalar_is_zero(const Scalar& s) {
  return s == Scalar(0);
}

/// Unit and integer embeddings for the rings used by generic algorithms.
template <class R>
struct RingTraits {
  static R one() { return R(1); }
  static R from_int(long k) { return R(k); }
};

template <class Scalar>
class BasicPoly;
template <class S>
inline bool scalar_is_zero(const BasicPoly<S>& p) {
  return p.is_zero();
}

/// Sparse multivariate polynomial. Terms are kept in descending grlex order
/// and never hold a zero coefficient.
template <class Scalar>
class BasicPoly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexGreater>;

  BasicPoly() = default;
  explicit BasicPoly(unsigned nvars) : nvars_(nvars) {}
  BasicPoly(unsigned nvars, const Scalar& c) : nvars_(nvars) {
    if (!scalar_is_zero(c)) terms_[Monomial(nvars, 0)] = c;
  }

  static BasicPoly variable(unsigned nvars, unsigned i) {
    BasicPoly p(nvars);
    Monomial m(nvars, 0);
    m.at(i) = 1;
    p.terms_[m] = Scalar(1);
    return p;
  }
  static BasicPoly monomial(const Monomial& m, const Scalar& c = Scalar(1)) {
    BasicPoly p(static_cast<unsigned>(m.size()));
    if (!scalar_is_zero(c)) p.terms_[m] = c;
    return p;
  }

  unsigned nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(Monomial m) const {
    m.resize(nvars_, 0);
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(Monomial m, const Scalar& c) {
    if (scalar_is_zero(c)) return;
    if (m.size() > nvars_) widen(static_cast<unsigned>(m.size()));
    m.resize(nvars_, 0);
    auto [it, fresh] = terms_.emplace(std::move(m), c);
    if (!fresh) {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Total degree, or -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first));
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) != d) return false;
    return true;
  }

  /// The graded piece of degree d.
  BasicPoly homogeneous_part(unsigned d) const {
    BasicPoly out(nvars_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) == d) out.terms_.emplace(m, c);
    return out;
  }

  void widen(unsigned n) {
    if (n <= nvars_) return;
    Terms t;
    for (auto& [m, c] : terms_) {
      Monomial w = m;
      w.resize(n, 0);
      t.emplace(std::move(w), c);
    }
    terms_ = std::move(t);
    nvars_ = n;
  }

  /// Coefficients on an explicit monomial basis. Terms outside the basis are
  /// reported through the return flag.
  template <class Vec>
  bool coefficients_on(const std::vector<Monomial>& basis, Vec& out) const {
    out.resize(static_cast<Eigen::Index>(basis.size()));
    std::size_t hit = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      out(static_cast<Eigen::Index>(i)) = coeff(basis[i]);
      if (!scalar_is_zero(out(static_cast<Eigen::Index>(i)))) ++hit;
    }
    return hit == terms_.size();
  }

  template <class T>
  T evaluate(const std::vector<T>& x) const {
    T acc(0);
    for (const auto& [m, c] : terms_) {
      T term(c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) term = term * x.at(i);
      acc = acc + term;
    }
    return acc;
  }

  BasicPoly operator-() const {
    BasicPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  BasicPoly& operator+=(const BasicPoly& o) {
    widen(o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    widen(o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicPoly& operator*=(const Scalar& s) {
    if (scalar_is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator*(BasicPoly a, const Scalar& s) { return a *= s; }
  friend BasicPoly operator*(const Scalar& s, BasicPoly a) { return a *= s; }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    BasicPoly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    return out;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    unsigned n = std::max(a.nvars_, b.nvars_);
    BasicPoly wa = a, wb = b;
    wa.widen(n);
    wb.widen(n);
    return wa.terms_ == wb.terms_;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using T = decltype(f(std::declval<Scalar>()));
    BasicPoly<T> out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

 private:
  unsigned nvars_ = 0;
  Terms terms_;
};

template <class Scalar>
BasicPoly<Scalar> pow(const BasicPoly<Scalar>& p, unsigned e) {
  BasicPoly<Scalar> out(p.nvars(), Scalar(1));
  BasicPoly<Scalar> base = p;
  while (e) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return out;
}

template <class S>
struct RingTraits<BasicPoly<S>> {
  static BasicPoly<S> one() { return BasicPoly<S>(0, RingTraits<S>::one()); }
  static BasicPoly<S> from_int(long k) { return BasicPoly<S>(0, RingTraits<S>::from_int(k)); }
};

using Poly = BasicPoly<Rational>;

/// Canonical text form, e.g. "7/2*x1^4*x3^2 - x2^6". Zero prints as "0".
std::string to_string(const Poly& p, std::string_view var = "x");
std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Parses the polynomial grammar (sums of products of rationals and x<i>,
/// with ^, parentheses and division by constants). The result has at least
/// min_vars variables. When univariate_var is nonempty that name is accepted
/// as the single variable x1.
Poly parse_poly(std::string_view text, unsigned min_vars = 0, std::string_view univariate_var = "");

/// Splits "p1; p2; ..." and parses each piece.
std::vector<Poly> parse_poly_list(std::string_view text, unsigned min_vars = 0);

/// Coefficient vector of a homogeneous p on monomial_basis(n, d).
VectorQ coefficient_vector(const Poly& p, unsigned n, unsigned d);
Poly poly_from_vector(const VectorQ& v, unsigned n, unsigned d);

}  // namespace qsos

#endif  // QSOS_POLY_HPP
