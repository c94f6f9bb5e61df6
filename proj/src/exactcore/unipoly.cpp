#include "qsos/unipoly.hpp"

namespace qsos {

std::pair<UniPolyQ, UniPolyQ> divmod(const UniPolyQ& a, const UniPolyQ& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPolyQ(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  Rational inv = Rational(1) / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] * inv;
    if (f.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPolyQ(std::move(q)), UniPolyQ(std::move(r))};
}

UniPolyQ monic(const UniPolyQ& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.lead());
}

UniPolyQ gcd(UniPolyQ a, UniPolyQ b) {
  while (!b.is_zero()) {
    UniPolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

bool is_squarefree(const UniPolyQ& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

UniPolyQ primitive_part(const UniPolyQ& p) {
  if (p.is_zero()) return p;
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.denominator());
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, (c * Rational(l)).numerator());
  Rational s = Rational(l) / Rational(g);
  if (p.lead().sign() < 0) s = -s;
  return p.scaled(s);
}

std::string to_string(const UniPolyQ& p, std::string_view var) {
  Poly q(1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) q.add_term(Monomial{static_cast<unsigned>(k)}, p.coeffs()[k]);
  return to_string(q, var);
}

UniPolyQ to_unipoly(const Poly& p) {
  if (p.nvars() > 1) throw Error(ErrorKind::Parse, "expected a univariate polynomial");
  std::vector<Rational> c;
  for (const auto& [m, v] : p.terms()) {
    unsigned e = m.empty() ? 0 : m[0];
    if (c.size() <= e) c.resize(e + 1, Rational(0));
    c[e] = v;
  }
  return UniPolyQ(std::move(c));
}

UniPolyQ parse_unipoly(std::string_view text, std::string_view var) {
  return to_unipoly(parse_poly(text, 0, var));
}

}  // namespace qsos
