#include "qsos/numfield.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "qsos/errors.hpp"
#include "qsos/resultant.hpp"
#include "qsos/sturm.hpp"

namespace qsos {

namespace {

mpf_class to_mpf(const Rational& q, unsigned bits) { return mpf_class(q.value(), bits); }

ComplexF eval_at(const UniPolyQ& p, const ComplexF& z, unsigned bits) {
  ComplexF acc = ComplexF::zero(bits);
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = acc * z;
    acc.re += to_mpf(p.coeffs()[k], bits);
  }
  return acc;
}

std::string bits_note(unsigned bits) { return std::to_string(bits) + " bits"; }

}  // namespace

LinearForm canonical_linear_form(unsigned n) {
  LinearForm l;
  for (unsigned j = 0; j < n; ++j) l.push_back(UniPolyQ::monomial(j));
  return l;
}

bool is_canonical(const LinearForm& l) { return l == canonical_linear_form(static_cast<unsigned>(l.size())) && l.size() == 3; }

LinearForm parse_linear_form(std::string_view text) {
  LinearForm l;
  std::size_t b = 0;
  while (b <= text.size()) {
    std::size_t e = text.find(';', b);
    if (e == std::string_view::npos) e = text.size();
    l.push_back(parse_unipoly(text.substr(b, e - b)));
    b = e + 1;
  }
  return l;
}

Poly norm_form(const UniPolyQ& m, const LinearForm& l) {
  if (m.degree() < 1 || m.lead() != 1) throw Error(ErrorKind::NotMonic, to_string(m) + " is not monic");
  if (!is_squarefree(m)) throw Error(ErrorKind::NotSquarefree, to_string(m) + " is not squarefree");
  const unsigned n = static_cast<unsigned>(l.size());
  std::size_t top = 0;
  for (const auto& lj : l) top = std::max(top, lj.coeffs().size());
  std::vector<Poly> coeffs(top, Poly(n));
  for (unsigned j = 0; j < n; ++j)
    for (std::size_t k = 0; k < l[j].coeffs().size(); ++k)
      coeffs[k] += Poly::variable(n, j) * l[j].coeffs()[k];
  UniPoly<Poly> b(std::move(coeffs));
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the linear form is zero");
  Poly f = resultant(m, b);
  f.widen(n);
  return f;
}

SosTwoWitness real_sos2_witness(const UniPolyQ& m, const LinearForm& l, unsigned precision_bits) {
  if (sturm_real_roots(m) != 0)
    throw Error(ErrorKind::NotTotallyImaginary, to_string(m) + " has real roots");
  Poly f = norm_form(m, l);
  RootSystem rs = isolate_roots(m, precision_bits, std::max(precision_bits, 1024u));
  const unsigned bits = rs.precision_bits;
  const unsigned n = static_cast<unsigned>(l.size());
  BasicPoly<ComplexF> g(n, ComplexF(mpf_class(1, bits), mpf_class(0, bits)));
  for (const auto& box : rs.boxes) {
    if (box.center.im.sign() <= 0) continue;
    BasicPoly<ComplexF> lin(n);
    for (unsigned j = 0; j < n; ++j) {
      Monomial mono(n, 0);
      mono[j] = 1;
      lin.add_term(mono, eval_at(l[j], box.approx, bits));
    }
    g = g * lin;
  }
  SosTwoWitness w;
  w.precision_bits = bits;
  w.g_re = BasicPoly<mpf_class>(n);
  w.g_im = BasicPoly<mpf_class>(n);
  for (const auto& [mono, c] : g.terms()) {
    w.g_re.add_term(mono, c.re);
    w.g_im.add_term(mono, c.im);
  }
  BasicPoly<mpf_class> sum = w.g_re * w.g_re + w.g_im * w.g_im;
  BasicPoly<mpf_class> fx = f.map_coeffs([bits](const Rational& q) { return to_mpf(q, bits); });
  mpf_class worst(0, bits);
  const auto diff = fx - sum;
  for (const auto& [mono, c] : diff.terms()) {
    mpf_class a = abs(c);
    if (a > worst) worst = a;
  }
  w.residual = worst;
  return w;
}

const char* to_string(GeneralPosition g) {
  switch (g) {
    case GeneralPosition::ExactVandermonde: return "ExactVandermonde";
    case GeneralPosition::NumericCertified: return "NumericCertified";
    case GeneralPosition::Inconclusive: return "Inconclusive";
  }
  return "?";
}

GeneralPositionResult general_position(const UniPolyQ& m, const LinearForm& l, unsigned precision_bits,
                                       unsigned max_bits) {
  GeneralPositionResult r;
  if (!is_squarefree(m)) {
    r.note = "minimal polynomial is not squarefree";
    return r;
  }
  if (l.size() > 3) {
    r.note = "only ternary linear forms are handled";
    return r;
  }
  const std::size_t k = static_cast<std::size_t>(m.degree());
  r.triples = k * (k - 1) * (k - 2) / 6;
  if (is_canonical(l)) {
    r.verdict = GeneralPosition::ExactVandermonde;
    r.note = "3x3 minors are Vandermonde determinants in distinct roots";
    return r;
  }
  LinearForm lf = l;
  lf.resize(3);
  for (unsigned bits = std::max(precision_bits, 64u); bits <= max_bits; bits *= 2) {
    RootSystem rs;
    try {
      rs = isolate_roots(m, bits, bits);
    } catch (const Error&) {
      continue;
    }
    const unsigned grid = 2 * bits + 16;
    std::vector<std::array<ComplexInterval, 3>> rows;
    for (const auto& box : rs.boxes) {
      std::array<ComplexInterval, 3> row;
      for (std::size_t j = 0; j < 3; ++j) row[j] = evaluate(lf[j], box.interval(), grid);
      rows.push_back(row);
    }
    bool all = true;
    for (std::size_t a = 0; a < k && all; ++a)
      for (std::size_t b = a + 1; b < k && all; ++b)
        for (std::size_t c = b + 1; c < k && all; ++c) {
          const auto &x = rows[a], &y = rows[b], &z = rows[c];
          ComplexInterval det = (x[0] * ((y[1] * z[2]).rounded(grid) - (y[2] * z[1]).rounded(grid))).rounded(grid) -
                                (x[1] * ((y[0] * z[2]).rounded(grid) - (y[2] * z[0]).rounded(grid))).rounded(grid) +
                                (x[2] * ((y[0] * z[1]).rounded(grid) - (y[1] * z[0]).rounded(grid))).rounded(grid);
          if (det.contains_zero()) all = false;
        }
    r.precision_bits = bits;
    if (all) {
      r.verdict = GeneralPosition::NumericCertified;
      r.note = "every triple determinant excludes 0 at " + bits_note(bits);
      return r;
    }
  }
  r.verdict = GeneralPosition::Inconclusive;
  r.note = "some triple determinant still contains 0 at " + bits_note(max_bits);
  return r;
}

namespace {

Rational cubic_discriminant(const UniPolyQ& p) {
  const Rational a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
  return Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c - Rational(4) * a * c * c * c -
         Rational(27) * a * a * d * d;
}

// Rational roots of p whose denominators divide den.
std::vector<Rational> rational_roots(const UniPolyQ& p, const Integer& den) {
  std::vector<Rational> out;
  for (auto iv : isolate_real_roots(p, Rational(1, den * 4))) {
    mpz_class lo;
    Rational scaled = iv.lo * Rational(den);
    mpz_fdiv_q(lo.get_mpz_t(), scaled.numerator().get_mpz_t(), scaled.denominator().get_mpz_t());
    for (mpz_class k = lo; k <= lo + 2; ++k) {
      Rational cand(k, den);
      if (cand > iv.lo && cand <= iv.hi && p.evaluate(cand).is_zero()) out.push_back(cand);
    }
  }
  return out;
}

bool splits_over(const Rational& disc, const Rational& delta) {
  return disc.is_zero() || is_square(disc) || is_square(disc * delta);
}

Integer nearest_integer(const mpf_class& x) {
  mpf_class y = x + 0.5;
  mpf_class f = floor(y);
  return Integer(f);
}

}  // namespace

QuarticGalois quartic_galois(const UniPolyQ& m_in, unsigned precision_bits) {
  if (m_in.degree() != 4) throw Error(ErrorKind::InvalidArgument, "quartic_galois needs a degree-4 polynomial");
  const UniPolyQ m = monic(m_in);
  if (!is_squarefree(m)) throw Error(ErrorKind::Reducible, to_string(m) + " has a repeated factor");
  const Rational a = m.coeff(3), b = m.coeff(2), c = m.coeff(1), d = m.coeff(0);
  Integer den = 1;
  for (const auto& x : {a, b, c, d}) den = lcm(den, x.denominator());
  const Rational D(den);
  // M(s) = D^4 m(s / D) is monic with integer coefficients.
  const UniPolyQ big(std::vector<Rational>{d * pow(D, 4), c * pow(D, 3), b * D * D, a * D, Rational(1)});

  QuarticGalois q;
  q.roots = isolate_roots(m, precision_bits, std::max(precision_bits, 1024u));
  const unsigned bits = q.roots.precision_bits;
  const auto& boxes = q.roots.boxes;
  const mpf_class Df(D.value(), bits);

  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (q.roots.tau(static_cast<int>(i)) != static_cast<int>(i)) continue;
    Integer k = nearest_integer(boxes[i].approx.re * Df);
    for (Integer cand = k - 1; cand <= k + 1; ++cand)
      if (big.evaluate(Rational(cand)).is_zero())
        throw Error(ErrorKind::Reducible, to_string(m) + " has the rational root " + Rational(cand, den).str());
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      ComplexF s = boxes[i].approx + boxes[j].approx, p = boxes[i].approx * boxes[j].approx;
      Integer si = nearest_integer(s.re * Df), pi = nearest_integer(p.re * Df * Df);
      UniPolyQ quad(std::vector<Rational>{Rational(pi), Rational(Integer(-si)), Rational(1)});
      if (divmod(big, quad).second.is_zero())
        throw Error(ErrorKind::Reducible, to_string(m) + " has a rational quadratic factor");
    }

  q.resolvent = UniPolyQ(std::vector<Rational>{-(a * a * d - Rational(4) * b * d + c * c), a * c - Rational(4) * d, -b, Rational(1)});
  q.discriminant = cubic_discriminant(q.resolvent);
  auto rr = rational_roots(q.resolvent, den * den);

  std::vector<Perm> gens;
  if (rr.empty()) {
    q.label = is_square(q.discriminant) ? "A4" : "S4";
    gens = q.label == "A4" ? parse_generators("(1 2 3),(2 3 4)") : parse_generators("(1 2 3 4),(1 2)");
  } else if (rr.size() == 3) {
    q.label = "V4";
    gens = parse_generators("(1 2)(3 4),(1 3)(2 4)");
  } else {
    const Rational r = rr.front();
    const bool cyclic = splits_over(r * r - Rational(4) * d, q.discriminant) &&
                        splits_over(a * a - Rational(4) * (b - r), q.discriminant);
    q.label = cyclic ? "C4" : "D4";
    // Find the pairing {i,j},{k,l} with r_i r_j + r_k r_l = r.
    const std::array<std::array<int, 4>, 3> parts = {{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    int found = -1;
    for (unsigned b2 = bits; b2 <= 4096 && found < 0; b2 *= 2) {
      RootSystem rs = b2 == bits ? q.roots : isolate_roots(m, b2, b2);
      int hits = 0;
      for (int idx = 0; idx < 3; ++idx) {
        const auto& pt = parts[static_cast<std::size_t>(idx)];
        ComplexInterval th = (rs.boxes[pt[0]].interval() * rs.boxes[pt[1]].interval()) +
                             (rs.boxes[pt[2]].interval() * rs.boxes[pt[3]].interval());
        if (th.contains(r)) {
          ++hits;
          found = idx;
        }
      }
      if (hits != 1) found = -1;
    }
    if (found < 0) throw Error(ErrorKind::PrecisionExhausted, "could not locate the resolvent pairing");
    const auto [i, j, k, l] = parts[static_cast<std::size_t>(found)];
    auto pt = [](int x) { return std::to_string(x + 1); };
    if (cyclic) gens = parse_generators("(" + pt(i) + " " + pt(k) + " " + pt(j) + " " + pt(l) + ")", 4);
    else gens = parse_generators("(" + pt(i) + " " + pt(j) + "),(" + pt(i) + " " + pt(k) + ")(" + pt(j) + " " + pt(l) + ")", 4);
  }
  for (auto& g : gens) g = g.extended(4);
  q.group.degree = 4;
  q.group.generators = gens;
  q.group.label = q.label;
  return q;
}

const char* to_string(Conclusion c) { return c == Conclusion::NotQSos ? "NotQSos" : "NoObstruction"; }

std::string ObstructionCert::str() const {
  std::ostringstream o;
  o << "certificate: obstruction\n";
  o << "minpoly: " << minpoly << "\n";
  o << "degree: " << 2 * d << "\n";
  o << "d: " << d << "\n";
  if (!norm_form.empty()) o << "norm_form: " << norm_form << "\n";
  o << "sturm_real_roots: " << sturm_real_roots << "\n";
  o << "totally_imaginary: " << (totally_imaginary ? "yes" : "no") << "\n";
  o << "squarefree: " << (squarefree ? "yes" : "no") << "\n";
  o << "general_position: " << to_string(general_position.verdict) << "\n";
  if (!general_position.note.empty()) o << "general_position_note: " << general_position.note << "\n";
  if (!galois_label.empty()) o << "galois_group: " << galois_label << "\n";
  if (!tau.empty()) o << "tau: " << tau << "\n";
  o << "tau_in_group: " << (tau_membership_verified ? "verified" : "unverified") << "\n";
  if (c) o << "c: " << *c << "\n";
  o << "threshold_d_plus_1: " << d + 1 << "\n";
  o << "conclusion: " << to_string(conclusion) << "\n";
  if (!failing_check.empty()) o << "failing_check: " << failing_check << "\n";
  for (const auto& n : narrative) o << "check: " << n << "\n";
  return o.str();
}

ObstructionCert obstruction_check(const UniPolyQ& m, const LinearForm& l, const std::optional<GaloisData>& galois,
                                  unsigned precision_bits, std::size_t bound) {
  if (m.degree() < 4)
    throw Error(ErrorKind::DegreeTooSmall, "the field degree must be at least 4, got " + std::to_string(m.degree()));
  if (m.lead() != 1) throw Error(ErrorKind::NotMonic, to_string(m) + " is not monic");
  if (!galois && m.degree() > 4)
    throw Error(ErrorKind::GaloisDataMissing, "Galois data must be supplied for degree " + std::to_string(m.degree()));

  ObstructionCert cert;
  cert.minpoly = to_string(m);
  cert.d = m.degree() / 2;
  auto fail = [&cert](const std::string& check) {
    if (cert.failing_check.empty()) cert.failing_check = check;
  };

  cert.sturm_real_roots = sturm_real_roots(m);
  cert.totally_imaginary = cert.sturm_real_roots == 0 && m.degree() % 2 == 0;
  cert.narrative.push_back("sturm chain: " + std::to_string(cert.sturm_real_roots) + " real roots (exact)");
  if (!cert.totally_imaginary) fail("totally_imaginary");

  cert.squarefree = is_squarefree(m);
  cert.narrative.push_back(std::string("gcd(m, m') ") + (cert.squarefree ? "is 1" : "is nontrivial"));
  if (!cert.squarefree) {
    fail("squarefree");
    return cert;
  }
  cert.norm_form = to_string(norm_form(m, l));

  cert.general_position = general_position(m, l, precision_bits);
  cert.narrative.push_back(std::string("general position: ") + to_string(cert.general_position.verdict));
  if (cert.general_position.verdict == GeneralPosition::Inconclusive) fail("general_position");

  GaloisData g;
  RootSystem rs = isolate_roots(m, precision_bits, std::max(precision_bits, 1024u));
  if (galois) {
    g = *galois;
  } else {
    QuarticGalois qg = quartic_galois(m, precision_bits);
    g.label = qg.label;
    g.group = qg.group;
    rs = qg.roots;
    cert.narrative.push_back("resolvent cubic " + to_string(qg.resolvent, "y") + ", discriminant " +
                             qg.discriminant.str() + " -> " + qg.label);
  }
  cert.galois_label = g.label.empty() ? g.group.label : g.label;
  cert.narrative.push_back("roots isolated at " + bits_note(rs.precision_bits));
  if (g.group.degree != m.degree())
    throw Error(ErrorKind::DimensionMismatch, "Galois group degree does not match the field degree");
  if (!cert.totally_imaginary) return cert;

  g.tau = rs.tau;
  cert.tau = rs.tau.str();
  try {
    auto elements = enumerate(g.group, bound);
    cert.tau_membership_verified = std::find(elements.begin(), elements.end(), rs.tau) != elements.end();
    if (!cert.tau_membership_verified) {
      cert.narrative.push_back("complex conjugation " + cert.tau + " is not in the supplied group");
      fail("tau_in_group");
      return cert;
    }
    cert.narrative.push_back("complex conjugation " + cert.tau + " lies in G (|G| = " + std::to_string(elements.size()) + ")");
  } catch (const OrderExceeded&) {
    cert.narrative.push_back("membership of tau in G unverified: group order exceeds " + std::to_string(bound));
  }
  cert.c = char_number(g.group, g.tau);
  cert.narrative.push_back("c(G,X,tau) = " + std::to_string(*cert.c) + " by pair-orbit closure");
  if (*cert.c < cert.d + 1) fail("c >= d+1");
  cert.conclusion = cert.failing_check.empty() ? Conclusion::NotQSos : Conclusion::NoObstruction;
  return cert;
}

}  // namespace qsos
