#include "qsos/boundary.hpp"

#include <sstream>

#include "qsos/errors.hpp"

namespace qsos {

namespace {

Rational monomial_value(const Monomial& m, const PointQ& x) {
  Rational v(1);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) v *= pow(x[i], static_cast<int>(m[i]));
  return v;
}

bool proportional(const PointQ& a, const PointQ& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_zero() != b[i].is_zero()) return false;
  return true;
}

std::vector<Poly> rows_to_polys(const MatrixQ& rows, unsigned n, unsigned d) {
  std::vector<Poly> out;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) out.push_back(poly_from_vector(rows.row(i).transpose(), n, d));
  return out;
}

unsigned form_degree(const std::vector<Poly>& u) {
  for (const auto& p : u)
    if (!p.is_zero()) return static_cast<unsigned>(p.degree());
  return 0;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

}  // namespace

PointConfig PointConfig::parse(std::string_view text) {
  PointConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    PointQ p = parse_tuple(line);
    if (!cfg.points.empty() && p.size() != cfg.points.front().size())
      throw Error(ErrorKind::DimensionMismatch, "point '" + line + "' has the wrong number of coordinates");
    cfg.points.push_back(std::move(p));
  }
  return cfg;
}

std::string PointConfig::str() const {
  std::string s;
  for (const auto& p : points) s += join(p) + "\n";
  return s;
}

PointConfig demo_points() {
  return PointConfig::parse("1,1,1\n-1,1,1\n1,-1,1\n1,1,-1\n0,1,1\n0,1,-1\n1,0,1\n1,0,-1\n0,0,1\n");
}

std::vector<Rational> demo_tuple() { return {1, 1, 1, 1, 4, 4, 4, 4, -2}; }

std::vector<Poly> demo_cubics() {
  return parse_poly_list("x1*(x1^2 - x3^2); x2*(x2^2 - x3^2); (3*x1^2 + 3*x2^2 - 4*x3^2)*x3", 3);
}

std::vector<Rational> parse_tuple(std::string_view text) {
  std::vector<Rational> out;
  std::string cur;
  auto flush = [&] {
    auto a = cur.find_first_not_of(" \t\r"), b = cur.find_last_not_of(" \t\r");
    if (a == std::string::npos) throw Error(ErrorKind::Parse, "empty entry in '" + std::string(text) + "'");
    out.push_back(Rational::parse(cur.substr(a, b - a + 1)));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

MatrixQ evaluation_matrix(const PointConfig& cfg, unsigned d) {
  auto basis = monomial_basis(cfg.nvars(), d);
  MatrixQ e(static_cast<Eigen::Index>(cfg.points.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = monomial_value(basis[j], cfg.points[i]);
  return e;
}

std::vector<Rational> cb_relation(const PointConfig& cfg) {
  if (cfg.points.size() != 9 || cfg.nvars() != 3)
    throw Error(ErrorKind::DimensionMismatch, "expected nine points in three coordinates");
  for (std::size_t i = 0; i < 9; ++i) {
    bool zero = true;
    for (const auto& c : cfg.points[i]) zero = zero && c.is_zero();
    if (zero) throw Error(ErrorKind::InvalidArgument, "point " + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j)
      if (proportional(cfg.points[i], cfg.points[j]))
        throw Error(ErrorKind::DuplicatePoint,
                    "points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide projectively");
  }
  MatrixQ e = evaluation_matrix(cfg, 3);
  MatrixQ left = nullspace(e.transpose());
  if (left.cols() != 1)
    throw Error(ErrorKind::NotCayleyBacharach, "the cubic evaluation map has a " + std::to_string(left.cols()) +
                                                   "-dimensional space of relations");
  Integer den(1);
  for (Eigen::Index i = 0; i < left.rows(); ++i) den = lcm(den, left(i, 0).denominator());
  Integer content(0);
  std::vector<Rational> u;
  for (Eigen::Index i = 0; i < left.rows(); ++i) {
    u.push_back(left(i, 0) * Rational(den));
    content = gcd(content, u.back().numerator());
  }
  Rational scale(Integer(1), content);
  for (const auto& x : u)
    if (!x.is_zero()) {
      if (x.sign() < 0) scale = -scale;
      break;
    }
  for (auto& x : u) x *= scale;
  return u;
}

TupleCheck check_tuple(const std::vector<Rational>& u, const std::vector<Rational>& a) {
  if (u.size() != a.size()) throw Error(ErrorKind::DimensionMismatch, "tuple and relation lengths differ");
  TupleCheck t;
  t.nonzero = true;
  int negative = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) {
      t.nonzero = false;
      continue;
    }
    if (a[i].sign() < 0) ++negative;
    t.relation += u[i] * u[i] / a[i];
  }
  t.one_negative = negative == 1;
  return t;
}

Rational LinearFunctional::operator()(const Poly& f) const {
  if (f.is_zero()) return Rational(0);
  return coeffs.dot(coefficient_vector(f, n, degree));
}

std::string LinearFunctional::str() const {
  std::string s;
  auto basis = monomial_basis(n, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    s += monomial_str(basis[i], "x") + " " + coeffs(static_cast<Eigen::Index>(i)).str() + "\n";
  return s;
}

LinearFunctional LinearFunctional::parse(std::string_view text, unsigned n, unsigned degree) {
  auto basis = monomial_basis(n, degree);
  LinearFunctional a{n, degree, VectorQ::Zero(static_cast<Eigen::Index>(basis.size()))};
  std::vector<bool> seen(basis.size(), false);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string mono, value;
    if (!(ls >> mono >> value)) throw Error(ErrorKind::Parse, "expected '<monomial> <rational>' in '" + line + "'");
    Poly m = parse_poly(mono, n);
    if (m.terms().size() != 1 || m.terms().begin()->second != Rational(1) || m.degree() != static_cast<int>(degree) ||
        m.nvars() != n)
      throw Error(ErrorKind::Parse, "'" + mono + "' is not a monomial of degree " + std::to_string(degree));
    const std::size_t idx = monomial_index(m.terms().begin()->first);
    if (seen[idx]) throw Error(ErrorKind::Parse, "monomial '" + mono + "' given twice");
    seen[idx] = true;
    a.coeffs(static_cast<Eigen::Index>(idx)) = Rational::parse(value);
  }
  return a;
}

LinearFunctional functional_from_tuple(const PointConfig& cfg, const std::vector<Rational>& a, unsigned degree) {
  if (a.size() != cfg.points.size()) throw Error(ErrorKind::DimensionMismatch, "one weight per point is required");
  MatrixQ e = evaluation_matrix(cfg, degree);
  VectorQ w(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) w(static_cast<Eigen::Index>(i)) = a[i];
  return {cfg.nvars(), degree, e.transpose() * w};
}

SymMatrix moment_matrix(const LinearFunctional& alpha) {
  if (alpha.degree % 2) throw Error(ErrorKind::InvalidArgument, "moment matrix needs an even degree");
  auto basis = monomial_basis(alpha.n, alpha.degree / 2);
  const auto size = static_cast<Eigen::Index>(basis.size());
  MatrixQ b(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = i; j < size; ++j)
      b(i, j) = b(j, i) = alpha.coeffs(static_cast<Eigen::Index>(
          monomial_index(basis[static_cast<std::size_t>(i)] + basis[static_cast<std::size_t>(j)])));
  return SymMatrix(std::move(b));
}

std::vector<Poly> kernel_U(const SymMatrix& b, unsigned n, unsigned d) {
  auto v = psd_check(b);
  if (!v.psd)
    throw Error(ErrorKind::NotPsd, "the bilinear form is not psd (v^T B v = " + v.witness_value.str() + ")");
  MatrixQ ker = nullspace(b.matrix());
  if (ker.cols() == 0) return {};
  MatrixQ rows = row_space(ker.transpose());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    Integer den(1), content(0);
    for (Eigen::Index j = 0; j < rows.cols(); ++j) den = lcm(den, rows(i, j).denominator());
    for (Eigen::Index j = 0; j < rows.cols(); ++j) content = gcd(content, (rows(i, j) * Rational(den)).numerator());
    rows.row(i) *= Rational(den, content);
  }
  return rows_to_polys(rows, n, d);
}

Poly assemble_sextic(const std::vector<Poly>& qs) {
  if (qs.empty()) throw Error(ErrorKind::EmptyInput, "no forms given");
  unsigned n = 0;
  for (const auto& q : qs) n = std::max(n, q.nvars());
  const unsigned d = form_degree(qs);
  MatrixQ rows(static_cast<Eigen::Index>(qs.size()), static_cast<Eigen::Index>(monomial_basis(n, d).size()));
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i].is_zero()) throw Error(ErrorKind::LinearlyDependent, "the zero form is not allowed");
    rows.row(static_cast<Eigen::Index>(i)) = coefficient_vector(qs[i], n, d).transpose();
  }
  if (rank(rows) != rows.rows()) throw Error(ErrorKind::LinearlyDependent, "the forms are linearly dependent");
  Poly f(n);
  for (const auto& q : qs) f += q * q;
  return f;
}

MatrixQ ideal_part(const std::vector<Poly>& u, unsigned n, unsigned k) {
  const unsigned d = form_degree(u);
  const auto size = static_cast<Eigen::Index>(monomial_basis(n, k).size());
  if (k < d || u.empty()) return MatrixQ(0, size);
  auto shifts = monomial_basis(n, k - d);
  MatrixQ gens(static_cast<Eigen::Index>(shifts.size() * u.size()), size);
  Eigen::Index row = 0;
  for (const auto& g : shifts)
    for (const auto& p : u) {
      Poly prod = p.is_zero() ? Poly(n) : Poly::monomial(g) * p;
      gens.row(row++) = prod.is_zero() ? VectorQ::Zero(size).transpose().eval() : coefficient_vector(prod, n, k).transpose().eval();
    }
  return row_space(gens);
}

MatrixQ functional_kernel(const LinearFunctional& alpha) {
  MatrixQ ker = nullspace(alpha.coeffs.transpose());
  return row_space(ker.transpose());
}

std::vector<std::size_t> hilbert_function(const std::vector<Poly>& u, unsigned n, unsigned max_k) {
  std::vector<std::size_t> h;
  for (unsigned k = 0; k <= max_k; ++k)
    h.push_back(monomial_basis(n, k).size() - static_cast<std::size_t>(ideal_part(u, n, k).rows()));
  return h;
}

const char* to_string(ZeroSet z) { return z == ZeroSet::Empty ? "Empty" : "NonEmpty"; }

ZeroSet empty_zero_check(const std::vector<Poly>& u, unsigned n) {
  const unsigned d = form_degree(u);
  if (d == 0) return ZeroSet::NonEmpty;
  const unsigned k = n * (d - 1) + 1;
  return static_cast<std::size_t>(ideal_part(u, n, k).rows()) == monomial_basis(n, k).size() ? ZeroSet::Empty
                                                                                             : ZeroSet::NonEmpty;
}

const char* to_string(Positivity p) { return p == Positivity::StrictlyPositive ? "StrictlyPositive" : "Inconclusive"; }

PositivityCert strict_positivity_cert(const Poly& f, const std::vector<Poly>& u) {
  if (u.empty()) throw Error(ErrorKind::EmptyInput, "no forms given");
  unsigned n = f.nvars();
  for (const auto& p : u) n = std::max(n, p.nvars());
  PositivityCert c;
  Poly sum(n);
  for (const auto& p : u) sum += p * p;
  if (sum == f) {
    c.squares = u;
  } else {
    try {
      c.squares = extract_qsos(f, u).expanded;
    } catch (const Error& e) {
      throw Error(ErrorKind::NotASumOverU, std::string("f is not a sum of squares from span(U): ") + e.what());
    }
  }
  c.zero_set = empty_zero_check(u, n);
  c.hilbert = hilbert_function(u, n, n * (form_degree(u) - 1) + 1);
  c.verdict = c.zero_set == ZeroSet::Empty ? Positivity::StrictlyPositive : Positivity::Inconclusive;
  return c;
}

std::string BoundaryCert::str() const {
  std::ostringstream os;
  os << "certificate: boundary\n"
     << "moment_psd: " << (psd ? "yes" : "no") << "\n"
     << "moment_rank: " << psd_rank << "\n"
     << "kernel_dim: " << kernel_dim << "\n"
     << "alpha(f): " << alpha_f.str() << "\n"
     << "gram_witness: " << (witness ? witness_source : std::string("none")) << "\n"
     << "verdict: " << (certified ? "certified" : "rejected") << "\n";
  if (!reason.empty()) os << "reason: " << reason << "\n";
  return os.str();
}

BoundaryCert boundary_cert(const Poly& f, const LinearFunctional& alpha, const std::optional<GramPoint>& witness) {
  BoundaryCert c;
  SymMatrix b = moment_matrix(alpha);
  auto v = psd_check(b);
  c.psd = v.psd;
  c.alpha_f = alpha(f);
  if (v.psd) {
    c.psd_rank = static_cast<std::size_t>(v.rank);
    c.kernel_dim = static_cast<std::size_t>(b.size() - v.rank);
  } else {
    c.psd_rank = static_cast<std::size_t>(rank(b.matrix()));
    c.kernel_dim = static_cast<std::size_t>(b.size()) - c.psd_rank;
  }
  if (!c.psd) c.reason = "b_alpha is not psd, so alpha is not in the dual cone";
  else if (c.psd_rank < 2) c.reason = "b_alpha has rank " + std::to_string(c.psd_rank) + ", alpha is a point evaluation or zero";
  else if (!c.alpha_f.is_zero()) c.reason = "alpha(f) = " + c.alpha_f.str() + " is not zero";
  if (!c.reason.empty()) return c;

  if (witness) {
    if (!is_gram_point(*witness, f).ok())
      throw Error(ErrorKind::MissingGramWitness, "the supplied Gram matrix is not a psd Gram matrix of f");
    c.witness = witness;
    c.witness_source = "supplied";
  } else {
    try {
      auto u = kernel_U(b, alpha.n, alpha.degree / 2);
      auto w = extract_qsos(f, u);
      c.witness = gram_from_squares(w.expanded);
      c.witness_source = "derived";
    } catch (const Error& e) {
      throw Error(ErrorKind::MissingGramWitness,
                  std::string("no sos representation of f was supplied or derived: ") + e.what());
    }
  }
  c.certified = true;
  return c;
}

const char* to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::Singleton: return "Singleton";
    case Uniqueness::Inconclusive: return "Inconclusive";
    case Uniqueness::Contradiction: return "Contradiction";
  }
  return "?";
}

std::string UniquenessCert::str() const {
  std::ostringstream os;
  os << "certificate: uniqueness\n";
  for (std::size_t i = 0; i < kernel.size(); ++i) os << "kernel[" << i + 1 << "]: " << to_string(kernel[i]) << "\n";
  os << "quadratically_independent: " << (quadratically_independent ? "yes" : "no") << "\n";
  if (q.size()) {
    os << "gram_on_kernel:\n";
    for (Eigen::Index i = 0; i < q.rows(); ++i) {
      os << " ";
      for (Eigen::Index j = 0; j < q.cols(); ++j) os << " " << q(i, j).str();
      os << "\n";
    }
    os << "gram_psd: " << (psd ? "yes" : "no") << "\n";
  }
  if (!representation.empty()) {
    os << "representation: f =";
    for (std::size_t j = 0; j < representation.size(); ++j)
      os << (j ? " + (" : " (") << to_string(representation[j]) << ")^2";
    os << "\n";
  }
  os << "verdict: " << to_string(verdict) << "\n";
  if (!note.empty()) os << "note: " << note << "\n";
  return os.str();
}

UniquenessCert uniqueness_cert(const Poly& f, const LinearFunctional& alpha) {
  BoundaryCert bc = boundary_cert(f, alpha);
  if (!bc.certified) throw Error(ErrorKind::InvalidArgument, "boundary certificate rejected: " + bc.reason);
  UniquenessCert c;
  c.kernel = kernel_U(moment_matrix(alpha), alpha.n, alpha.degree / 2);
  // <G, B> = alpha(f) = 0 with both psd forces every Gram matrix of f onto the kernel.
  c.quadratically_independent = face_dimension(c.kernel).quadratically_independent();
  if (!c.quadratically_independent) {
    c.note = "the kernel forms are not quadratically independent; this path cannot decide uniqueness";
    return c;
  }
  try {
    auto w = extract_qsos(f, c.kernel);
    c.q = w.a;
    c.psd = true;
    c.representation = w.polys;
    for (std::size_t k = 0; k < w.polys.size(); ++k)
      if (w.weights[k] != Rational(1)) c.representation = w.expanded;
    c.verdict = Uniqueness::Singleton;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPsd) throw;
    c.verdict = Uniqueness::Contradiction;
    c.note = std::string("f has no psd Gram matrix on the kernel, so f is not a sum of squares: ") + e.what();
  }
  return c;
}

InteriorEvidence interior_evidence(const std::vector<Poly>& rep1, const std::vector<Poly>& rep2) {
  InteriorEvidence ev;
  auto g1 = gram_from_squares(rep1), g2 = gram_from_squares(rep2);
  ev.same_form = mu(g1) == mu(g2);
  ev.span1 = span_basis(g1);
  ev.span2 = span_basis(g2);
  ev.spans_differ = !(ev.span1 == ev.span2);
  return ev;
}

}  // namespace qsos
