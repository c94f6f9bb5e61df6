#include "qsos/gram.hpp"

#include <sstream>
#include <stdexcept>

#include "qsos/determinant.hpp"
#include "qsos/errors.hpp"
#include "qsos/foursquares.hpp"

namespace qsos {

namespace {

struct FormShape {
  unsigned n = 0;
  unsigned d = 0;
};

FormShape common_shape(const std::vector<Poly>& ps, const char* what) {
  if (ps.empty()) throw Error(ErrorKind::EmptyInput, std::string(what) + ": no polynomials given");
  FormShape s;
  int deg = -1;
  for (const auto& p : ps) {
    s.n = std::max(s.n, p.nvars());
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || (deg >= 0 && p.degree() != deg))
      throw Error(ErrorKind::HeterogeneousDegrees,
                  std::string(what) + ": '" + to_string(p) + "' does not match the other degrees");
    deg = p.degree();
  }
  if (deg < 0) throw Error(ErrorKind::EmptyInput, std::string(what) + ": all polynomials are zero");
  s.d = static_cast<unsigned>(deg);
  return s;
}

// Rows are coefficient vectors.
MatrixQ coefficient_rows(const std::vector<Poly>& ps, unsigned n, unsigned d) {
  const auto size = static_cast<Eigen::Index>(monomial_basis(n, d).size());
  MatrixQ m(static_cast<Eigen::Index>(ps.size()), size);
  for (std::size_t i = 0; i < ps.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) =
        ps[i].is_zero() ? VectorQ::Zero(size).transpose().eval() : coefficient_vector(ps[i], n, d).transpose().eval();
  return m;
}

// Columns are the coefficient vectors of p_i p_j, i <= j.
MatrixQ product_columns(const std::vector<Poly>& ps, unsigned n, unsigned d) {
  const std::size_t r = ps.size();
  const auto size = static_cast<Eigen::Index>(monomial_basis(n, 2 * d).size());
  MatrixQ m(size, static_cast<Eigen::Index>(r * (r + 1) / 2));
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) m.col(col++) = coefficient_vector(ps[i] * ps[j], n, 2 * d);
  return m;
}

// Symmetric matrix from coordinates on the products p_i p_j, i <= j.
MatrixQ sym_from_products(const VectorQ& x, std::size_t r) {
  MatrixQ a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j, ++k) {
      if (i == j) a(i, i) = x(k);
      else a(i, j) = a(j, i) = x(k) / 2;
    }
  return a;
}

struct SpanCoords {
  MatrixQ rows;  // echelon basis, r x N
  std::vector<Eigen::Index> pivots;
};

SpanCoords span_coords(const GramPoint& g) {
  auto v = psd_check(g.matrix);
  if (!v.psd)
    throw Error(ErrorKind::NotPsd, "Gram matrix is not positive semidefinite (witness value " +
                                       v.witness_value.str() + ")");
  auto e = row_reduce(g.matrix.matrix());
  return {e.rref.topRows(e.rank()), e.pivots};
}

MatrixQ restrict_to(const MatrixQ& m, const std::vector<Eigen::Index>& p) {
  MatrixQ q(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(p[i], p[j]);
  return q;
}

Integer floor_of(const Rational& x) {
  Integer a;
  mpz_fdiv_q(a.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return a;
}

// Rational of least denominator in the open interval (lo, hi), 0 <= lo < hi;
// an absent hi means +infinity.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
  Integer a = floor_of(lo);
  if (!hi || Rational(a + 1) < *hi) return Rational(a + 1);
  // Here a <= lo < hi <= a + 1.
  Rational top = Rational(1) / (*hi - Rational(a));
  std::optional<Rational> bottom;
  if (lo != Rational(a)) bottom = Rational(1) / (lo - Rational(a));
  return Rational(a) + Rational(1) / simplest_between(top, bottom);
}

struct Boundary {
  UniPolyQ det;
  RealInterval iv;
  std::optional<Rational> exact;
};

// First root of det(q0 + s dir) strictly above `above`. q0 + s dir is
// positive definite on [0, above], so `above` itself is not a root.
std::optional<Boundary> first_boundary(const MatrixQ& q0, const MatrixQ& dir, const Rational& above) {
  const auto r = static_cast<std::size_t>(q0.rows());
  RingMatrix<UniPolyQ> m(r, std::vector<UniPolyQ>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      m[i][j] = UniPolyQ(std::vector<Rational>{q0(ii, jj), dir(ii, jj)});
    }
  Boundary b;
  b.det = determinant(m);
  if (b.det.degree() < 1) return std::nullopt;
  UniPolyQ sq = divmod(b.det, gcd(b.det, b.det.derivative())).first;
  auto chain = sturm_chain(sq);
  std::optional<RealInterval> found;
  for (auto iv : isolate_real_roots(sq)) {
    if (iv.hi <= above) continue;
    while (iv.lo < above) {
      Rational mid = (iv.lo + iv.hi) / 2;
      if (sturm_count(chain, iv.lo, mid) > 0) iv.hi = mid;
      else iv.lo = mid;
    }
    if (iv.hi <= above) continue;
    found = iv;
    break;
  }
  if (!found) return std::nullopt;
  // A rational root p/q has q dividing the leading coefficient L of the
  // primitive integer polynomial; two such fractions differ by >= 1/L^2.
  Rational lead = abs(primitive_part(sq).lead());
  Rational width = Rational(1) / (Rational(2) * lead * lead);
  b.iv = refine_root(chain, *found, width);
  Rational cand = sq.evaluate(b.iv.hi).is_zero() ? b.iv.hi : simplest_between(b.iv.lo, b.iv.hi);
  if (sq.evaluate(cand).is_zero()) b.exact = cand;
  else b.iv = refine_root(chain, b.iv, Rational(1, Integer(mpz_class(1) << 64)));
  return b;
}

MatrixQ expand_from_span(const MatrixQ& rows, const MatrixQ& q) { return rows.transpose() * q * rows; }

}  // namespace

std::string GramPoint::str() const {
  std::ostringstream os;
  os << "# gram n=" << n << " d=" << d << "\n# basis";
  for (const auto& m : basis()) os << ' ' << monomial_str(m, "x");
  os << '\n';
  const auto& a = matrix.matrix();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j).str();
    os << '\n';
  }
  return os.str();
}

GramPoint GramPoint::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  GramPoint g;
  bool header = false;
  std::vector<std::vector<Rational>> rows;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      unsigned n = 0, d = 0;
      if (std::sscanf(line.c_str() + first, "# gram n=%u d=%u", &n, &d) == 2) {
        g.n = n;
        g.d = d;
        header = true;
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) row.push_back(Rational::parse(tok));
    rows.push_back(std::move(row));
  }
  if (!header) throw Error(ErrorKind::Parse, "missing '# gram n=.. d=..' header");
  const std::size_t size = monomial_basis(g.n, g.d).size();
  if (rows.size() != size)
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(size) + " rows, found " + std::to_string(rows.size()));
  MatrixQ m(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (std::size_t i = 0; i < size; ++i) {
    if (rows[i].size() != size)
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i + 1) + " has " +
                                                    std::to_string(rows[i].size()) + " entries");
    for (std::size_t j = 0; j < size; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  g.matrix = SymMatrix(std::move(m));
  return g;
}

GramPoint gram_from_squares(const std::vector<Poly>& squares) {
  auto s = common_shape(squares, "gram_from_squares");
  MatrixQ u = coefficient_rows(squares, s.n, s.d);
  return {s.n, s.d, SymMatrix(u.transpose() * u)};
}

Poly mu(const GramPoint& g) {
  auto basis = g.basis();
  const auto& a = g.matrix.matrix();
  if (static_cast<std::size_t>(a.rows()) != basis.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix size " + std::to_string(a.rows()) + " does not match basis size " +
                                                  std::to_string(basis.size()));
  Poly f(g.n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& c = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (!c.is_zero()) f.add_term(basis[i] + basis[j], c);
    }
  return f;
}

GramCheck is_gram_point(const GramPoint& g, const Poly& f) {
  GramCheck c;
  c.identity = mu(g) == f;
  c.psd = psd_check(g.matrix);
  return c;
}

std::vector<Poly> span_basis(const GramPoint& g) {
  auto sc = span_coords(g);
  std::vector<Poly> out;
  for (Eigen::Index i = 0; i < sc.rows.rows(); ++i) out.push_back(poly_from_vector(sc.rows.row(i).transpose(), g.n, g.d));
  return out;
}

FaceDimension face_dimension(const std::vector<Poly>& squares) {
  auto s = common_shape(squares, "face_dimension");
  MatrixQ rows = row_space(coefficient_rows(squares, s.n, s.d));
  std::vector<Poly> basis;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) basis.push_back(poly_from_vector(rows.row(i).transpose(), s.n, s.d));
  FaceDimension fd;
  fd.r = basis.size();
  fd.products_rank = static_cast<std::size_t>(rank(product_columns(basis, s.n, s.d)));
  fd.dim = fd.r * (fd.r + 1) / 2 - fd.products_rank;
  return fd;
}

std::string QSosWitness::str() const {
  std::string out = "f =";
  for (std::size_t j = 0; j < expanded.size(); ++j) out += (j ? " + (" : " (") + to_string(expanded[j]) + ")^2";
  if (expanded.empty()) out += " 0";
  return out;
}

QSosWitness extract_qsos(const Poly& f, const std::vector<Poly>& u) {
  auto s = common_shape(u, "extract_qsos");
  s.n = std::max(s.n, f.nvars());
  for (const auto& p : u)
    if (p.is_zero()) throw Error(ErrorKind::LinearlyDependent, "extract_qsos: the zero form is not a basis element");
  MatrixQ rows = coefficient_rows(u, s.n, s.d);
  if (rank(rows) != rows.rows())
    throw Error(ErrorKind::LinearlyDependent, "extract_qsos: the given forms are linearly dependent");
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != static_cast<int>(2 * s.d)))
    throw Error(ErrorKind::HeterogeneousDegrees, "extract_qsos: f must be a form of degree " + std::to_string(2 * s.d));
  MatrixQ prods = product_columns(u, s.n, s.d);
  if (rank(prods) != prods.cols())
    throw Error(ErrorKind::NotQuadraticallyIndependent,
                "the products u_i u_j are linearly dependent, so the representation is not unique");
  VectorQ rhs = f.is_zero() ? VectorQ::Zero(prods.rows()).eval() : coefficient_vector(f, s.n, 2 * s.d);
  auto sol = solve(prods, rhs);
  if (!sol) throw Error(ErrorKind::NoSolution, "f is not in the span of the products u_i u_j");

  QSosWitness w;
  w.a = sym_from_products(sol->x, u.size());
  auto verdict = psd_check(SymMatrix(w.a));
  if (!verdict.psd) {
    std::ostringstream msg;
    msg << "the unique coefficient matrix is not psd: v^T A v = " << verdict.witness_value.str() << " for v = (";
    for (Eigen::Index i = 0; i < verdict.witness.size(); ++i) msg << (i ? ", " : "") << verdict.witness(i).str();
    msg << ")";
    throw Error(ErrorKind::NotPsd, msg.str());
  }
  Poly sum(s.n), sum_expanded(s.n);
  for (const auto& sqr : ldl_sos(SymMatrix(w.a))) {
    Poly q(s.n);
    for (Eigen::Index i = 0; i < sqr.vec.size(); ++i)
      if (!sqr.vec(i).is_zero()) q += u[static_cast<std::size_t>(i)] * sqr.vec(i);
    w.weights.push_back(sqr.weight);
    w.polys.push_back(q);
    sum += q * q * sqr.weight;
    for (const auto& r : four_squares(sqr.weight)) {
      if (r.is_zero()) continue;
      Poly e = q * r;
      w.expanded.push_back(e);
      sum_expanded += e * e;
    }
  }
  if (!(sum == f) || !(sum_expanded == f)) throw std::logic_error("extract_qsos: reconstruction failed");
  return w;
}

ShrinkResult shrink_span(const GramPoint& g1, const GramPoint& g2) {
  if (g1.n != g2.n || g1.d != g2.d)
    throw Error(ErrorKind::DimensionMismatch, "Gram points live on different monomial bases");
  if (!(mu(g1) == mu(g2))) throw Error(ErrorKind::InvalidArgument, "the Gram points represent different forms");
  if (g1.matrix.matrix() == g2.matrix.matrix()) throw Error(ErrorKind::EqualPoints, "the Gram points coincide");
  auto s1 = span_coords(g1), s2 = span_coords(g2);
  if (s1.pivots != s2.pivots || s1.rows != s2.rows)
    throw Error(ErrorKind::SpansDiffer, "the Gram points have different column spaces");

  // G = V Q V^T with V^T the echelon rows; Q is G on the pivot positions.
  MatrixQ q1 = restrict_to(g1.matrix.matrix(), s1.pivots);
  MatrixQ q2 = restrict_to(g2.matrix.matrix(), s1.pivots);
  auto b = first_boundary(q1, q2 - q1, Rational(1));
  if (!b) throw std::logic_error("shrink_span: the line never leaves the face");

  ShrinkResult out;
  out.det = b->det;
  out.s_interval = b->iv;
  out.s_exact = b->exact;
  out.rank_before = s1.pivots.size();
  if (!b->exact) {
    out.deferred_kernel = true;
    return out;
  }
  const Rational& s = *b->exact;
  MatrixQ qs = q1 + (q2 - q1) * s;
  out.kernel = nullspace(qs);
  if (out.kernel.cols() == 0 || !(qs * out.kernel).isZero())
    throw std::logic_error("shrink_span: kernel certification failed at an exact root");
  out.g = GramPoint{g1.n, g1.d, SymMatrix(expand_from_span(s1.rows, qs))};
  out.rank_after = static_cast<std::size_t>(rank(qs));
  return out;
}

WalkResult walk_to_extreme(const GramPoint& g0) {
  WalkResult w;
  w.g = g0;
  for (;;) {
    auto sc = span_coords(w.g);
    const std::size_t r = sc.pivots.size();
    w.ranks.push_back(r);
    if (r == 0) {
      w.extreme = true;
      return w;
    }
    std::vector<Poly> basis;
    for (Eigen::Index i = 0; i < sc.rows.rows(); ++i)
      basis.push_back(poly_from_vector(sc.rows.row(i).transpose(), w.g.n, w.g.d));
    MatrixQ ker = nullspace(product_columns(basis, w.g.n, w.g.d));
    if (ker.cols() == 0) {
      w.extreme = true;
      return w;
    }
    MatrixQ q = restrict_to(w.g.matrix.matrix(), sc.pivots);
    std::optional<Rational> step;
    MatrixQ dir;
    for (Eigen::Index k = 0; k < ker.cols() && !step; ++k)
      for (int sign : {1, -1}) {
        MatrixQ a = sym_from_products(ker.col(k), r) * Rational(sign);
        auto b = first_boundary(q, a, Rational(0));
        if (b && b->exact) {
          step = b->exact;
          dir = a;
          break;
        }
      }
    if (!step) {
      w.deferred_kernel = true;
      return w;
    }
    MatrixQ qs = q + dir * *step;
    w.g = GramPoint{w.g.n, w.g.d, SymMatrix(expand_from_span(sc.rows, qs))};
  }
}

}  // namespace qsos
