#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "qsos/foursquares.hpp"
#include "qsos/linalg.hpp"
#include "qsos/poly.hpp"
#include "qsos/resultant.hpp"
#include "qsos/sturm.hpp"

using namespace qsos;

namespace {

MatrixQ mat(std::initializer_list<std::initializer_list<int>> rows) {
  MatrixQ m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto& r : rows) {
    Eigen::Index j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Poly P(const char* s) { return parse_poly(s, 3); }

// Descartes rule of signs on (a, b) after the Moebius map x -> (a + b x)/(1 + x).
int descartes_variations(const UniPolyQ& p, const Rational& a, const Rational& b) {
  const int n = p.degree();
  UniPolyQ q;
  UniPolyQ lin_a(std::vector<Rational>{a, b});
  UniPolyQ one_x(std::vector<Rational>{1, 1});
  for (int k = 0; k <= n; ++k) {
    UniPolyQ term(p.coeff(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i) term = term * lin_a;
    for (int i = 0; i < n - k; ++i) term = term * one_x;
    q += term;
  }
  int changes = 0, last = 0;
  for (const auto& c : q.coeffs()) {
    if (c.is_zero()) continue;
    if (last != 0 && c.sign() != last) ++changes;
    last = c.sign();
  }
  return changes;
}

int bisection_root_count(const UniPolyQ& p) {
  UniPolyQ sq = divmod(p, gcd(p, p.derivative())).first;
  Rational bound(1);
  for (const auto& c : sq.coeffs()) bound += abs(c / sq.lead());
  // open intervals; split points that are roots are counted directly
  int count = 0;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int v = descartes_variations(sq, a, b);
    if (v == 0) continue;
    if (v == 1) {
      ++count;
      continue;
    }
    Rational m = (a + b) / 2;
    if (sq.evaluate(m).is_zero()) ++count;
    work.push_back({a, m});
    work.push_back({m, b});
  }
  return count;
}

}  // namespace

TEST_CASE("rational parse and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-0/5").str() == "0");
  CHECK(Rational::parse(" -7 ") == Rational(-7));
  CHECK(Rational(Integer(4), Integer(-6)).str() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK(is_square(Rational(9, 4)));
  CHECK_FALSE(is_square(Rational(-4)));
}

TEST_CASE("polynomial printing round-trips") {
  Poly p = P("7/2*x1^4*x3^2 - x2^6");
  CHECK(to_string(p) == "7/2*x1^4*x3^2 - x2^6");
  CHECK(to_string(Poly(3)) == "0");
  CHECK(to_string(P("(x1 - x3)^2 + x2^2")) == "x1^2 - 2*x1*x3 + x2^2 + x3^2");
  CHECK(to_string(P("-x1 + 3")) == "-x1 + 3");
  CHECK(to_string(P("x1/2 - 1/3")) == "1/2*x1 - 1/3");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9), ex(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Poly q(3);
    for (int t = 0; t < 6; ++t) q.add_term({unsigned(ex(rng)), unsigned(ex(rng)), unsigned(ex(rng))}, Rational(coef(rng), 1 + ex(rng)));
    CHECK(parse_poly(to_string(q), 3) == q);
  }
  CHECK_THROWS_AS(parse_poly("x1 +"), Error);
  CHECK_THROWS_AS(parse_poly("x0"), Error);
  CHECK_THROWS_AS(parse_poly("x1/x2"), Error);
}

TEST_CASE("monomial basis is graded lex") {
  auto b = monomial_basis(3, 3);
  REQUIRE(b.size() == 10);
  std::vector<std::string> want = {"x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3",
                                   "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2", "x3^3"};
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(monomial_str(b[i]) == want[i]);
    CHECK(monomial_index(b[i]) == i);
  }
  auto b6 = monomial_basis(3, 6);
  CHECK(b6.size() == 28);
  for (std::size_t i = 0; i < b6.size(); ++i) CHECK(monomial_index(b6[i]) == i);
  CHECK(monomial_basis(4, 2).size() == 10);
}

TEST_CASE("psd_check examples") {
  auto v = psd_check(SymMatrix(mat({{1, 0}, {0, 1}})));
  CHECK(v.psd);
  CHECK(v.rank == 2);
  CHECK(v.pivots(0) == 1);
  CHECK(v.pivots(1) == 1);

  auto w = psd_check(SymMatrix(mat({{0, 1}, {1, 0}})));
  CHECK_FALSE(w.psd);
  CHECK(w.witness(0) == 1);
  CHECK(w.witness(1) == -1);
  CHECK(w.witness_value == -2);

  auto z = psd_check(SymMatrix(mat({{0, 0, 0}, {0, 2, 1}, {0, 1, 1}})));
  CHECK(z.psd);
  CHECK(z.rank == 2);
  CHECK_THROWS_AS(SymMatrix(mat({{1, 2}, {3, 4}})), Error);
}

TEST_CASE("psd_check witness branches") {
  // zero pivot, positive partner diagonal
  auto a = psd_check(SymMatrix(mat({{0, 2}, {2, 3}})));
  CHECK_FALSE(a.psd);
  CHECK(a.witness_value < 0);
  // negative pivot after a Schur step
  auto b = psd_check(SymMatrix(mat({{1, 2}, {2, 1}})));
  CHECK_FALSE(b.psd);
  CHECK(b.witness_value == (b.witness.transpose() * mat({{1, 2}, {2, 1}}) * b.witness)(0, 0));
  CHECK(b.witness_value < 0);
  // zero pivot, negative partner
  auto c = psd_check(SymMatrix(mat({{0, 1}, {1, -1}})));
  CHECK_FALSE(c.psd);
  CHECK(c.witness_value < 0);
}

TEST_CASE("psd_check agrees with floating eigenvalues") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> sz(1, 8), entry(-5, 5), den(1, 4), kind(0, 2);
  int compared = 0, skipped = 0, disagreements = 0;
  while (compared < 1000) {
    const int n = sz(rng);
    MatrixQ m(n, n);
    const int k = kind(rng);
    if (k == 0) {
      MatrixQ f(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f(i, j) = Rational(entry(rng), den(rng));
      m = f * f.transpose();
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          m(i, j) = Rational(entry(rng), den(rng));
          m(j, i) = m(i, j);
        }
      if (k == 2)
        for (int i = 0; i < n; ++i) m(i, i) += 12;
    }
    Eigen::MatrixXd md(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) md(i, j) = m(i, j).to_double();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(md);
    if (es.eigenvalues().cwiseAbs().minCoeff() < 1e-6) {
      ++skipped;
      continue;
    }
    ++compared;
    auto v = psd_check(SymMatrix(m));
    if (v.psd != (es.eigenvalues().minCoeff() > 0)) ++disagreements;
    if (v.psd) CHECK(MatrixQ(v.l * v.pivots.asDiagonal() * v.l.transpose()) == m);
    else CHECK(v.witness_value < 0);
  }
  MESSAGE("psd oracle: " << compared << " compared, " << skipped << " regenerated inside the gap guard");
  CHECK(disagreements == 0);
}

TEST_CASE("ldl_sos examples and reconstruction") {
  auto t = ldl_sos(SymMatrix(mat({{2, 1}, {1, 2}})));
  REQUIRE(t.size() == 2);
  CHECK(t[0].weight == 2);
  CHECK(t[0].vec(0) == 1);
  CHECK(t[0].vec(1) == Rational(1, 2));
  CHECK(t[1].weight == Rational(3, 2));
  CHECK(t[1].vec(0) == 0);
  CHECK(t[1].vec(1) == 1);

  auto one = ldl_sos(SymMatrix(mat({{1, 1}, {1, 1}})));
  REQUIRE(one.size() == 1);
  CHECK(one[0].weight == 1);
  CHECK(one[0].vec(1) == 1);

  auto id = ldl_sos(SymMatrix(mat({{1, 0}, {0, 1}})));
  REQUIRE(id.size() == 2);
  CHECK_THROWS_AS(ldl_sos(SymMatrix(mat({{0, 1}, {1, 0}}))), Error);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6, r = 1 + trial % 3;
    MatrixQ f(n, r);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) f(i, j) = Rational(e(rng), 1 + (trial % 3));
    MatrixQ m = f * f.transpose();
    auto terms = ldl_sos(SymMatrix(m));
    MatrixQ rec = MatrixQ::Zero(n, n);
    for (auto& w : terms) rec += w.weight * (w.vec * w.vec.transpose());
    CHECK(rec == m);
    CHECK(static_cast<Eigen::Index>(terms.size()) == rank(m));
  }
}

TEST_CASE("four_squares") {
  auto s1 = four_squares(Rational(1));
  CHECK(s1[0] == 1);
  CHECK(s1[1] == 0);
  auto s7 = four_squares(Rational(7));
  CHECK(s7[0] == 2);
  CHECK(s7[1] == 1);
  CHECK(s7[2] == 1);
  CHECK(s7[3] == 1);
  auto s32 = four_squares(Rational(3, 2));
  CHECK(s32[0] == 1);
  CHECK(s32[1] == Rational(1, 2));
  CHECK(s32[2] == Rational(1, 2));
  CHECK(s32[3] == 0);
  CHECK_THROWS_AS(four_squares(Rational(0)), Error);
  CHECK_THROWS_AS(four_squares(Rational(-3, 4)), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(1, 999999);
  for (int trial = 0; trial < 200; ++trial) {
    Rational r(Integer(d(rng)), Integer(d(rng)));
    auto s = four_squares(r);
    CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] + s[3] * s[3] == r);
  }
}

TEST_CASE("nullspace") {
  CHECK(nullspace(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).cols() == 0);
  MatrixQ k = nullspace(mat({{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -1);
  CHECK(k(1, 0) == 1);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(-2, 2), sz(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = sz(rng), c = sz(rng);
    MatrixQ m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = e(rng);
    MatrixQ n = nullspace(m);
    CHECK(n.cols() + rank(m) == c);
    if (n.cols() > 0) {
      CHECK((m * n).isZero());
      CHECK(rank(n) == n.cols());
    }
  }
  auto s = solve(mat({{1, 1}, {1, -1}}), VectorQ(VectorQ::Constant(2, Rational(2))));
  REQUIRE(s.has_value());
  CHECK(s->unique);
  CHECK(s->x(0) == 2);
  CHECK_FALSE(solve(mat({{1, 1}, {1, 1}}), (VectorQ(2) << Rational(1), Rational(2)).finished()).has_value());
}

TEST_CASE("berkowitz determinant matches elimination") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-5, 5);
  for (int n = 1; n <= 6; ++n) {
    RingMatrix<Rational> m(n, std::vector<Rational>(n));
    MatrixQ q(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q(i, j) = m[i][j] = e(rng);
    // elimination determinant
    MatrixQ a = q;
    Rational det(1);
    for (int k = 0; k < n; ++k) {
      int p = k;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) {
        det = 0;
        break;
      }
      if (p != k) {
        a.row(p).swap(a.row(k));
        det = -det;
      }
      det *= a(k, k);
      for (int i = k + 1; i < n; ++i) {
        Rational f = a(i, k) / a(k, k);
        for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      }
    }
    CHECK(determinant(m) == det);
  }
}

TEST_CASE("resultant examples and symmetry") {
  UniPoly<Poly> l1(std::vector<Poly>{P("x1"), P("x2")});
  UniPolyQ m2 = parse_unipoly("t^2+1");
  CHECK(resultant(m2, l1) == P("x1^2 + x2^2"));
  UniPoly<Poly> l2(std::vector<Poly>{P("x1"), P("x2"), P("x3")});
  CHECK(resultant(m2, l2) == P("(x1 - x3)^2 + x2^2"));

  Poly f4 = resultant(parse_unipoly("t^4+t+1"), l2);
  CHECK(f4.degree() == 4);
  CHECK(f4.is_homogeneous());
  for (const auto& [mono, c] : f4.terms()) CHECK(c.is_integer());

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> e(-4, 4), dg(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> ca(dg(rng) + 1), cb(dg(rng) + 1);
    for (auto& c : ca) c = e(rng);
    for (auto& c : cb) c = e(rng);
    ca.back() = 1 + std::abs(e(rng));
    cb.back() = -1 - std::abs(e(rng));
    UniPolyQ a(ca), b(cb);
    Rational ab = resultant(a, b), ba = resultant(b, a);
    int sgn = (a.degree() * b.degree()) % 2 ? -1 : 1;
    CHECK(ab == ba * sgn);
    Rational c = e(rng) + 7;
    CHECK(resultant(a, UniPolyQ(c)) == pow(c, static_cast<unsigned>(a.degree())));
  }
  CHECK_THROWS_AS(resultant(UniPolyQ(), m2), Error);
}

TEST_CASE("sturm real root counts") {
  CHECK(sturm_real_roots(parse_unipoly("t^2+1")) == 0);
  CHECK(sturm_real_roots(parse_unipoly("t^4+t+1")) == 0);
  CHECK(sturm_real_roots(parse_unipoly("t^4-t-1")) == 2);
  CHECK(sturm_real_roots(parse_unipoly("(t-1)^2*(t+2)")) == 2);
  CHECK(is_squarefree(parse_unipoly("t^4+t+1")));
  CHECK_FALSE(is_squarefree(parse_unipoly("(t-1)^2*(t+2)")));

  auto iv = isolate_real_roots(parse_unipoly("t^2-2"), Rational(1, 1000));
  REQUIRE(iv.size() == 2);
  CHECK(iv[1].lo * iv[1].lo < 2);
  CHECK(iv[1].hi * iv[1].hi >= 2);

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(-6, 6), dg(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> c(dg(rng) + 1);
    for (auto& x : c) x = e(rng);
    if (c.back().is_zero()) c.back() = 1;
    // plant a double root now and then
    UniPolyQ p(c);
    if (trial % 10 == 0) p = p * parse_unipoly("(t-1)^2");
    CHECK(sturm_real_roots(p) == bisection_root_count(p));
    CHECK(static_cast<int>(isolate_real_roots(p).size()) == sturm_real_roots(p));
  }
}
