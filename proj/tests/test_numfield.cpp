#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qsos/errors.hpp"
#include "qsos/numfield.hpp"
#include "qsos/sturm.hpp"
#include "oracles.hpp"

using namespace qsos;
using namespace qsos::oracle;

namespace {
UniPolyQ U(const char* s) { return parse_unipoly(s); }
Poly P(const char* s) { return parse_poly(s, 3); }

double arg_of(const RootBox& b) {
  double a = std::atan2(b.center.im.to_double(), b.center.re.to_double());
  return a < 0 ? a + 2 * M_PI : a;
}

}  // namespace

TEST_CASE("isolate_roots") {
  auto r2 = isolate_roots(U("t^2+1"));
  REQUIRE(r2.boxes.size() == 2);
  CHECK(r2.tau.str() == "(1 2)");
  CHECK(r2.totally_imaginary());

  auto r4 = isolate_roots(U("t^4+2"));
  REQUIRE(r4.boxes.size() == 4);
  const double want[4] = {M_PI / 4, 3 * M_PI / 4, 5 * M_PI / 4, 7 * M_PI / 4};
  for (int i = 0; i < 4; ++i) CHECK(arg_of(r4.boxes[static_cast<std::size_t>(i)]) == doctest::Approx(want[i]).epsilon(1e-12));
  CHECK(r4.tau.str() == "(1 4)(2 3)");
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(r4.boxes[i].conj().intersects(r4.boxes[static_cast<std::size_t>(r4.tau(static_cast<int>(i)))]));

  auto r5 = isolate_roots(U("t^4-t-1"));
  CHECK_FALSE(r5.totally_imaginary());
  CHECK(r5.real_roots == 2);
  CHECK_THROWS_AS(isolate_roots(U("(t^2+1)^2")), Error);

  std::mt19937 rng(4);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> c(7);
    for (auto& x : c) x = e(rng);
    c.back() = 1;
    UniPolyQ m(c);
    if (!is_squarefree(m)) continue;
    auto rs = isolate_roots(m);
    CHECK(rs.boxes.size() == 6);
    CHECK(rs.real_roots == sturm_real_roots(m));
    if (rs.totally_imaginary()) {
      CHECK(rs.tau.is_involution());
      CHECK(rs.tau.is_fixed_point_free());
    }
  }
}

TEST_CASE("norm_form") {
  CHECK(norm_form(U("t^2+1"), parse_linear_form("1; t")) == parse_poly("x1^2 + x2^2"));
  CHECK(norm_form(U("t^2+1"), canonical_linear_form()) == P("(x1 - x3)^2 + x2^2"));
  Poly f = norm_form(U("t^4+t+1"), canonical_linear_form());
  CHECK(f.degree() == 4);
  CHECK(f.is_homogeneous());
  CHECK_THROWS_AS(norm_form(U("2*t^2+1"), canonical_linear_form()), Error);
  CHECK_THROWS_AS(norm_form(U("(t^2+1)^2"), canonical_linear_form()), Error);
}

TEST_CASE("norm form vs numeric conjugate product") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> e(-5, 5);
  int done = 0;
  mpf_class limit(1e-20, 256);
  while (done < 50) {
    const int deg = done % 2 ? 6 : 4;
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
    for (auto& x : c) x = e(rng);
    c.back() = 1;
    UniPolyQ m(c);
    if (!is_squarefree(m)) continue;
    LinearForm l = {UniPolyQ(std::vector<Rational>{e(rng), 1}), UniPolyQ(std::vector<Rational>{0, e(rng), 1}),
                    canonical_linear_form()[2]};
    Poly f = norm_form(m, l);
    for (const auto& [mono, q] : f.terms()) CHECK(q.is_integer());
    CHECK(f.degree() == deg);
    auto num = conjugate_product(m, l, 256);
    auto fx = f.map_coeffs([](const Rational& q) { return mpf_class(q.value(), 256); });
    mpf_class worst(0, 256);
    const auto diff = fx - num;
    for (const auto& [mono, q] : diff.terms()) {
      mpf_class a = abs(q) / (1 + abs(fx.coeff(mono)));
      if (a > worst) worst = a;
    }
    CHECK(worst < limit);
    ++done;
  }
}

TEST_CASE("real_sos2_witness") {
  auto w = real_sos2_witness(U("t^2+1"), parse_linear_form("1; t"), 128);
  CHECK(w.residual < mpf_class(1e-30, 128));
  auto w4 = real_sos2_witness(U("t^4+2"), canonical_linear_form(), 256);
  CHECK(w4.residual < mpf_class(1e-20, 256));
  CHECK_THROWS_AS(real_sos2_witness(U("t^4-t-1"), canonical_linear_form(), 256), Error);
}

TEST_CASE("general_position") {
  CHECK(general_position(U("t^4+t+1"), canonical_linear_form()).verdict == GeneralPosition::ExactVandermonde);
  CHECK(general_position(U("t^4+2"), parse_linear_form("1; t; t^3")).verdict == GeneralPosition::NumericCertified);
  CHECK(general_position(U("t^4+2"), parse_linear_form("1; 0; 0")).verdict == GeneralPosition::Inconclusive);
  CHECK(general_position(U("t^4+2"), parse_linear_form("1")).verdict == GeneralPosition::Inconclusive);
}

TEST_CASE("quartic_galois") {
  auto s4 = quartic_galois(U("t^4+t+1"));
  CHECK(s4.label == "S4");
  CHECK(s4.resolvent == parse_unipoly("y^3-4*y-1", "y"));
  CHECK(s4.discriminant == 229);
  CHECK(quartic_galois(U("t^4+2")).label == "D4");
  CHECK(quartic_galois(U("t^4+1")).label == "V4");
  CHECK(quartic_galois(U("t^4+8*t+12")).label == "A4");
  CHECK(quartic_galois(U("t^4+5*t^2+5")).label == "C4");
  CHECK(quartic_galois(U("t^4+t/2+1/2")).label == quartic_galois(U("t^4+4*t+8")).label);
  CHECK_THROWS_AS(quartic_galois(U("t^4+4")), Error);        // (t^2+2t+2)(t^2-2t+2)
  CHECK_THROWS_AS(quartic_galois(U("t^4-t^3+t-1")), Error);  // root 1
  CHECK_THROWS_AS(quartic_galois(U("(t^2+1)*(t^2+3)")), Error);
  const std::map<std::string, std::size_t> orders = {{"S4", 24}, {"A4", 12}, {"D4", 8}, {"C4", 4}, {"V4", 4}};
  for (const char* m : {"t^4+t+1", "t^4+8*t+12", "t^4+2", "t^4+5*t^2+5", "t^4+1", "t^4+3*t+3", "t^4-2*t^2+2",
                        "t^4+4*t^2+2"}) {
    auto q = quartic_galois(U(m));
    CHECK(enumerate(q.group, 100).size() == orders.at(q.label));
    // complex conjugation acts through an element of the group
    if (q.roots.totally_imaginary() || q.roots.real_roots > 0) {
      auto el = enumerate(q.group, 100);
      CHECK(std::find(el.begin(), el.end(), q.roots.tau) != el.end());
    }
  }
}

TEST_CASE("obstruction_check") {
  auto c = obstruction_check(U("t^4+t+1"), canonical_linear_form());
  CHECK(c.galois_label == "S4");
  CHECK(c.sturm_real_roots == 0);
  CHECK(c.general_position.verdict == GeneralPosition::ExactVandermonde);
  REQUIRE(c.c.has_value());
  CHECK(*c.c == 3);
  CHECK(c.conclusion == Conclusion::NotQSos);
  CHECK(c.tau_membership_verified);

  auto d = obstruction_check(U("t^4+2"), canonical_linear_form());
  CHECK(d.galois_label == "D4");
  REQUIRE(d.c.has_value());
  CHECK(*d.c == 2);
  CHECK(d.conclusion == Conclusion::NoObstruction);
  CHECK(d.failing_check == "c >= d+1");

  auto r = obstruction_check(U("t^4-t-1"), canonical_linear_form());
  CHECK(r.conclusion == Conclusion::NoObstruction);
  CHECK(r.failing_check == "totally_imaginary");

  auto inc = obstruction_check(U("t^4+t+1"), parse_linear_form("1; 0; 0"));
  CHECK(inc.conclusion == Conclusion::NoObstruction);
  CHECK(inc.failing_check == "general_position");

  try {
    obstruction_check(U("t^2+1"), canonical_linear_form());
    FAIL("expected DegreeTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeTooSmall);
  }
  try {
    obstruction_check(U("t^6+t+1"), canonical_linear_form());
    FAIL("expected GaloisDataMissing");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GaloisDataMissing);
  }
  // sextic with supplied data: t^6 + 3 has Galois group S3 x C2 ~ D6 on 6 roots
  auto rs = isolate_roots(U("t^6+3"));
  GaloisData g;
  g.label = "6T3";
  g.group = make_group("(1 2 3 4 5 6),(1 6)(2 5)(3 4)", "6T3");
  auto six = obstruction_check(U("t^6+3"), canonical_linear_form(), g);
  CHECK(six.totally_imaginary);
  CHECK(six.c.has_value());
  CHECK(six.conclusion == Conclusion::NoObstruction);
}
