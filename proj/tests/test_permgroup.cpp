#include <doctest.h>

#include <algorithm>
#include <random>

#include "qsos/errors.hpp"
#include "qsos/group.hpp"

using namespace qsos;

namespace {
const GroupDesc D4 = make_group("(1 2 3 4),(1 3)", "D4");
const GroupDesc S4 = make_group("(1 2 3 4),(1 2)", "S4");
const GroupDesc A4 = make_group("(1 2 3),(2 3 4)", "A4");
const GroupDesc V4 = make_group("(1 2)(3 4),(1 3)(2 4)", "V4");

std::string catalog(const char* name) { return std::string(QSOS_DATA_DIR) + "/catalogs/" + name; }
}  // namespace

TEST_CASE("perm parsing and printing") {
  Perm p = Perm::parse("(1 2 3)(4 5)");
  CHECK(p.degree() == 5);
  CHECK(p.str() == "(1 2 3)(4 5)");
  CHECK(p(0) == 1);
  CHECK((p * p.inverse()).is_identity());
  CHECK(Perm::parse("()", 3).is_identity());
  CHECK(Perm::parse("(1 2)(3 4)").is_involution());
  CHECK(Perm::parse("(1 2)(3 4)").is_fixed_point_free());
  CHECK_FALSE(Perm::parse("(1 2)", 3).is_fixed_point_free());
  CHECK_THROWS_AS(Perm::parse("(1 2"), Error);
  CHECK_THROWS_AS(Perm::parse("(1 1)"), Error);
  CHECK_THROWS_AS(Perm::parse("(0 1)"), Error);
  auto gens = parse_generators("(1 2 3 4),(1 3)");
  REQUIRE(gens.size() == 2);
  CHECK(gens[1].degree() == 4);
}

TEST_CASE("orbit closure") {
  auto pts = point_orbit(make_group("(1 2 3 4)").generators, 0);
  CHECK(pts.size() == 4);
  CHECK(ordered_pair_orbit(S4.generators, {0, 1}).size() == 12);
  auto diag = unordered_pair_orbit(D4.generators, {{0, 2}});
  std::sort(diag.begin(), diag.end());
  REQUIRE(diag.size() == 2);
  CHECK(diag[0] == PointPair{0, 2});
  CHECK(diag[1] == PointPair{1, 3});
}

TEST_CASE("two-transitivity") {
  CHECK(is_two_transitive(S4));
  CHECK_FALSE(is_two_transitive(D4));
  CHECK(is_two_transitive(A4));
}

TEST_CASE("enumerate") {
  CHECK(enumerate(make_group("(1 2)"), 10).size() == 2);
  CHECK(enumerate(D4, 100).size() == 8);
  try {
    enumerate(S4, 10);
    FAIL("expected OrderExceeded");
  } catch (const OrderExceeded& e) {
    CHECK(e.kind() == ErrorKind::OrderExceeded);
    CHECK(e.partial_count() == 11);
  }
}

TEST_CASE("fpf involution classes") {
  CHECK(fpf_involution_classes(V4, 100).size() == 3);
  auto d4 = fpf_involution_classes(D4, 100);
  REQUIRE(d4.size() == 2);
  // representatives are the smallest image arrays: (1 2)(3 4) < (1 3)(2 4)
  CHECK(d4[0].str() == "(1 2)(3 4)");
  CHECK(d4[1].str() == "(1 3)(2 4)");
  CHECK(fpf_involution_classes(make_group("(1 2 3)"), 100).empty());
}

TEST_CASE("characteristic numbers") {
  CHECK(char_number(D4, Perm::parse("(1 2)(3 4)")) == 2);
  CHECK(char_number(D4, Perm::parse("(1 3)(2 4)")) == 1);
  CHECK(char_number(S4, Perm::parse("(1 2)(3 4)")) == 3);
  for (const auto& t : fpf_involution_classes(V4, 100)) CHECK(char_number(V4, t) == 1);
  CHECK_THROWS_AS(char_number(S4, Perm::parse("(1 2 3)", 4)), Error);
  try {
    char_number(S4, Perm::parse("(1 2)", 4));
    FAIL("expected HasFixedPoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HasFixedPoint);
  }
}

TEST_CASE("classify") {
  auto d = classify(D4, 1000);
  CHECK(d.has_fpf_involution);
  CHECK_FALSE(d.is_two_transitive);
  CHECK_FALSE(d.any_star());
  CHECK_FALSE(d.any_starstar());
  REQUIRE(d.fpf_classes.size() == 2);
  std::vector<int> cs{d.fpf_classes[0].c, d.fpf_classes[1].c};
  std::sort(cs.begin(), cs.end());
  CHECK(cs == std::vector<int>{1, 2});

  auto s = classify(S4, 1000);
  CHECK(s.is_two_transitive);
  CHECK(s.any_star());
  CHECK(s.any_starstar());
  CHECK(*s.order == 24);

  auto c6 = classify(make_group("(1 2 3 4 5 6)"), 1000);
  REQUIRE(c6.fpf_classes.size() == 1);
  CHECK(c6.fpf_classes[0].representative.str() == "(1 4)(2 5)(3 6)");
  CHECK(c6.fpf_classes[0].c == 1);
  CHECK_FALSE(c6.any_starstar());
}

TEST_CASE("catalog parsing") {
  auto cat = parse_catalog("# comment\n4;D4;(1 2 3 4),(1 3)\n\n4;V4;(1 2)(3 4),(1 3)(2 4)\n");
  REQUIRE(cat.size() == 2);
  CHECK(cat[0].label == "D4");
  CHECK_THROWS_AS(parse_catalog("4;bad\n"), Error);
  CHECK_THROWS_AS(parse_catalog("4;X;(1 2 3 4 5)\n"), Error);
  CHECK_THROWS_AS(load_catalog("/nonexistent.cat"), Error);
}

TEST_CASE("catalog properties: pair closure vs brute force, class function, star chain") {
  std::mt19937 rng(8);
  std::size_t checked = 0, disagreements = 0;
  for (const char* name : {"degree4.cat", "degree6.cat", "degree8.cat"}) {
    for (const auto& g : load_catalog(catalog(name))) {
      auto elements = enumerate(g, 1000000);
      auto a = classify(g, 1000000);
      CHECK(a.is_transitive);
      for (const auto& cls : a.fpf_classes) {
        const int n = g.degree;
        for (int x = 0; x < n; ++x)
          if (char_number_bruteforce(elements, cls.representative, x) != cls.c) ++disagreements;
        ++checked;
        CHECK(cls.c >= 1);
        CHECK(cls.c <= n - 1);
        if (cls.satisfies_star) CHECK(cls.satisfies_starstar);
        if (a.is_two_transitive) CHECK(cls.satisfies_star);
        // x is never in its own M-set
        for (const auto& h : elements) CHECK(conjugate(h, cls.representative)(0) != 0);
        const Perm& h = elements[std::uniform_int_distribution<std::size_t>(0, elements.size() - 1)(rng)];
        CHECK(char_number(g, conjugate(h, cls.representative)) == cls.c);
      }
    }
  }
  MESSAGE("pair closure vs brute force: " << checked << " classes, " << disagreements << " disagreements");
  CHECK(disagreements == 0);
}

TEST_CASE("table rows") {
  auto r4 = classify_catalog(load_catalog(catalog("degree4.cat")), 4, 1000000);
  CHECK(r4.groups == 5);
  CHECK(r4.counts == std::array<std::size_t, 4>{5, 2, 0, 0});
  auto r6 = classify_catalog(load_catalog(catalog("degree6.cat")), 6, 1000000);
  CHECK(r6.groups == 16);
  CHECK(r6.counts == std::array<std::size_t, 4>{11, 2, 2, 0});
  CHECK(r6.labels[2] == std::vector<std::string>{"6T8", "6T11"});
  auto serial = classify_catalog(load_catalog(catalog("degree6.cat")), 6, 1000000, false);
  CHECK(serial.labels == r6.labels);
}

TEST_CASE("degree 8 row") {
  auto r8 = classify_catalog(load_catalog(catalog("degree8.cat")), 8, 1000000);
  CHECK(r8.groups == 50);
  CHECK(r8.failures.empty());
  CHECK(r8.counts == std::array<std::size_t, 4>{50, 7, 2, 3});
  MESSAGE("column 3: " << r8.labels[2][0] << " " << r8.labels[2][1]);
  MESSAGE("column 4: " << r8.labels[3][0] << " " << r8.labels[3][1] << " " << r8.labels[3][2]);
}
