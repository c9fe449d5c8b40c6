#include <random>

#include "doctest.h"
#include "tropical/io.hpp"

using namespace trop;

namespace {
std::string fixture(const std::string& name) { return read_text_file(std::string(FIXTURE_DIR) + "/" + name); }
}  // namespace

TEST_CASE("parse polynomials") {
  auto f = parse_polynomial("max(0, x1, x2)");
  CHECK(f.n_vars == 2);
  REQUIRE(f.terms.size() == 3);
  CHECK(f.terms[0].exponent == ZVec{0, 0});
  CHECK(f.terms[1].exponent == ZVec{0, 1});
  CHECK(f.terms[2].exponent == ZVec{1, 0});
  for (auto& t : f.terms) CHECK(t.coefficient == 0);
  auto g = parse_polynomial("max(3/2 + 2*x1)");
  CHECK(g.n_vars == 1);
  CHECK(g.terms[0].coefficient == Rat(3, 2));
  CHECK(g.terms[0].exponent == ZVec{2});
  auto h = parse_polynomial("max(-1 + x1 + x1 + -1*x2, x3)");
  CHECK(h.n_vars == 3);
  CHECK(h.terms[1].exponent == ZVec{2, -1, 0});
}

TEST_CASE("parse errors carry a location") {
  CHECK_THROWS_AS(parse_polynomial("max(0, x1, x1)"), ParseError);
  try {
    parse_polynomial(fixture("malformed.trop"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  try {
    parse_polynomial("max(0, x1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);
  }
}

TEST_CASE("print and parse round-trip") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> e(-3, 3), n(1, 4), k(1, 6), c(-9, 9), den(1, 5);
  for (int t = 0; t < 100; ++t) {
    TropicalPolynomial f;
    f.n_vars = n(rng);
    std::set<ZVec> seen;
    int terms = k(rng);
    for (int i = 0; i < terms; ++i) {
      ZVec x;
      for (int v = 0; v < f.n_vars; ++v) x.push_back(e(rng));
      if (!seen.insert(x).second) continue;
      Rat q(c(rng), den(rng));
      q.canonicalize();
      f.terms.push_back({x, q});
    }
    std::sort(f.terms.begin(), f.terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    CHECK(parse_polynomial(print_polynomial(f)) == f);
  }
  for (auto name : {"cubic.trop", "quartic_surface.trop", "flat2.trop"}) {
    auto f = parse_polynomial(fixture(name));
    CHECK(parse_polynomial(print_polynomial(f)) == f);
  }
}

TEST_CASE("newton polytopes") {
  CHECK(newton_polytope(parse_polynomial("max(0, x1, x2)")).vertices.size() == 3);
  CHECK(newton_polytope(parse_polynomial("max(5 + x1)")).vertices.size() == 1);
  auto cubic = parse_polynomial(fixture("cubic.trop"));
  CHECK(cubic.terms.size() == 10);
  auto np = newton_polytope(cubic);
  CHECK(np.vertices == std::vector<ZVec>{{0, 0}, {0, 3}, {3, 0}});
  CHECK(parse_polynomial(fixture("flat2.trop")).n_vars == 3);
}

TEST_CASE("normal fans") {
  auto tp2 = normal_fan(newton_polytope(parse_polynomial("max(0, x1, x2)")));
  CHECK(tp2.rays == std::vector<ZVec>{{-1, 0}, {0, -1}, {1, 1}});
  CHECK(tp2.cones.size() == 3);
  auto sq = normal_fan({2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}});
  CHECK(sq.rays.size() == 4);
  CHECK(sq.cones.size() == 4);
  auto dil = normal_fan({3, {{0, 0, 0}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}});
  auto std3 = normal_fan({3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  CHECK(dil.rays == std3.rays);
  CHECK(dil.cones == std3.cones);
  // octahedron: vertex cones have 4 rays
  CHECK_THROWS_AS(normal_fan({3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}}), FanError);
}

TEST_CASE("normal fan is complete: sampled directions lie in some cone") {
  auto fan = normal_fan({3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}});
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int t = 0; t < 50; ++t) {
    QVec u{d(rng), d(rng), d(rng)};
    int hits = 0;
    for (const auto& c : fan.cones) {
      QMatrix r(3, 3);
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) r(i, j) = fan.rays[c[j]][i];
      QMatrix b(3, 1);
      for (int i = 0; i < 3; ++i) b(i, 0) = u[i];
      auto x = solve_rational(r, b);
      if (x && (*x)(0, 0) >= 0 && (*x)(1, 0) >= 0 && (*x)(2, 0) >= 0) ++hits;
    }
    CHECK(hits >= 1);
  }
}

TEST_CASE("fan files") {
  auto blow = load_fan(fixture("blowup.fan"));
  CHECK(blow.rays.size() == 5);
  CHECK(blow.cones.size() == 6);
  auto chart = load_fan("dim 2\nray 0: 1 0\nray 1: 0 1\ncone: 0 1\n");
  CHECK(chart.cones.size() == 1);
  try {
    load_fan(fixture("bad_unimodular.fan"));
    FAIL("expected unimodularity error");
  } catch (const FanError& e) {
    CHECK(std::string(e.what()).find("determinant 2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_fan("dim 2\nray 0: 1 0\nray 1: 0 1\nray 2: 1 1\ncone: 0 1\ncone: 2\n"), FanError);
  CHECK_THROWS_AS(load_fan("dim 2\nray 0: 1 0\nrya 1: 0 1\n"), ParseError);
  CHECK(load_fan(print_fan(blow)).rays == blow.rays);
}
