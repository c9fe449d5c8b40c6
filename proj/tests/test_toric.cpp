#include "doctest.h"
#include "tropical/io.hpp"
#include "tropical/toric.hpp"

using namespace trop;

namespace {
std::string fixture(const std::string& name) { return read_text_file(std::string(FIXTURE_DIR) + "/" + name); }

ZMatrix mat(int r, int c, std::initializer_list<long> v) {
  ZMatrix m(r, c);
  auto it = v.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

// independent relint test: C = rec(P) meet rho is a cone; the sum of its
// generators lies in relint C, which sits in relint rho iff C meets relint rho
bool meets_relint_oracle(const QPolyhedron& p, const ToricVariety& y, int c) {
  const int N = y.dim();
  std::vector<ZVec> rays;
  for (int r : y.cone_rays(c)) rays.push_back(y.fan().rays[r]);
  auto rho = QPolyhedron::from_vrep(N, {QVec(N)}, rays);
  auto cap = intersect(recession_cone(p), rho);
  ZVec w(N);
  for (const auto& r : cap.rays())
    for (int i = 0; i < N; ++i) w[i] += r[i];
  if (rays.empty()) return true;
  QMatrix R = to_rational(y.ray_matrix(c));
  QMatrix b(N, 1);
  for (int i = 0; i < N; ++i) b(i, 0) = w[i];
  auto x = solve_rational(R, b);
  if (!x) return false;
  for (int j = 0; j < x->rows(); ++j)
    if ((*x)(j, 0) <= 0) return false;
  return true;
}
}  // namespace

TEST_CASE("strata lattices") {
  ToricVariety tp2(load_fan(fixture("tp2.fan")));
  CHECK(tp2.cone_count() == 7);
  for (int c = 0; c < tp2.cone_count(); ++c) {
    const auto& s = tp2.stratum(c);
    CHECK((s.projection * tp2.ray_matrix(c)).is_zero());
    CHECK(s.projection * s.section == ZMatrix::identity(tp2.stratum_dim(c)));
  }
  CHECK(tp2.projection(0, 0) == ZMatrix::identity(2));
  int diag = tp2.find_cone({2});
  ZMatrix pi = tp2.projection(0, diag);
  CHECK(pi.rows() == 1);
  CHECK(pi(0, 0) == -pi(0, 1));
  CHECK(pi(0, 0) != 0);
  CHECK(tp2.sedentarity(0) == 0);
  CHECK(tp2.sedentarity(tp2.find_cone({0, 1})) == 2);
  CHECK(tp2.complete());
  ToricVariety half(load_fan("dim 2\nray 0: 1 0\ncone: 0\n"));
  CHECK(half.projection(0, 1) == mat(1, 2, {0, 1}));
  CHECK(!half.complete());
  ToricVariety tp3(load_fan(fixture("tp3.fan")));
  CHECK(tp3.sedentarity(tp3.find_cone({3})) == 1);
}

TEST_CASE("projection functoriality on fixture fans") {
  for (auto name : {"tp2.fan", "tp3.fan", "blowup.fan", "tp1xtp1.fan"}) {
    ToricVariety y(load_fan(fixture(name)));
    for (int a = 0; a < y.cone_count(); ++a)
      for (int b : y.cofaces(a))
        for (int c : y.cofaces(b)) CHECK(y.projection(a, c) == y.projection(b, c) * y.projection(a, b));
  }
}

TEST_CASE("compactify") {
  ToricVariety tp2(load_fan(fixture("tp2.fan")));
  auto bounded = compactify(convex_hull({{0, 0}, {1, 0}, {0, 1}}), tp2);
  CHECK(bounded.size() == 1);
  CHECK(bounded.count(0) == 1);
  auto ray = compactify(QPolyhedron::from_vrep(2, {{0, 0}}, {{1, 1}}), tp2);
  CHECK(ray.size() == 2);
  int diag = tp2.find_cone({2});
  REQUIRE(ray.count(diag) == 1);
  CHECK(ray.at(diag).dim() == 0);
  ToricVariety strip_y(load_fan("dim 2\nray 0: -1 0\ncone: 0\n"));
  auto strip = QPolyhedron::from_vrep(2, {{0, 0}, {0, 1}}, {}, {{1, 0}});
  auto pieces = compactify(strip, strip_y);
  REQUIRE(pieces.count(1) == 1);
  CHECK(pieces.at(1).dim() == 1);
  CHECK(pieces.at(1).bounded());
  CHECK(pieces.at(1).vertices() == std::vector<QVec>{{0}, {1}});
}

TEST_CASE("compactify agrees with an independent relint oracle") {
  ToricVariety y(load_fan(fixture("blowup.fan")));
  std::vector<QPolyhedron> polys = {
      QPolyhedron::from_vrep(3, {{0, 0, 0}}, {{1, 1, 1}}),
      QPolyhedron::from_vrep(3, {{0, 0, 0}}, {{-1, 0, 0}, {0, -1, 0}}),
      QPolyhedron::from_vrep(3, {{0, 0, 0}}, {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
      QPolyhedron::from_vrep(3, {{1, 2, 3}}, {{-1, -1, -1}, {1, 1, 1}}),
      QPolyhedron::from_vrep(3, {{0, 0, 0}, {1, 0, 0}}, {{0, 0, -1}, {-1, -1, -1}}),
  };
  for (const auto& p : polys) {
    auto pieces = compactify(p, y);
    for (int c = 0; c < y.cone_count(); ++c) CHECK((pieces.count(c) == 1) == meets_relint_oracle(p, y, c));
  }
}
