#include "doctest.h"
#include "tropical/complex.hpp"

using namespace trop;

namespace {
std::string fixture(const std::string& name) { return read_text_file(std::string(FIXTURE_DIR) + "/" + name); }

HypersurfacePair build(const std::string& poly, const std::string& fan, BuildOptions opt = {}) {
  auto f = parse_polynomial(fixture(poly));
  FanSpec s = fan.empty() ? normal_fan(newton_polytope(f)) : load_fan(fixture(fan));
  return build_pair(f, s, opt);
}

HypersurfacePair build_trivial(const std::string& poly, int dim, BuildOptions opt = {}) {
  return build_pair(parse_polynomial(fixture(poly)), trivial_fan(dim), opt);
}

// interior lattice points of d * standard simplex, by enumeration
long interior_points(int n, int d) {
  long count = 0;
  std::vector<int> a(n, 1);
  while (true) {
    int s = 0;
    for (int x : a) s += x;
    if (s < d) ++count;
    int i = 0;
    while (i < n && ++a[i] >= d) a[i++] = 1;
    if (i == n) break;
  }
  return count;
}

std::vector<long> counts_by_dim(const CellComplex& c, bool sed0_only) {
  std::vector<long> f(c.ambient_dim + 1, 0);
  for (const auto& cell : c.cells)
    if (!sed0_only || cell.cone == 0) ++f[cell.dim];
  return f;
}
}  // namespace

TEST_CASE("tropical line in TP2") {
  auto p = build("hyperplane1.trop", "tp2.fan");
  CHECK(counts_by_dim(p.ambient, false) == std::vector<long>{7, 9, 3});
  CHECK(counts_by_dim(p.X, false) == std::vector<long>{4, 3, 0});
  CHECK(counts_by_dim(p.X, true) == std::vector<long>{1, 3, 0});
  for (const auto& c : p.ambient.cells) CHECK(c.compact);
  CHECK(is_proper(p));
  CHECK(is_nonsingular(p));
  CHECK(is_combinatorially_ample(p));
  CHECK(is_cellular_pair(p) == Tri::Yes);
  // edge directions of the line
  std::set<ZVec> dirs;
  for (const auto& c : p.X.cells)
    if (c.cone == 0 && c.dim == 1) dirs.insert(c.geometry.rays().at(0));
  CHECK(dirs == std::set<ZVec>{{-1, 0}, {0, -1}, {1, 1}});
}

TEST_CASE("standard hyperplanes in R^{n+1}") {
  for (int n = 1; n <= 3; ++n) {
    auto X = dual_hypersurface(parse_polynomial(fixture("hyperplane" + std::to_string(n) + ".trop")));
    // one vertex; every subset of the n+2 rays of size k <= n spans a k-cell
    auto f = counts_by_dim(X, true);
    for (int k = 0; k <= n; ++k) CHECK(f[k] == binomial(n + 2, k));
    CHECK(f[n + 1] == 0);
    for (const auto& c : X.cells)
      if (c.dim == 1) {
        ZVec r = c.geometry.rays().at(0);
        int neg = 0, ones = 0;
        for (const auto& x : r) {
          if (x == -1) ++neg;
          if (x == 1) ++ones;
        }
        CHECK(((neg == 1 && ones == 0) || ones == n + 1));
      }
  }
}

TEST_CASE("duality between X0 and the subdivision") {
  for (auto [name, dim] : std::vector<std::pair<std::string, int>>{
           {"conic.trop", 2}, {"cubic.trop", 2}, {"quartic_curve.trop", 2}, {"quadric_surface.trop", 3}}) {
    auto p = build_trivial(name, dim);
    const auto& s = p.subdivision;
    std::vector<long> faces(dim + 1, 0);
    for (const auto& F : s.faces) ++faces[F.dim];
    auto cells = counts_by_dim(p.X, true);
    for (int q = 0; q < dim; ++q) CHECK(cells[q] == faces[dim - q]);
    auto regions = counts_by_dim(p.ambient, true)[dim];
    CHECK(regions == faces[0]);
  }
}

TEST_CASE("plane curve first Betti number equals interior points") {
  for (int d = 2; d <= 4; ++d) {
    const char* names[] = {"", "", "conic.trop", "cubic.trop", "quartic_curve.trop"};
    auto X = dual_hypersurface(parse_polynomial(fixture(names[d])));
    long v = 0, bounded_edges = 0;
    for (const auto& c : X.cells) {
      if (c.dim == 0) ++v;
      if (c.dim == 1 && c.geometry.bounded()) ++bounded_edges;
    }
    CHECK(bounded_edges - v + 1 == interior_points(2, d));
  }
}

TEST_CASE("blow-up fixture is proper and non-singular but not ample") {
  auto p = build("hyperplane2.trop", "blowup.fan");
  CHECK(is_proper(p));
  CHECK(is_nonsingular(p));
  auto a = combinatorial_ampleness(p);
  CHECK(!a.ample);
  REQUIRE(a.failing.size() == 1);
  // the failing region is the one whose closure contains the exceptional stratum
  int exc = p.Y.find_cone({4});
  bool meets = false;
  for (int c : p.ambient.pieces[a.failing[0]])
    if (p.ambient.cells[c].cone == exc) meets = true;
  CHECK(meets);
}

TEST_CASE("hyperplanes in TPn are ample, non-singular, cellular") {
  for (auto [poly, fan] : std::vector<std::pair<std::string, std::string>>{
           {"hyperplane1.trop", "tp2.fan"}, {"hyperplane2.trop", "tp3.fan"}}) {
    auto p = build(poly, fan);
    CHECK(is_proper(p));
    CHECK(is_nonsingular(p));
    CHECK(is_combinatorially_ample(p));
    CHECK(is_cellular_pair(p) == Tri::Yes);
  }
}

TEST_CASE("non-singularity") {
  CHECK(!is_nonsingular(build("conic_flat.trop", "")));
  CHECK(is_nonsingular(build("quartic_surface.trop", "")));
  CHECK(is_nonsingular(build("cubic.trop", "")));
}

TEST_CASE("properness") {
  CHECK(!is_proper(build("hyperplane1.trop", "quadrant.fan")));
  CHECK(is_proper(build("hyperplane1.trop", "affine_plane.fan")));
  CHECK(is_proper(build("cubic.trop", "tp2.fan")));
}

TEST_CASE("cellular pair tri-state") {
  BuildOptions raw;
  raw.refine_lineality = false;
  CHECK(is_cellular_pair(build_trivial("flat1.trop", 2, raw)) == Tri::No);
  CHECK(is_cellular_pair(build_trivial("hyperplane1.trop", 2)) == Tri::Yes);
  CHECK(is_cellular_pair(build_trivial("cubic.trop", 2)) == Tri::Yes);
  CHECK(is_cellular_pair(build("tripod_t2.trop", "affine_plane.fan")) == Tri::No);
  auto refined = build_trivial("flat1.trop", 2);
  CHECK(refined.lineality_refined);
  for (const auto& c : refined.ambient.cells) CHECK(c.geometry.lineality().empty());
}

TEST_CASE("compactness flags") {
  auto plane = build_trivial("cubic.trop", 2);
  for (const auto& c : plane.ambient.cells) CHECK(c.compact == c.geometry.bounded());
  auto chart = build("hyperplane1.trop", "affine_plane.fan");
  // the region dual to the constant term lies over the quadrant and closes up
  int compact_regions = 0;
  for (const auto& c : chart.ambient.cells)
    if (c.cone == 0 && c.dim == 2 && c.compact) ++compact_regions;
  CHECK(compact_regions == 1);
  for (const auto& c : chart.X.cells)
    if (c.cone == 0 && c.dim == 1) {
      ZVec r = c.geometry.rays().at(0);
      CHECK(c.compact == (r != ZVec{1, 1}));
    }
}

TEST_CASE("gamma open") {
  auto line = build("hyperplane1.trop", "tp2.fan");
  for (int i = 0; i < line.ambient.size(); ++i) {
    const auto& c = line.ambient.cells[i];
    if (c.cone != 0) continue;
    auto g = gamma_open(line, i);
    if (c.geometry.bounded()) CHECK(g.cells.size() == 1);
    if (c.in_x && c.dim == 1) CHECK(g.cells.size() == 2);
    CHECK(g.minimal.has_value());
  }
  auto h2 = build("hyperplane2.trop", "tp3.fan");
  int twofaces = 0;
  for (int i = 0; i < h2.ambient.size(); ++i) {
    const auto& c = h2.ambient.cells[i];
    if (c.cone != 0 || !c.in_x || c.dim != 2) continue;
    ++twofaces;
    auto g = gamma_open(h2, i);
    CHECK(g.cells.size() == 4);
    REQUIRE(g.minimal.has_value());
    CHECK(h2.ambient.cells[*g.minimal].dim == 0);
    // poset of T^2: one 2-cell, two 1-cells, one point
    std::vector<int> dims(3, 0);
    for (int x : g.cells) ++dims[h2.ambient.cells[x].dim];
    CHECK(dims == std::vector<int>{1, 2, 1});
  }
  CHECK(twofaces == 6);
}

TEST_CASE("unique minimal face and at most one sedentarity-0 coface") {
  for (auto [poly, fan] : std::vector<std::pair<std::string, std::string>>{
           {"hyperplane2.trop", "tp3.fan"}, {"cubic.trop", ""}, {"quadric_surface.trop", ""}}) {
    auto p = build(poly, fan);
    REQUIRE(is_nonsingular(p));
    REQUIRE(is_combinatorially_ample(p));
    const auto& X = p.X;
    for (int i = 0; i < X.size(); ++i) {
      if (X.cells[i].cone == 0) {
        CHECK(gamma_open(p, p.x_to_ambient[i]).minimal.has_value());
        continue;
      }
      int sed0 = 0;
      for (int j = 0; j < X.size(); ++j)
        if (X.cells[j].cone == 0 && X.is_face(i, j) && X.cells[j].dim == X.cells[i].dim + p.Y.cone_dim(X.cells[i].cone))
          ++sed0;
      CHECK(sed0 <= 1);
    }
  }
}

TEST_CASE("closure of every cell is a union of cells") {
  auto p = build("cubic.trop", "");
  const auto& Z = p.ambient;
  for (int i = 0; i < Z.size(); ++i)
    for (int j : Z.faces[i])
      for (int k : Z.faces[j]) CHECK(Z.is_face(k, i));
  for (int i = 0; i < Z.size(); ++i)
    if (Z.cells[i].dim > 0) CHECK(!Z.facets[i].empty());
}
