// One PASS/FAIL line per acceptance criterion. All comparisons are exact.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "tropical/suites.hpp"

using namespace trop;

namespace {

// every criterion compares integers or integer polynomials; nothing is approximate
constexpr long kTolerance = 0;

struct Check {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << what;
      pass = false;
    }
  }
  void expect_eq(long got, long want, const std::string& what) {
    expect(std::abs(got - want) <= kTolerance, what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  }
};

std::string fixture(const std::string& name) { return read_text_file(std::string(FIXTURE_DIR) + "/" + name); }

// fan: "" for the normal fan, "trivial" for R^{n+1}, else a fan fixture
HypersurfacePair build(const std::string& poly, const std::string& fan = "", const BuildOptions& opt = {}) {
  auto f = parse_polynomial(fixture(poly));
  FanSpec s = fan == "trivial" ? trivial_fan(f.n_vars)
              : fan.empty()    ? normal_fan(newton_polytope(f))
                               : load_fan(fixture(fan));
  return build_pair(f, s, opt);
}

long choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// coefficients of (a + b t)^k by the binomial theorem
std::vector<long> binomial_power(long a, long b, int k) {
  std::vector<long> c(k + 1);
  for (int i = 0; i <= k; ++i) {
    long v = choose(k, i);
    for (int j = 0; j < k - i; ++j) v *= a;
    for (int j = 0; j < i; ++j) v *= b;
    c[i] = v;
  }
  return c;
}

std::vector<long> trimmed(std::vector<long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<long> as_longs(const IntPoly& p) {
  std::vector<long> v;
  for (const auto& x : p) v.push_back(x.get_si());
  return trimmed(v);
}

// (1-l)^m - (1-l)^q (-l)^{m-q}
std::vector<long> ep_oracle(int m, int q) {
  std::vector<long> out = binomial_power(1, -1, m);
  auto a = binomial_power(1, -1, q);
  const long sign = (m - q) % 2 ? -1 : 1;
  for (int i = 0; i <= q; ++i) out[i + m - q] -= sign * a[i];
  return trimmed(out);
}

std::vector<HomologyRow> x_homology(const HypersurfacePair& pair, int p, Variant v, Ring r = Ring::Z) {
  return homology(chain_complex(pair.X, orient(pair.X, pair.Y), multitangent(pair.X, pair.Y, p), v, r));
}

std::vector<HomologyRow> y_homology(const HypersurfacePair& pair, int p, Variant v, Ring r = Ring::Z) {
  return homology(
      chain_complex(pair.ambient, orient(pair.ambient, pair.Y), ambient_on_cells(pair.ambient, pair.Y, p), v, r));
}

long rank_at(const std::vector<HomologyRow>& h, int q) { return q < static_cast<int>(h.size()) ? h[q].rank : 0; }

bool torsion_free(const std::vector<HomologyRow>& h) {
  for (const auto& r : h)
    if (!r.torsion.empty()) return false;
  return true;
}

std::string label(const std::string& poly, const std::string& fan) {
  return poly + (fan.empty() ? "" : "+" + fan);
}

std::string section_failure(const Section& s) {
  for (const auto& a : s.assertions)
    if (!a.pass) return s.name + " " + a.name + " " + a.detail;
  return s.name;
}

const std::vector<std::pair<std::string, std::string>> kLefschetzFixtures = {
    {"hyperplane2.trop", ""},          {"hyperplane3.trop", ""},         {"conic.trop", ""},
    {"cubic.trop", ""},                {"quartic_surface.trop", ""},     {"hyperplane1.trop", "trivial"},
    {"cubic.trop", "trivial"},         {"quartic_curve.trop", "trivial"}, {"hyperplane2.trop", "trivial"},
    {"quadric_surface.trop", "trivial"}};

Check a1() {
  Check c;
  const char* names[] = {"hyperplane1.trop", "hyperplane2.trop", "hyperplane3.trop"};
  for (int n = 1; n <= 3; ++n) {
    auto pair = build(names[n - 1]);
    int v = -1;
    for (int s = 0; s < pair.X.size(); ++s)
      if (pair.X.cells[s].cone == 0 && pair.X.cells[s].dim == 0) v = s;
    c.expect(v >= 0, "no vertex");
    if (v < 0) return c;
    for (int p = 0; p <= n + 1; ++p)
      c.expect_eq(multitangent(pair.X, pair.Y, p).rank(v), p <= n ? choose(n + 1, p) : 0,
                  "n=" + std::to_string(n) + " p=" + std::to_string(p));
    // (1-l)^{n+1} - (-l)^{n+1}
    auto want = binomial_power(1, -1, n + 1);
    want[n + 1] -= (n + 1) % 2 ? -1 : 1;
    c.expect(as_longs(stalk_rank_polynomial(pair, v)) == trimmed(want), "vertex polynomial n=" + std::to_string(n));
  }
  return c;
}

Check a2() {
  Check c;
  auto pair = build("hyperplane1.trop");
  c.expect(pair.ambient.f_vector() == std::vector<long>{7, 9, 3}, "ambient f-vector");
  auto f1 = multitangent(pair.X, pair.Y, 1);
  const std::vector<std::vector<long>> rays = {{-1, 0}, {0, -1}, {1, 1}};
  for (int s = 0; s < pair.X.size(); ++s) {
    const auto& cell = pair.X.cells[s];
    if (cell.cone != 0) {
      c.expect_eq(f1.rank(s), 0, "sedentary stalk");
    } else if (cell.dim == 0) {
      c.expect(LatticeSubspace::from_generators(f1.basis[s]) == LatticeSubspace::from_generators(ZMatrix::identity(2)),
               "vertex stalk is Z^2");
    } else {
      bool matched = false;
      for (const auto& r : rays) {
        ZMatrix m(2, 1);
        m(0, 0) = r[0];
        m(1, 0) = r[1];
        matched = matched || LatticeSubspace::from_generators(f1.basis[s]) == LatticeSubspace::from_generators(m);
      }
      c.expect(matched, "edge stalk is its primitive direction");
    }
  }
  for (auto v : {Variant::Standard, Variant::BorelMoore})
    for (int p = 0; p <= 1; ++p) {
      auto h = x_homology(pair, p, v);
      c.expect(torsion_free(h), "torsion");
      for (int q = 0; q <= 1; ++q)
        c.expect_eq(rank_at(h, q), p == q ? 1 : 0, to_string(v) + " H_" + std::to_string(q) + "(F_" + std::to_string(p) + ")");
    }
  return c;
}

Check a3() {
  Check c;
  auto pair = build("hyperplane2.trop", "blowup.fan");
  c.expect_eq(rank_at(x_homology(pair, 1, Variant::BorelMoore), 1), 1, "rank H1(X;F1)");
  c.expect_eq(rank_at(y_homology(pair, 1, Variant::BorelMoore), 1), 2, "rank H1(Y;F1)");
  c.expect(!is_combinatorially_ample(pair), "ampleness should fail");
  auto s = lefschetz_suite(pair);
  c.expect(s.skipped, "lefschetz suite should skip");
  // ray 4 is the exceptional divisor
  c.expect(s.reason.find("{4}") != std::string::npos, "skip reason names the exceptional cone: " + s.reason);
  auto rows = induced_map(pair, 1, Variant::BorelMoore);
  c.expect(rows.size() > 1 && !rows[1].surjective, "H1 map should not be surjective");
  c.detail << "skip: " << s.reason.substr(0, 60);
  return c;
}

Check a4() {
  Check c;
  const char* names[] = {"flat1.trop", "flat2.trop", "flat3.trop"};
  for (int n = 1; n <= 3; ++n) {
    auto pair = build(names[n - 1], "trivial");
    const std::string tag = "n=" + std::to_string(n);
    for (int p = 0; p <= n + 1; ++p) {
      if (p <= n) {
        auto xs = x_homology(pair, p, Variant::Standard), xb = x_homology(pair, p, Variant::BorelMoore);
        for (int q = 0; q <= n; ++q) {
          c.expect_eq(rank_at(xs, q), q == 0 ? choose(n, p) : 0, tag + " standard X");
          c.expect_eq(rank_at(xb, q), q == n ? choose(n, p) : 0, tag + " BM X");
        }
        c.expect(torsion_free(xs) && torsion_free(xb), tag + " X torsion");
      }
      auto ys = y_homology(pair, p, Variant::Standard), yb = y_homology(pair, p, Variant::BorelMoore);
      for (int q = 0; q <= n + 1; ++q) {
        c.expect_eq(rank_at(ys, q), q == 0 ? choose(n + 1, p) : 0, tag + " standard Y");
        c.expect_eq(rank_at(yb, q), q == n + 1 ? choose(n + 1, p) : 0, tag + " BM Y");
      }
    }
    // standard Lefschetz fails: Z^n -> Z^{n+1} at p=1, q=0
    auto m = induced_map(pair, 1, Variant::Standard);
    c.expect(!m[0].surjective, tag + " standard p=1 q=0 should not be surjective");
    auto s = lefschetz_suite(pair);
    c.expect(!s.skipped && s.ok(), tag + " BM Lefschetz: " + section_failure(s));
  }
  return c;
}

Check a5() {
  Check c;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"hyperplane1.trop", ""},       {"hyperplane2.trop", ""},          {"hyperplane3.trop", ""},
      {"conic.trop", ""},             {"cubic.trop", ""},                {"quartic_curve.trop", ""},
      {"quadric_surface.trop", ""},   {"quartic_surface.trop", ""},      {"hyperplane2.trop", "blowup.fan"},
      {"conic.trop", "tp1xtp1.fan"}, {"cubic.trop", "trivial"},         {"cubic.trop", "affine_plane.fan"},
      {"flat2.trop", "trivial"}};
  long cells = 0;
  for (const auto& [poly, fan] : cases) {
    auto pair = build(poly, fan);
    if (!is_nonsingular(pair)) continue;
    const bool flat = !newton_polytope_full(pair);
    for (int s = 0; s < pair.X.size(); ++s) {
      const int m = pair.Y.stratum_dim(pair.X.cells[s].cone);
      // a flat X is one face of dimension m-1 cut up by the lineality refinement
      const int q = flat ? m - 1 : pair.X.cells[s].dim;
      c.expect(as_longs(stalk_rank_polynomial(pair, s)) == ep_oracle(m, q),
               label(poly, fan) + " cell " + std::to_string(s));
      ++cells;
    }
  }
  if (c.pass) c.detail << cells << " cells";
  return c;
}

Check a6() {
  Check c;
  int with_standard = 0;
  for (const auto& [poly, fan] : kLefschetzFixtures) {
    auto pair = build(poly, fan);
    auto s = lefschetz_suite(pair);
    c.expect(!s.skipped, label(poly, fan) + " skipped: " + s.reason);
    c.expect(s.ok(), label(poly, fan) + " " + section_failure(s));
    for (const auto& a : s.assertions) with_standard += a.name.rfind("standard", 0) == 0;
  }
  c.expect(with_standard > 0, "no standard maps checked");
  if (c.pass) c.detail << kLefschetzFixtures.size() << " fixtures, " << with_standard << " standard maps";
  return c;
}

Check a7() {
  Check c;
  for (const auto& [poly, fan] : kLefschetzFixtures) {
    auto pair = build(poly, fan);
    auto s = vanishing_suite(pair);
    c.expect(!s.skipped, label(poly, fan) + " skipped: " + s.reason);
    c.expect(s.ok(), label(poly, fan) + " " + section_failure(s));
  }
  return c;
}

Check a8() {
  Check c;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"hyperplane1.trop", ""},         {"hyperplane2.trop", ""},      {"conic.trop", ""},
      {"cubic.trop", ""},               {"quartic_curve.trop", ""},    {"quadric_surface.trop", ""},
      {"quartic_surface.trop", ""},     {"cubic.trop", "trivial"},     {"hyperplane2.trop", "trivial"}};
  for (const auto& [poly, fan] : cases) {
    auto pair = build(poly, fan);
    auto s = torsion_suite(pair);
    c.expect(!s.skipped, label(poly, fan) + " skipped: " + s.reason);
    c.expect(s.ok(), label(poly, fan) + " " + section_failure(s));
    // Z2 dimensions equal Z ranks once torsion is gone
    const int n = pair.Y.dim() - 1;
    for (int p = 0; p <= n; ++p) {
      auto z = x_homology(pair, p, Variant::BorelMoore), z2 = x_homology(pair, p, Variant::BorelMoore, Ring::Z2);
      for (int q = 0; q <= n; ++q) c.expect_eq(rank_at(z2, q), rank_at(z, q), label(poly, fan) + " Z2 vs Z");
    }
  }
  return c;
}

// interior lattice points of d * (standard 2-simplex), counted directly
long interior_points_2(int d) {
  long k = 0;
  for (int a = 1; a < d; ++a)
    for (int b = 1; a + b < d; ++b) ++k;
  return k;
}

Check a9() {
  Check c;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"hyperplane1.trop", ""},         {"hyperplane2.trop", ""},          {"hyperplane3.trop", ""},
      {"conic.trop", ""},               {"cubic.trop", ""},                {"quartic_curve.trop", ""},
      {"quadric_surface.trop", ""},     {"quartic_surface.trop", ""},      {"hyperplane2.trop", "blowup.fan"},
      {"cubic.trop", "trivial"},        {"quartic_curve.trop", "trivial"}, {"hyperplane3.trop", "trivial"},
      {"cubic.trop", "affine_plane.fan"}, {"flat1.trop", "trivial"},       {"flat3.trop", "trivial"}};
  for (const auto& [poly, fan] : cases) {
    auto pair = build(poly, fan);
    c.expect(chi_y_from_homology(pair) == chi_y_from_f_vector(pair), label(poly, fan) + " routes differ");
  }
  auto k3 = build("quartic_surface.trop");
  c.expect(as_longs(chi_y_from_homology(k3)) == std::vector<long>{2, 20, 2}, "K3 from homology");
  c.expect(as_longs(chi_y_from_f_vector(k3)) == std::vector<long>{2, 20, 2}, "K3 from f-vector");
  const char* curves[] = {"conic.trop", "cubic.trop", "quartic_curve.trop"};
  for (int d = 2; d <= 4; ++d) {
    const long g = interior_points_2(d);
    c.expect_eq(g, choose(d - 1, 2), "interior points vs C(d-1,2)");
    c.expect_eq(lattice_point_oracle(standard_simplex(2), d).interior, g, "lattice oracle");
    auto pair = build(curves[d - 2]);
    // (1-g)(1+y)
    c.expect(as_longs(chi_y_from_homology(pair)) == trimmed({1 - g, 1 - g}), "genus d=" + std::to_string(d));
    auto h = x_homology(pair, 1, Variant::Standard);
    c.expect_eq(rank_at(h, 0), g, "h^{1,0} d=" + std::to_string(d));
  }
  return c;
}

Check a10() {
  Check c;
  std::vector<std::pair<FanSpec, std::vector<long>>> cases;
  // h-vectors of P^n are all ones; P1 x P1 is the square of (1,1)
  cases.push_back({normal_fan(standard_simplex(1)), {1, 1}});
  cases.push_back({load_fan(fixture("tp2.fan")), {1, 1, 1}});
  cases.push_back({load_fan(fixture("tp3.fan")), {1, 1, 1, 1}});
  cases.push_back({load_fan(fixture("tp1xtp1.fan")), {1, 2, 1}});
  for (const auto& [fan, h] : cases) {
    ToricVariety y(fan);
    auto r = toric_homology_report(y);
    const std::string tag = "dim " + std::to_string(y.dim());
    c.expect(r.ok(), tag + " report: " + (r.violations.empty() ? "" : r.violations.front()));
    c.expect(r.h == h, tag + " h-vector");
    for (size_t p = 0; p < r.table.size(); ++p)
      for (const auto& row : r.table[p]) {
        c.expect_eq(row.rank, row.q == static_cast<int>(p) ? h[p] : 0, tag + " H_q(F_p)");
        c.expect(row.torsion.empty(), tag + " torsion");
      }
    // f/h chain identity with the oracle h: sum_q (-1)^q C(q,p) f_q = (-1)^p h_p
    for (size_t p = 0; p < h.size(); ++p) {
      long s = 0;
      for (size_t q = 0; q < r.f.size(); ++q) s += (q % 2 ? -1 : 1) * choose(q, p) * r.f[q];
      c.expect_eq(s, (p % 2 ? -1 : 1) * h[p], tag + " f/h identity");
    }
  }
  return c;
}

Check a11() {
  Check c;
  const std::vector<std::pair<std::string, int>> cases = {
      {"hyperplane1.trop", 1}, {"hyperplane2.trop", 2}, {"hyperplane3.trop", 3}, {"cubic.trop", 1}};
  for (const auto& [poly, n] : cases) {
    auto pair = build(poly, "trivial");
    auto r = torus_bm_prediction(pair);
    c.expect(r.ok(), poly + ": " + (r.violations.empty() ? "" : r.violations.front()));
    for (int p = 0; p <= n; ++p) {
      auto h = x_homology(pair, p, Variant::BorelMoore);
      for (int q = 0; q <= n; ++q) {
        if (p + q == n) continue;
        c.expect_eq(rank_at(h, q), q == n ? choose(n + 1, p + 1) : 0, poly + " p=" + std::to_string(p));
      }
    }
  }
  return c;
}

ZMatrix random_matrix(std::mt19937& rng, int r, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ZMatrix m(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

Check a12() {
  Check c;
  const std::vector<std::pair<std::string, std::string>> fixtures = {
      {"hyperplane1.trop", ""},      {"hyperplane2.trop", ""},      {"hyperplane3.trop", ""},
      {"conic.trop", ""},            {"cubic.trop", ""},            {"quartic_curve.trop", ""},
      {"quadric_surface.trop", ""},  {"quartic_surface.trop", ""},  {"hyperplane2.trop", "blowup.fan"},
      {"conic_flat.trop", ""},       {"cubic.trop", "trivial"},     {"flat2.trop", "trivial"},
      {"cubic.trop", "affine_plane.fan"}};
  long squares = 0;
  for (const auto& [poly, fan] : fixtures) {
    auto pair = build(poly, fan);
    const bool smooth = is_nonsingular(pair);
    for (auto v : {Variant::Standard, Variant::BorelMoore})
      for (int p = 0; p <= pair.Y.dim(); ++p) {
        std::vector<ChainComplex> cs;
        cs.push_back(chain_complex(pair.ambient, orient(pair.ambient, pair.Y), ambient_on_cells(pair.ambient, pair.Y, p),
                                   v, Ring::Z));
        if (smooth && p < pair.Y.dim())
          cs.push_back(chain_complex(pair.X, orient(pair.X, pair.Y), multitangent(pair.X, pair.Y, p), v, Ring::Z));
        for (const auto& cc : cs)
          for (int q = 2; q <= cc.top(); ++q) {
            c.expect((cc.boundary[q - 1] * cc.boundary[q]).is_zero(), label(poly, fan) + " boundary squared");
            ++squares;
          }
      }
  }
  std::mt19937 rng(20240501);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 500; ++t) {
    ZMatrix m = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    auto s = snf(m);
    c.expect(s.U * m * s.V == s.D, "U M V = D");
    c.expect(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "unimodular transforms");
    auto f = s.factors();
    for (size_t i = 0; i + 1 < f.size(); ++i) c.expect(f[i + 1] % f[i] == 0, "divisibility chain");
    for (int i = 0; i < s.D.rows(); ++i)
      for (int j = 0; j < s.D.cols(); ++j)
        if (i != j) c.expect(s.D(i, j) == 0, "D diagonal");
  }
  for (int t = 0; t < 100; ++t) {
    ZMatrix a = random_matrix(rng, 4, 3, -4, 4), b = random_matrix(rng, 3, 4, -4, 4);
    for (int p = 0; p <= 3; ++p)
      c.expect(exterior_power(a * b, p) == exterior_power(a, p) * exterior_power(b, p), "exterior power of a product");
  }
  // one refinement of each fixture: BM tables of X and Y do not move
  for (const auto& [poly, fan] : fixtures) {
    auto base = build(poly, fan);
    if (!is_nonsingular(base)) continue;
    BuildOptions opt;
    std::string refiner = "max(3";
    for (int i = 1; i <= base.Y.dim(); ++i) refiner += ", x" + std::to_string(i);
    opt.refiners.push_back(parse_polynomial(refiner + ")"));
    auto finer = build(poly, fan, opt);
    c.expect(finer.ambient.size() > base.ambient.size(), label(poly, fan) + " refinement adds cells");
    for (int p = 0; p <= base.Y.dim(); ++p) {
      auto ranks = [](const std::vector<HomologyRow>& h) {
        std::vector<long> r;
        for (const auto& x : h) r.push_back(x.rank);
        return r;
      };
      c.expect(ranks(y_homology(base, p, Variant::BorelMoore)) == ranks(y_homology(finer, p, Variant::BorelMoore)),
               label(poly, fan) + " Y table moved");
      if (p < base.Y.dim())
        c.expect(ranks(x_homology(base, p, Variant::BorelMoore)) == ranks(x_homology(finer, p, Variant::BorelMoore)),
                 label(poly, fan) + " X table moved");
    }
  }
  if (c.pass) c.detail << squares << " boundary products, 500 SNFs";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},  {"A5", a5},  {"A6", a6},
      {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10}, {"A11", a11}, {"A12", a12}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    bool pass = false;
    std::string detail;
    try {
      auto c = run();
      pass = c.pass;
      detail = c.detail.str();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    failed += !pass;
    std::cout << name << " " << (pass ? "PASS" : "FAIL") << (detail.empty() ? "" : "  " + detail) << std::endl;
  }
  return failed ? 1 : 0;
}
