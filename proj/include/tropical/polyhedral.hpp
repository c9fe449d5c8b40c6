#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tropical/linalg.hpp"

namespace trop {

// maximize c.x subject to A x <= b, E x = e, and x_j >= 0 for j marked nonneg.
struct LinearProgram {
  int n = 0;
  std::vector<QVec> A;
  QVec b;
  std::vector<QVec> E;
  QVec e;
  std::vector<bool> nonneg;  // empty means all free
  QVec c;
};

struct LPResult {
  enum Status { Optimal, Infeasible, Unbounded } status = Infeasible;
  Rat value;
  QVec x;
};

LPResult solve_lp(const LinearProgram& lp);
bool lp_feasible(const LinearProgram& lp);

// Generators of {y : A y >= 0, E y = 0}: extreme rays of the pointed part
// (primitive) plus a basis of the lineality space.
struct ConeGenerators {
  std::vector<ZVec> rays;
  std::vector<ZVec> lineality;
};
ConeGenerators cone_generators(int dim, const std::vector<ZVec>& ineq, const std::vector<ZVec>& eq);

struct Facet {
  ZVec normal;  // primitive, outward
  Rat offset;   // facet = {x : <normal, x> = offset}, polyhedron on the <= side
};

struct Equation {
  ZVec normal;
  Rat offset;
};

class QPolyhedron {
 public:
  QPolyhedron() = default;
  static QPolyhedron from_vrep(int dim, const std::vector<QVec>& vertices, const std::vector<ZVec>& rays,
                               const std::vector<ZVec>& lineality = {});
  static QPolyhedron from_hrep(int dim, const std::vector<Facet>& ineqs, const std::vector<Equation>& eqs);

  int ambient_dim() const { return dim_; }
  int dim() const;
  bool empty() const { return vertices_.empty(); }
  bool bounded() const { return rays_.empty() && lineality_.empty(); }
  const std::vector<QVec>& vertices() const { return vertices_; }
  const std::vector<ZVec>& rays() const { return rays_; }
  const std::vector<ZVec>& lineality() const { return lineality_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Equation>& equations() const { return equations_; }
  bool contains(const QVec& x) const;

 private:
  int dim_ = 0;
  std::vector<QVec> vertices_;
  std::vector<ZVec> rays_;
  std::vector<ZVec> lineality_;
  std::vector<Facet> facets_;
  std::vector<Equation> equations_;
};

QPolyhedron convex_hull(const std::vector<QVec>& points);
QPolyhedron recession_cone(const QPolyhedron& p);
QPolyhedron intersect(const QPolyhedron& a, const QPolyhedron& b);

struct Face {
  std::vector<int> vertices;  // indices into QPolyhedron::vertices()
  std::vector<int> rays;      // indices into QPolyhedron::rays()
  int dim = 0;
};
struct FaceLattice {
  std::vector<Face> faces;                  // sorted by (dim, vertices, rays)
  std::vector<std::vector<int>> covers;     // faces[i] covered-by list (one dim up)
  std::vector<long> f_vector() const;
};
FaceLattice face_lattice(const QPolyhedron& p);

struct LatticePolytope {
  int ambient_dim = 0;
  std::vector<ZVec> vertices;
};

int affine_dimension(const std::vector<ZVec>& points);

struct SubdivisionFace {
  std::vector<int> points;  // sorted indices into support points
  int dim = 0;
};

struct RegularSubdivision {
  int ambient_dim = 0;
  int dimension = 0;  // dimension of the polytope
  std::vector<ZVec> points;
  QVec heights;
  std::vector<SubdivisionFace> faces;  // all faces of all cells, sorted by point set
  std::vector<int> cells;              // indices of maximal faces
  std::vector<bool> used;
  int face_index(const std::vector<int>& pts) const;
};

RegularSubdivision regular_subdivision(const std::vector<ZVec>& points, const QVec& heights);
bool is_unimodular_simplex(const std::vector<ZVec>& pts);
bool is_primitive(const RegularSubdivision& s);

}  // namespace trop
