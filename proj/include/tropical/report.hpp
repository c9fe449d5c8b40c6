#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tropical/homology.hpp"

namespace trop {

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// coefficient of y^p = (-1)^p * Euler characteristic of C^BM(X; F_p)
IntPoly chi_y_from_homology(const HypersurfacePair& pair);
// Sum over strata of the bounded-face formula of each stratum hypersurface.
IntPoly chi_y_from_f_vector(const HypersurfacePair& pair);
std::string poly_to_string(const IntPoly& p, const std::string& var = "y");

struct LatticeCount {
  long total = 0;
  long interior = 0;  // relative interior
};
LatticeCount lattice_point_oracle(const LatticePolytope& polytope, int dilation, long cap = 1000000);
LatticePolytope standard_simplex(int n);

// One cell per cone: the closure of its stratum, facets one ray up.
CellComplex toric_cell_complex(const ToricVariety& y);

struct ToricHomologyReport {
  std::vector<long> f;                          // f[q] = number of q-dimensional strata
  std::vector<long> h;                          // toric h-vector from the cone counts
  std::vector<std::vector<HomologyRow>> table;  // table[p][q]
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
ToricHomologyReport toric_homology_report(const ToricVariety& y);

using RankTable = std::vector<std::vector<long>>;  // [p][q]

// Ranks of H_q(X; F_p); refuses unless Y is compact and X is non-singular,
// ample and torsion free.
RankTable hodge_table(const HypersurfacePair& pair);
RankTable bm_rank_table(const HypersurfacePair& pair);

struct RankPrediction {
  RankTable table;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
// Y = R^{n+1}: zero unless q = n or p + q = n, and C(n+1, p+1) on q = n off the middle row.
RankPrediction torus_bm_prediction(const HypersurfacePair& pair);
// Y given by one full-dimensional cone: zero unless p + q = n or p = q > n/2.
RankPrediction affine_bm_prediction(const HypersurfacePair& pair);

}  // namespace trop
