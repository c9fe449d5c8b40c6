#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropical/io.hpp"
#include "tropical/linalg.hpp"
#include "tropical/polyhedral.hpp"
#include "tropical/toric.hpp"

namespace trop {

struct Cell {
  int cone = 0;         // sedentarity cone
  int dim = 0;
  bool in_x = false;
  bool compact = false;
  int origin = 0;       // sedentarity-0 cell whose closure produced this piece
  std::vector<int> key;  // subdivision face of f, then one face per refiner
  QPolyhedron geometry;  // in the coordinates of the stratum lattice
  QVec point;            // relative interior point
  LatticeSubspace tangent;
  int dual_face() const { return key.empty() ? -1 : key[0]; }
};

struct CellComplex {
  int ambient_dim = 0;
  std::vector<Cell> cells;                  // sorted by (dim, cone, key)
  std::vector<std::vector<int>> faces;      // all proper faces
  std::vector<std::vector<int>> facets;     // faces of dimension one less
  std::vector<std::vector<int>> cofacets;
  // for a sedentarity-0 cell: the cells making up the closure strata, one per cone met
  std::vector<std::vector<int>> pieces;
  int size() const { return static_cast<int>(cells.size()); }
  int max_dim() const;
  std::vector<long> f_vector() const;
  bool is_face(int tau, int sigma) const;
};

struct BuildOptions {
  int max_dim = 4;
  // refine by max(0, x_1, ..., x_N) when the Newton polytope is not full-dimensional
  bool refine_lineality = true;
  std::vector<TropicalPolynomial> refiners;
};

class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HypersurfacePair {
  TropicalPolynomial f;
  ToricVariety Y;
  RegularSubdivision subdivision;
  std::vector<RegularSubdivision> refiner_subdivisions;
  bool lineality_refined = false;
  CellComplex ambient;          // Y refined by X
  CellComplex X;
  std::vector<int> x_to_ambient;
  std::vector<int> ambient_to_x;  // -1 off X
  // (sedentarity-0 cell, cone) pairs whose intersection has the wrong dimension
  std::vector<std::pair<int, int>> improper;
};

HypersurfacePair build_pair(const TropicalPolynomial& f, const FanSpec& fan, const BuildOptions& opt = {});
// The sedentarity-0 hypersurface in R^N with its dual cell structure.
CellComplex dual_hypersurface(const TropicalPolynomial& f, const BuildOptions& opt = {});

bool newton_polytope_full(const HypersurfacePair& pair);

struct GammaOpen {
  std::vector<int> cells;  // ambient ids, one per stratum met
  std::vector<int> cones;
  std::optional<int> minimal;
};
GammaOpen gamma_open(const HypersurfacePair& pair, int gamma);

bool is_proper(const HypersurfacePair& pair);
bool is_nonsingular(const HypersurfacePair& pair);

struct AmpleResult {
  bool ample = true;
  std::vector<int> failing;  // top-dimensional sedentarity-0 ambient cells
};
AmpleResult combinatorial_ampleness(const HypersurfacePair& pair);
bool is_combinatorially_ample(const HypersurfacePair& pair);

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);
Tri is_cellular_pair(const HypersurfacePair& pair);

std::string dump_complex(const CellComplex& c, const ToricVariety& y);

}  // namespace trop
