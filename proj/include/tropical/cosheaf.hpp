#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "tropical/complex.hpp"
#include "tropical/linalg.hpp"
#include "tropical/toric.hpp"

namespace trop {

// Stalks are free modules. For cosheaves built from tangent data the basis
// columns live in the lex wedge basis of the cell's stratum lattice; quotient
// cosheaves carry identity bases of their own rank.
struct Cosheaf {
  int p = 0;
  std::vector<ZMatrix> basis;
  std::map<std::pair<int, int>, ZMatrix> maps;  // (tau, sigma), tau a facet of sigma
  int rank(int c) const { return basis[c].cols(); }
  const ZMatrix& map(int tau, int sigma) const;
  long total_rank() const;
};

class CosheafError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// pi_{rho eta} on p-th exterior powers
ZMatrix wedge_projection(const ToricVariety& y, int rho, int eta, int p);

// F_p^Z: sum of the p-th wedges of tangent lattices of same-stratum cofaces.
// With a mask only cells in the mask count (cells outside get rank 0 and no maps).
Cosheaf multitangent(const CellComplex& z, const ToricVariety& y, int p, const std::vector<char>& mask = {});
// F_p^Y: the full p-th wedge of the stratum lattice.
Cosheaf ambient_on_cells(const CellComplex& z, const ToricVariety& y, int p);
// Cosheaf on a subcomplex; sub_to_full[i] is the cell of the big complex.
Cosheaf restrict_cosheaf(const Cosheaf& f, const CellComplex& sub, const std::vector<int>& sub_to_full);
Cosheaf restrict_to_X(const Cosheaf& fy, const HypersurfacePair& pair);

// Direct cosheaf map for any face pair gamma <= sigma of a wedge-coordinate cosheaf.
ZMatrix direct_map(const Cosheaf& f, const CellComplex& z, const ToricVariety& y, int gamma, int sigma);

struct QuotientCosheaf {
  Cosheaf q;
  std::vector<ZMatrix> projection;  // big stalk coordinates -> quotient coordinates
  std::vector<ZMatrix> inclusion;   // small stalk coordinates -> big stalk coordinates
};
// small[c]: basis of the subcosheaf stalk, in the same coordinates as big.basis[c].
QuotientCosheaf quotient_cosheaf(const Cosheaf& big, const std::vector<ZMatrix>& small, const CellComplex& z);

QuotientCosheaf make_Q(const HypersurfacePair& pair, int p);
QuotientCosheaf make_N(const HypersurfacePair& pair, int p);

// Restriction of a cosheaf to gamma-open of a sedentarity-0 ambient cell: F_p of
// the pieces, each piece alone in its stratum.
Cosheaf gamma_cosheaf(const HypersurfacePair& pair, int gamma, int p);

// Integer polynomials as coefficient vectors, lowest degree first.
using IntPoly = std::vector<Int>;
IntPoly poly_trim(IntPoly a);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, int k);
// sum_p (-1)^p rank F_p^X(sigma) lambda^p
IntPoly stalk_rank_polynomial(const HypersurfacePair& pair, int x_cell);
// (1-lambda)^m - (1-lambda)^q (-lambda)^{m-q}
IntPoly expected_stalk_polynomial(int m, int q);

}  // namespace trop
