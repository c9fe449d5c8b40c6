#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropical/complex.hpp"
#include "tropical/cosheaf.hpp"
#include "tropical/sparse.hpp"

namespace trop {

enum class Variant { Standard, BorelMoore };
enum class Ring { Z, Q, Z2 };
std::string to_string(Variant v);
std::string to_string(Ring r);

struct Orientation {
  std::map<std::pair<int, int>, int> sign;  // (tau, sigma) -> +-1
  int operator()(int tau, int sigma) const { return sign.at({tau, sigma}); }
};

// O(sigma, tau) compares [outward vector, basis of tau] with the basis of sigma.
Orientation orient(const CellComplex& z, const ToricVariety& y);

class HomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChainComplex {
  Variant variant = Variant::BorelMoore;
  Ring ring = Ring::Z;
  std::vector<std::vector<int>> cells;  // cells[q]
  std::vector<long> dims;               // rank of C_q
  std::vector<SparseZ> boundary;        // boundary[q] : C_q -> C_{q-1}; boundary[0] has 0 rows
  std::map<int, long> offset;           // block offset of a cell inside its C_q
  int top() const { return static_cast<int>(dims.size()) - 1; }
  long euler_characteristic() const;
};

// Cells outside the mask (when given) are dropped; standard chains keep compact cells only.
ChainComplex chain_complex(const CellComplex& z, const Orientation& o, const Cosheaf& g, Variant v, Ring r,
                           const std::vector<char>& mask = {});

struct HomologyRow {
  int q = 0;
  long rank = 0;             // dimension over Q or Z2, rank over Z
  std::vector<Int> torsion;  // invariant factors > 1 (Z only)
};
std::vector<HomologyRow> homology(const ChainComplex& c);
std::vector<HomologyRow> cohomology(const ChainComplex& c);

struct InducedMapRow {
  int q = 0;
  long rank_source = 0;
  long rank_target = 0;
  long rank_image = 0;  // rank of the map tensored with the field (Q for Z)
  bool injective = false;
  bool surjective = false;
  std::string classification() const;  // iso, surjective-only, injective-only, neither
};

struct ChainMap {
  std::vector<SparseZ> f;  // f[q] : A_q -> B_q
};
std::vector<InducedMapRow> induced_on_homology(const ChainComplex& a, const ChainComplex& b, const ChainMap& f);

// H_q(X; F_p^X) -> H_q(Y; F_p^Y) for all q; throws for standard chains unless the pair is cellular.
std::vector<InducedMapRow> induced_map(const HypersurfacePair& pair, int p, Variant v, Ring r = Ring::Z);

struct VanishingReport {
  std::vector<std::string> checked;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
// Stalk checks on N_p run only for a full-dimensional Newton polytope.
VanishingReport verify_vanishing(const HypersurfacePair& pair, int p, bool include_standard);

}  // namespace trop
