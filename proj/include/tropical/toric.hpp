#pragma once

#include <map>
#include <vector>

#include "tropical/io.hpp"
#include "tropical/linalg.hpp"
#include "tropical/polyhedral.hpp"

namespace trop {

struct Stratum {
  int cone = 0;
  ZMatrix projection;  // (N-k) x N, kills the rays of the cone
  ZMatrix section;     // N x (N-k), projection * section = identity
};

class ToricVariety {
 public:
  ToricVariety() = default;
  explicit ToricVariety(const FanSpec& fan);

  int dim() const { return fan_.dim; }
  const FanSpec& fan() const { return fan_; }
  int cone_count() const { return static_cast<int>(cones_.size()); }
  const std::vector<int>& cone_rays(int c) const { return cones_[c]; }
  int cone_dim(int c) const { return static_cast<int>(cones_[c].size()); }
  int stratum_dim(int c) const { return dim() - cone_dim(c); }
  int sedentarity(int c) const { return cone_dim(c); }
  int find_cone(const std::vector<int>& rays) const;
  bool is_face(int rho, int eta) const;
  std::vector<int> cofaces(int rho) const;  // cones containing rho, rho included
  const Stratum& stratum(int c) const { return strata_[c]; }
  ZMatrix ray_matrix(int c) const;
  // pi_{rho eta}: T_Z(Y_rho) -> T_Z(Y_eta)
  ZMatrix projection(int rho, int eta) const;
  bool complete() const;
  bool trivial() const { return fan_.rays.empty(); }
  bool single_cone() const { return fan_.cones.size() == 1; }

 private:
  FanSpec fan_;
  std::vector<std::vector<int>> cones_;
  std::map<std::vector<int>, int> index_;
  std::vector<Stratum> strata_;
};

// Does {v : A v <= 0, E v = 0} meet the relative interior of the cone spanned by
// the given rays? Exact LP with all ray coefficients >= 1.
bool cone_meets_relint(int dim, const std::vector<ZVec>& ineq_le0, const std::vector<ZVec>& eq0,
                       const std::vector<ZVec>& rays);

// Pieces of the closure of a sedentarity-0 polyhedron, one per stratum it reaches.
std::map<int, QPolyhedron> compactify(const QPolyhedron& p, const ToricVariety& y);

}  // namespace trop
