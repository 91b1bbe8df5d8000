#pragma once

#include "mcgcert/symhom.hpp"

#include <map>
#include <string>
#include <vector>

namespace mcgcert {

struct SurfaceParams {
  int g = 0;  // genus
  int b = 0;  // punctures
  int k = 0;  // g / 2, the handle midpoint used by the involution layouts
};

SurfaceParams make_params(int g, int b);

// Homology classes of the named curve system on the surface:
//   alpha_i  meridians of the handles           [alpha_i] = a_i
//   beta_i   longitudes                         [beta_i]  = b_i
//   gamma_i  connectors of adjacent handles     [gamma_i] = a_i - a_{i+1}
//   delta_j  alpha_1 slid over punctures 1..j   [delta_j] = a_1 + c_1 + ... + c_j
//   eta_j    rotation preimages of the deltas   [eta_j]   = R^{-1}[delta_{j-1}]
//
// A four-holed sphere around the middle handle supplies the twist relation the
// word certificates are built from; its boundary and interior classes are kept
// here with fixed orientations.
struct LanternConfig {
  int m = 0;                 // middle handle index
  bool pivot_is_rho1 = true; // which reflection maps the a1-curve to the x1-curve
  IntVec b1, b2, b3, b4;     // oriented boundary classes, b1+b2+b3+b4 = 0
  IntVec x1, x2, x3;         // interior classes: pairwise sums of boundary pairs
  std::map<std::string, std::string> role_curves;  // lantern role -> registry curve
};

class CurveRegistry {
public:
  CurveRegistry(const SurfaceParams& p, HomologyLattice lat);

  const SurfaceParams& params() const { return p_; }
  const HomologyLattice& lattice() const { return lat_; }

  IntVec alpha(int i) const;
  IntVec beta(int i) const;
  IntVec gamma(int i) const;  // 1 <= i <= g-1
  IntVec delta(int j) const;  // 0 <= j <= b-1
  IntVec eta(int j) const;    // 1 <= j <= b

  bool has_lantern() const { return p_.g >= 3; }
  const LanternConfig& lantern() const;

  // named class by registry id, e.g. "alpha_3", "delta_0", "x1"
  IntVec by_name(const std::string& id) const;

  // canonical dump order: alphas, betas, gammas, deltas, etas, lantern roles
  std::vector<std::pair<std::string, IntVec>> all_curves() const;

  // the 3g-1 twist targets every certificate must cover
  std::vector<std::string> coverage_targets() const;

private:
  friend CurveRegistry build_registry(const SurfaceParams&);
  SurfaceParams p_;
  HomologyLattice lat_;
  std::vector<IntVec> eta_;  // cached, eta_[j-1] = [eta_j]
  LanternConfig lantern_;
  bool lantern_set_ = false;
};

CurveRegistry build_registry(const SurfaceParams& p);

// Standalone lantern data for callers that do not need the full registry.
LanternConfig lantern_config(const SurfaceParams& p);

}  // namespace mcgcert
