#pragma once

#include "mcgcert/surface.hpp"

#include <string>
#include <vector>

namespace mcgcert {

// A mapping class seen through its action on homology: an integral matrix
// preserving the pairing together with the induced permutation of punctures.
// The two are kept consistent by the compatibility law
//   matrix * [c_j] = [c_{perm(j)}]   for 1 <= j <= b.
struct RepElement {
  IntMat matrix;
  Perm perm;
  std::string name;
};

RepElement rep_identity(const HomologyLattice& lat);
RepElement compose(const RepElement& f, const RepElement& g);  // f after g
RepElement rep_inverse(const RepElement& f);
bool rep_equal(const RepElement& f, const RepElement& g);
bool is_involution(const RepElement& f);
bool satisfies_compatibility(const HomologyLattice& lat, const RepElement& f);

// Dehn twist about a curve with homology class c (punctures untouched).
RepElement twist(const HomologyLattice& lat, const IntVec& c, const std::string& name = "");

// The two reflections and the rotation R = rho2 * rho1.
//   rho1: a_i -> -a_{sigma1(i)}, sigma1(i) = g+1-i, punctures (1,b)(2,b-1)...
//   rho2: a_i -> -a_{sigma2(i)}, sigma2(1) = 1, sigma2(i) = g+2-i, fixes puncture b
// R shifts handles cyclically (i -> i+1) and rotates punctures (i -> i-1).
RepElement rho1(const SurfaceParams& p);
RepElement rho2(const SurfaceParams& p);
RepElement rotation(const SurfaceParams& p);

// Canonical puncture involutions, degree b:
//   r1 = (1,b)(2,b-1)...   r2 = (1,b-1)(2,b-2)... fixing b
//   r3 = (2,b-1)(3,b-2)... fixing 1 (and b)
Perm puncture_r(int b, int which);
// (1,2)(3,4)...; the minimal-fixed-point involution used by the pair swaps
Perm pairing_involution(int b);

// Fixed-point budgets for puncture actions, from the genus left over in each
// gluing region: pair swaps have none at g = 3, the pants swap always has a
// genus >= 1 complement, the four-involution J frees two points per handle
// beyond seven.
int pair_swap_fixed_point_budget(int g);
int pants_fixed_point_budget(int g);
int four_inv_fixed_point_budget(int g);

// The reflection that maps the lantern boundary a1-curve to the interior
// x1-curve (rho1 for even genus, rho2 for odd).
RepElement pivot_involution(const CurveRegistry& reg);

// rho3 = T_{x1} * pivot * T_{x1}^{-1}.
RepElement rho3(const CurveRegistry& reg);

// True when rho3 * pivot = T_{x1} T_{a1}^{-1} (otherwise the other order).
bool rho3_pivot_gives_twist_quotient(const CurveRegistry& reg);

// Pair-swap involutions of the lantern.
//  I12 swaps boundary pair 1 <-> 2 (and x1 <-> x2), fixing boundaries 3, 4;
//      the modified form additionally swaps [gamma_{m+1}] <-> [beta_{m-2}].
//  I13 swaps boundary pair 1 <-> 3 (and x1 <-> x3), fixing boundaries 2, 4.
RepElement build_I12(const CurveRegistry& reg, bool modified, const Perm& pi);
RepElement build_I13(const CurveRegistry& reg, const Perm& pi);

// Pants swap: interchanges [alpha_m] and [beta_{m+1}] (index recorded).
RepElement build_I(const CurveRegistry& reg, const Perm& pi);
int pants_beta_index(const CurveRegistry& reg);

// Four-involution generator: fixes [B1], carries [B2],[B3],[B4] to the
// rotated classes R^2[B3], R^2[B1], R^2[B4], and swaps [beta_{m-2}] with the
// class of R^2[gamma_{m+1}].
RepElement build_J(const CurveRegistry& reg, const Perm& pi);

struct CheckEntry {
  std::string relation;
  std::string instance;
  bool holds = false;
  bool mandatory = true;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  bool all_mandatory_hold() const;
};

// Involution, rotation-conjugation, delta/eta consistency, lantern and
// compatibility checks for everything constructible at these parameters.
CheckReport check_relations(const SurfaceParams& p);

}  // namespace mcgcert
