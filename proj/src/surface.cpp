#include "mcgcert/surface.hpp"

#include "mcgcert/errors.hpp"
#include "mcgcert/rep.hpp"

namespace mcgcert {

SurfaceParams make_params(int g, int b) {
  if (g < 1) throw McgError("invalid-genus", "genus must be >= 1");
  if (b < 0 || b > 12) throw invalid_argument_error("punctures must be in [0, 12]");
  if (g > 12) throw McgError("invalid-genus", "genus capped at 12");
  return SurfaceParams{g, b, g / 2};
}

CurveRegistry::CurveRegistry(const SurfaceParams& p, HomologyLattice lat)
    : p_(p), lat_(std::move(lat)) {}

IntVec CurveRegistry::alpha(int i) const { return lat_.basis_a(i); }
IntVec CurveRegistry::beta(int i) const { return lat_.basis_b(i); }

IntVec CurveRegistry::gamma(int i) const {
  if (i < 1 || i >= p_.g) throw invalid_argument_error("gamma index out of range");
  return vec_sub(lat_.basis_a(i), lat_.basis_a(i + 1));
}

IntVec CurveRegistry::delta(int j) const {
  if (j < 0 || j >= p_.b) throw invalid_argument_error("delta index out of range");
  IntVec v = lat_.basis_a(1);
  for (int t = 1; t <= j; ++t) v = vec_add(v, lat_.c_class(t));
  return v;
}

IntVec CurveRegistry::eta(int j) const {
  if (j < 1 || j > p_.b) throw invalid_argument_error("eta index out of range");
  return eta_[static_cast<std::size_t>(j - 1)];
}

const LanternConfig& CurveRegistry::lantern() const {
  if (!lantern_set_) throw McgError("no-lantern", "lantern requires genus >= 3");
  return lantern_;
}

IntVec CurveRegistry::by_name(const std::string& id) const {
  auto num = [&](std::size_t pos) { return std::stoi(id.substr(pos)); };
  if (id.rfind("alpha_", 0) == 0) return alpha(num(6));
  if (id.rfind("beta_", 0) == 0) return beta(num(5));
  if (id.rfind("gamma_", 0) == 0) return gamma(num(6));
  if (id.rfind("delta_", 0) == 0) return delta(num(6));
  if (id.rfind("eta_", 0) == 0) return eta(num(4));
  if (lantern_set_) {
    const LanternConfig& lc = lantern_;
    if (id == "a1") return lc.b1;
    if (id == "a2") return lc.b2;
    if (id == "a3") return lc.b3;
    if (id == "a4") return lc.b4;
    if (id == "x1") return lc.x1;
    if (id == "x2") return lc.x2;
    if (id == "x3") return lc.x3;
  }
  throw invalid_argument_error("unknown curve id: " + id);
}

std::vector<std::pair<std::string, IntVec>> CurveRegistry::all_curves() const {
  std::vector<std::pair<std::string, IntVec>> out;
  for (int i = 1; i <= p_.g; ++i) out.emplace_back("alpha_" + std::to_string(i), alpha(i));
  for (int i = 1; i <= p_.g; ++i) out.emplace_back("beta_" + std::to_string(i), beta(i));
  for (int i = 1; i < p_.g; ++i) out.emplace_back("gamma_" + std::to_string(i), gamma(i));
  for (int j = 0; j < p_.b; ++j) out.emplace_back("delta_" + std::to_string(j), delta(j));
  for (int j = 1; j <= p_.b; ++j) out.emplace_back("eta_" + std::to_string(j), eta(j));
  if (lantern_set_) {
    out.emplace_back("a1", lantern_.b1);
    out.emplace_back("a2", lantern_.b2);
    out.emplace_back("a3", lantern_.b3);
    out.emplace_back("a4", lantern_.b4);
    out.emplace_back("x1", lantern_.x1);
    out.emplace_back("x2", lantern_.x2);
    out.emplace_back("x3", lantern_.x3);
  }
  return out;
}

std::vector<std::string> CurveRegistry::coverage_targets() const {
  std::vector<std::string> out;
  for (int i = 1; i <= p_.g; ++i) out.push_back("alpha_" + std::to_string(i));
  for (int i = 1; i <= p_.g; ++i) out.push_back("beta_" + std::to_string(i));
  for (int i = 1; i < p_.g; ++i) out.push_back("gamma_" + std::to_string(i));
  return out;
}

namespace {

int lantern_middle(const SurfaceParams& p, bool* pivot_is_rho1) {
  // smallest m with sigma(m+1) = m for the matching reflection; both boundary
  // handles m-1 and m+1 must exist
  if (p.g % 2 == 0) {
    *pivot_is_rho1 = true;
    for (int m = 2; m + 1 <= p.g; ++m) {
      if (p.g + 1 - (m + 1) == m) return m;
    }
  } else {
    *pivot_is_rho1 = false;
    for (int m = 2; m + 1 <= p.g; ++m) {
      if (p.g + 2 - (m + 1) == m) return m;
    }
  }
  throw construction_failed_error("no reflection-symmetric middle handle");
}

}  // namespace

LanternConfig lantern_config(const SurfaceParams& p) {
  if (p.g < 3) throw McgError("no-lantern", "lantern requires genus >= 3");
  HomologyLattice lat = make_lattice(p.g, p.b);
  LanternConfig lc;
  lc.m = lantern_middle(p, &lc.pivot_is_rho1);
  const int m = lc.m;

  // unoriented boundary classes; orientations fixed by the first sign choice
  // (with s1 = +1) that makes the four classes sum to zero
  IntVec raw[4] = {
      lat.basis_a(m + 1),                                 // alpha_{m+1}
      lat.basis_a(m - 1),                                 // alpha_{m-1}
      vec_sub(lat.basis_a(m - 1), lat.basis_a(m)),        // gamma_{m-1}
      vec_sub(lat.basis_a(m), lat.basis_a(m + 1)),        // gamma_m
  };
  bool found = false;
  for (int s2 : {1, -1}) {
    if (found) break;
    for (int s3 : {1, -1}) {
      if (found) break;
      for (int s4 : {1, -1}) {
        IntVec sum = raw[0];
        sum = vec_add(sum, vec_scale(Int(s2), raw[1]));
        sum = vec_add(sum, vec_scale(Int(s3), raw[2]));
        sum = vec_add(sum, vec_scale(Int(s4), raw[3]));
        if (vec_is_zero(sum)) {
          lc.b1 = raw[0];
          lc.b2 = vec_scale(Int(s2), raw[1]);
          lc.b3 = vec_scale(Int(s3), raw[2]);
          lc.b4 = vec_scale(Int(s4), raw[3]);
          found = true;
          break;
        }
      }
    }
  }
  if (!found) throw construction_failed_error("lantern boundary classes do not close up");

  // interior classes are the pairwise boundary sums; x1 is the middle curve,
  // x2 its partner under the 1<->2 boundary swap, x3 under 1<->3
  lc.x1 = vec_add(lc.b2, lc.b3);
  lc.x2 = vec_add(lc.b1, lc.b3);
  lc.x3 = vec_add(lc.b1, lc.b2);

  // x1 must be the middle meridian up to orientation
  IntVec am = lat.basis_a(m);
  if (lc.x1 != am && lc.x1 != vec_neg(am))
    throw construction_failed_error("lantern middle class mismatch");

  // the lantern relation at the matrix level gates the configuration
  IntMat lhs = transvection(lat, lc.x1) * transvection(lat, lc.x2) * transvection(lat, lc.x3);
  IntMat rhs = transvection(lat, lc.b1) * transvection(lat, lc.b2) *
               transvection(lat, lc.b3) * transvection(lat, lc.b4);
  if (lhs != rhs) throw construction_failed_error("lantern identity failed");

  lc.role_curves = {
      {"a1", "alpha_" + std::to_string(m + 1)},
      {"a2", "alpha_" + std::to_string(m - 1)},
      {"a3", "gamma_" + std::to_string(m - 1)},
      {"a4", "gamma_" + std::to_string(m)},
      {"x1", "alpha_" + std::to_string(m)},
      {"x2", "(a1+a3 side)"},
      {"x3", "(a1+a2 side)"},
  };
  return lc;
}

CurveRegistry build_registry(const SurfaceParams& p) {
  CurveRegistry reg(p, make_lattice(p.g, p.b));
  RepElement rinv = rep_inverse(rotation(p));
  for (int j = 1; j <= p.b; ++j) {
    reg.eta_.push_back(rinv.matrix.apply(reg.delta(j - 1)));
  }
  if (p.g >= 3) {
    reg.lantern_ = lantern_config(p);
    reg.lantern_set_ = true;
  }
  return reg;
}

}  // namespace mcgcert
