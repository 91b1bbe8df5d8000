#include "mcgcert/rep.hpp"

#include "mcgcert/errors.hpp"
#include "mcgcert/permgrp.hpp"

namespace mcgcert {

RepElement rep_identity(const HomologyLattice& lat) {
  return RepElement{IntMat::identity(lat.rank), Perm(lat.punctures), "id"};
}

RepElement compose(const RepElement& f, const RepElement& g) {
  return RepElement{f.matrix * g.matrix, f.perm.compose(g.perm), ""};
}

RepElement rep_inverse(const RepElement& f) {
  std::size_t n = f.matrix.rows();
  IntMat inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVec e(n, Int(0));
    e[j] = 1;
    auto col = solve_int(f.matrix, e);
    if (!col) throw invalid_argument_error("rep_inverse: matrix is not invertible over Z");
    inv.set_column(j, *col);
  }
  return RepElement{std::move(inv), f.perm.inverse(), ""};
}

bool rep_equal(const RepElement& f, const RepElement& g) {
  return f.matrix == g.matrix && f.perm == g.perm;
}

bool is_involution(const RepElement& f) {
  return is_involution(f.matrix) && f.perm.is_involution();
}

bool satisfies_compatibility(const HomologyLattice& lat, const RepElement& f) {
  if (f.perm.degree() != lat.punctures) return false;
  for (int j = 1; j <= lat.punctures; ++j) {
    if (f.matrix.apply(lat.c_class(j)) != lat.c_class(f.perm(j))) return false;
  }
  return true;
}

RepElement twist(const HomologyLattice& lat, const IntVec& c, const std::string& name) {
  return RepElement{transvection(lat, c), Perm(lat.punctures), name};
}

Perm puncture_r(int b, int which) { return canonical_r(b, which); }

Perm pairing_involution(int b) {
  std::vector<int> img(static_cast<std::size_t>(b));
  for (int i = 1; i <= b; ++i) {
    int t = (i % 2 == 1) ? (i + 1 <= b ? i + 1 : i) : i - 1;
    img[static_cast<std::size_t>(i - 1)] = t;
  }
  return Perm::from_images(std::move(img));
}

int pair_swap_fixed_point_budget(int g) { return g == 3 ? 0 : 3; }
int pants_fixed_point_budget(int /*g*/) { return 3; }
int four_inv_fixed_point_budget(int g) { return 2 * (g - 7) + 2; }

namespace {

// reflection with handle action a_i -> -a_{sigma(i)}, b_i -> -b_{sigma(i)}
RepElement reflection(const SurfaceParams& p, const std::vector<int>& sigma, const Perm& pi,
                      const std::string& name) {
  HomologyLattice lat = make_lattice(p.g, p.b);
  IntMat m(lat.rank, lat.rank);
  for (int i = 1; i <= p.g; ++i) {
    int s = sigma[static_cast<std::size_t>(i - 1)];
    m.at(lat.a_index(s), lat.a_index(i)) = -1;
    m.at(lat.b_index(s), lat.b_index(i)) = -1;
  }
  IntMat pb = puncture_block(p.b, pi);
  for (std::size_t i = 0; i < pb.rows(); ++i)
    for (std::size_t j = 0; j < pb.cols(); ++j)
      m.at(2 * static_cast<std::size_t>(p.g) + i, 2 * static_cast<std::size_t>(p.g) + j) = pb.at(i, j);
  return RepElement{std::move(m), pi, name};
}

void check_budget(const Perm& pi, int budget, const std::string& who) {
  if (pi.fixed_points() > budget)
    throw branch_not_available_error(who + ": puncture action has " +
                                     std::to_string(pi.fixed_points()) +
                                     " fixed points, budget " + std::to_string(budget));
}

IntVec wrapped_a(const HomologyLattice& lat, int i) {
  int g = lat.genus;
  int w = ((i - 1) % g + g) % g + 1;
  return lat.basis_a(w);
}

}  // namespace

RepElement rho1(const SurfaceParams& p) {
  std::vector<int> sigma(static_cast<std::size_t>(p.g));
  for (int i = 1; i <= p.g; ++i) sigma[static_cast<std::size_t>(i - 1)] = p.g + 1 - i;
  return reflection(p, sigma, puncture_r(p.b, 1), "rho1");
}

RepElement rho2(const SurfaceParams& p) {
  std::vector<int> sigma(static_cast<std::size_t>(p.g));
  sigma[0] = 1;
  for (int i = 2; i <= p.g; ++i) sigma[static_cast<std::size_t>(i - 1)] = p.g + 2 - i;
  return reflection(p, sigma, puncture_r(p.b, 2), "rho2");
}

RepElement rotation(const SurfaceParams& p) {
  RepElement r = compose(rho2(p), rho1(p));
  r.name = "R";
  return r;
}

RepElement pivot_involution(const CurveRegistry& reg) {
  return reg.lantern().pivot_is_rho1 ? rho1(reg.params()) : rho2(reg.params());
}

RepElement rho3(const CurveRegistry& reg) {
  const LanternConfig& lc = reg.lantern();
  RepElement piv = pivot_involution(reg);
  RepElement tx = twist(reg.lattice(), lc.x1);
  RepElement out = compose(compose(tx, piv), rep_inverse(tx));
  out.name = "rho3";
  return out;
}

bool rho3_pivot_gives_twist_quotient(const CurveRegistry& reg) {
  const LanternConfig& lc = reg.lantern();
  RepElement lhs = compose(rho3(reg), pivot_involution(reg));
  RepElement quot =
      compose(twist(reg.lattice(), lc.x1), rep_inverse(twist(reg.lattice(), lc.b1)));
  return rep_equal(lhs, quot);
}

RepElement build_I12(const CurveRegistry& reg, bool modified, const Perm& pi) {
  const SurfaceParams& p = reg.params();
  if (p.g < 3) throw branch_not_available_error("I12 requires genus >= 3");
  if (modified && p.g < 5) throw branch_not_available_error("modified I12 requires genus >= 5");
  if (p.g == 3 && p.b % 2 == 1)
    throw branch_not_available_error("I12 at genus 3 requires an even puncture count");
  check_budget(pi, pair_swap_fixed_point_budget(p.g), "I12");
  const LanternConfig& lc = reg.lantern();
  InvolutionConstraints cons;
  cons.pairs.push_back({lc.b1, lc.b2});
  cons.pairs.push_back({lc.x1, lc.x2});
  if (modified) cons.pairs.push_back({reg.gamma(lc.m + 1), reg.beta(lc.m - 2)});
  cons.fixed.push_back({lc.b3, 1});
  cons.fixed.push_back({lc.b4, 1});
  cons.puncture_perm = pi;
  RepElement out{complete_partial_involution(reg.lattice(), cons), pi, "I12"};
  return out;
}

RepElement build_I13(const CurveRegistry& reg, const Perm& pi) {
  const SurfaceParams& p = reg.params();
  if (p.g < 3) throw branch_not_available_error("I13 requires genus >= 3");
  if (p.g == 3 && p.b % 2 == 1)
    throw branch_not_available_error("I13 at genus 3 requires an even puncture count");
  check_budget(pi, pair_swap_fixed_point_budget(p.g), "I13");
  const LanternConfig& lc = reg.lantern();
  InvolutionConstraints cons;
  cons.pairs.push_back({lc.b1, lc.b3});
  cons.pairs.push_back({lc.x1, lc.x3});
  cons.fixed.push_back({lc.b2, 1});
  cons.fixed.push_back({lc.b4, 1});
  cons.puncture_perm = pi;
  return RepElement{complete_partial_involution(reg.lattice(), cons), pi, "I13"};
}

namespace {

std::pair<RepElement, int> build_pants_swap(const CurveRegistry& reg, const Perm& pi) {
  const SurfaceParams& p = reg.params();
  if (p.g < 3) throw branch_not_available_error("I requires genus >= 3");
  if (p.g == 3 && p.b % 2 == 1)
    throw branch_not_available_error("I at genus 3 requires an even puncture count");
  check_budget(pi, pants_fixed_point_budget(p.g), "I");
  const int m = reg.lantern().m;
  // the pants boundary longitude sits next to the middle meridian; the far
  // side is preferred, the near side kept as fallback
  for (int j : {m + 1, m - 1}) {
    if (j < 1 || j > p.g || j == m) continue;
    InvolutionConstraints cons;
    cons.pairs.push_back({reg.alpha(m), reg.beta(j)});
    cons.puncture_perm = pi;
    try {
      RepElement out{complete_partial_involution(reg.lattice(), cons), pi, "I"};
      return {out, j};
    } catch (const McgError&) {
      continue;
    }
  }
  throw construction_failed_error("no pants swap completion");
}

}  // namespace

RepElement build_I(const CurveRegistry& reg, const Perm& pi) {
  return build_pants_swap(reg, pi).first;
}

int pants_beta_index(const CurveRegistry& reg) {
  return build_pants_swap(reg, Perm(reg.params().b)).second;
}

RepElement build_J(const CurveRegistry& reg, const Perm& pi) {
  const SurfaceParams& p = reg.params();
  if (p.g < 7) throw branch_not_available_error("J requires genus >= 7");
  if (p.g == 7 && p.b % 2 == 1)
    throw branch_not_available_error("J at genus 7 requires an even puncture count");
  check_budget(pi, four_inv_fixed_point_budget(p.g), "J");
  const HomologyLattice& lat = reg.lattice();
  const int m = reg.lantern().m;
  auto A = [&](int i) { return wrapped_a(lat, i); };

  // boundary constraints of the two glued lanterns; the signs are the unique
  // consistent orientation once [alpha_{m+1}] is fixed with +
  InvolutionConstraints cons;
  cons.fixed.push_back({A(m + 1), 1});
  cons.pairs.push_back({A(m - 1), vec_sub(A(m + 1), A(m + 2))});
  cons.pairs.push_back({vec_sub(A(m - 1), A(m)), vec_neg(A(m + 3))});
  cons.pairs.push_back({vec_sub(A(m), A(m + 1)), vec_neg(vec_sub(A(m + 2), A(m + 3)))});
  // pants bridge between the lantern cluster and its R^2 image
  cons.pairs.push_back({reg.beta(m - 2), vec_sub(A(m + 3), A(m + 4))});
  cons.puncture_perm = pi;
  return RepElement{complete_partial_involution(lat, cons), pi, "J"};
}

bool CheckReport::all_mandatory_hold() const {
  for (const auto& e : entries)
    if (e.mandatory && !e.holds) return false;
  return true;
}

CheckReport check_relations(const SurfaceParams& p) {
  CheckReport rep;
  HomologyLattice lat = make_lattice(p.g, p.b);
  RepElement r1 = rho1(p), r2 = rho2(p), rot = rotation(p);
  RepElement rot_inv = rep_inverse(rot);

  std::vector<RepElement> constructed = {r1, r2, rot};
  CurveRegistry reg = build_registry(p);
  if (p.g >= 3) constructed.push_back(rho3(reg));

  for (const auto& e : constructed) {
    if (e.name != "R")
      rep.entries.push_back({"involution", e.name, is_involution(e), true});
    rep.entries.push_back({"symplectic", e.name, is_symplectic(lat, e.matrix), true});
    rep.entries.push_back({"compatibility", e.name, satisfies_compatibility(lat, e), true});
  }

  auto conj_holds = [&](const IntVec& from, const IntVec& to) {
    IntMat lhs = rot.matrix * transvection(lat, from) * rot_inv.matrix;
    return lhs == transvection(lat, to);
  };
  for (int i = 1; i < p.g; ++i)
    rep.entries.push_back({"rotation_conjugation", "alpha_" + std::to_string(i),
                           conj_holds(reg.alpha(i), reg.alpha(i + 1)), true});
  for (int i = 1; i < p.g; ++i)
    rep.entries.push_back({"rotation_conjugation", "beta_" + std::to_string(i),
                           conj_holds(reg.beta(i), reg.beta(i + 1)), true});
  rep.entries.push_back({"rotation_conjugation", "beta_" + std::to_string(p.g) + "_wraps",
                         conj_holds(reg.beta(p.g), reg.beta(1)), true});
  if (p.b == 0 && p.g >= 2)
    rep.entries.push_back({"rotation_conjugation", "alpha_" + std::to_string(p.g) + "_wraps",
                           conj_holds(reg.alpha(p.g), reg.alpha(1)), true});
  for (int i = 1; i + 1 < p.g; ++i)
    rep.entries.push_back({"rotation_conjugation", "gamma_" + std::to_string(i),
                           conj_holds(reg.gamma(i), reg.gamma(i + 1)), true});

  for (int j = 0; j < p.b; ++j) {
    bool holds = rot_inv.matrix.apply(reg.delta(j)) == reg.eta(j + 1);
    rep.entries.push_back({"delta_eta", "j" + std::to_string(j), holds, true});
  }
  // Whether a puncture-fixing handle-block element could carry [eta_{j+1}]
  // onto [delta_{j+1}]: such elements cannot change the c-part, so this is a
  // c-part comparison.  Reported, never required.
  for (int j = 0; j + 1 < p.b; ++j) {
    IntVec e = reg.eta(j + 1), d = reg.delta(j + 1);
    bool carrier = true;
    for (std::size_t idx = 2 * static_cast<std::size_t>(p.g); idx < lat.rank; ++idx)
      if (e[idx] != d[idx]) { carrier = false; break; }
    rep.entries.push_back({"delta_eta_carrier", "j" + std::to_string(j + 1), carrier, false});
  }

  if (p.g >= 3) {
    const LanternConfig& lc = reg.lantern();
    IntMat lhs = transvection(lat, lc.x1) * transvection(lat, lc.x2) * transvection(lat, lc.x3);
    IntMat rhs = transvection(lat, lc.b1) * transvection(lat, lc.b2) *
                 transvection(lat, lc.b3) * transvection(lat, lc.b4);
    rep.entries.push_back({"lantern", "g" + std::to_string(p.g), lhs == rhs, true});
    RepElement piv = pivot_involution(reg);
    RepElement quot = compose(twist(lat, lc.x1), rep_inverse(twist(lat, lc.b1)));
    bool orient = rep_equal(compose(rho3(reg), piv), quot) ||
                  rep_equal(compose(piv, rho3(reg)), quot);
    rep.entries.push_back({"rho3_pivot_twist_quotient", piv.name, orient, true});
  }
  return rep;
}

}  // namespace mcgcert
