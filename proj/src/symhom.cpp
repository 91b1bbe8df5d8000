#include "mcgcert/symhom.hpp"

#include "mcgcert/errors.hpp"

#include <algorithm>

namespace mcgcert {

IntVec HomologyLattice::basis_a(int i) const {
  if (i < 1 || i > genus) throw invalid_argument_error("a-index out of range");
  IntVec v = zero();
  v[a_index(i)] = 1;
  return v;
}

IntVec HomologyLattice::basis_b(int i) const {
  if (i < 1 || i > genus) throw invalid_argument_error("b-index out of range");
  IntVec v = zero();
  v[b_index(i)] = 1;
  return v;
}

IntVec HomologyLattice::c_class(int j) const {
  if (j < 1 || j > punctures) throw invalid_argument_error("c-index out of range");
  IntVec v = zero();
  if (j < punctures) {
    v[c_index(j)] = 1;
  } else {
    for (int m = 1; m < punctures; ++m) v[c_index(m)] = -1;
  }
  return v;
}

bool HomologyLattice::handle_block_only(const IntVec& v) const {
  for (std::size_t i = 2 * static_cast<std::size_t>(genus); i < rank; ++i)
    if (v[i] != 0) return false;
  return true;
}

HomologyLattice make_lattice(int g, int b) {
  if (g < 1) throw McgError("invalid-genus", "genus must be >= 1");
  if (b < 0) throw invalid_argument_error("puncture count must be >= 0");
  HomologyLattice lat;
  lat.genus = g;
  lat.punctures = b;
  lat.rank = static_cast<std::size_t>(2 * g + std::max(b - 1, 0));
  lat.omega = IntMat(lat.rank, lat.rank);
  for (int i = 1; i <= g; ++i) {
    lat.omega.at(lat.a_index(i), lat.b_index(i)) = 1;
    lat.omega.at(lat.b_index(i), lat.a_index(i)) = -1;
  }
  return lat;
}

Int pairing(const HomologyLattice& lat, const IntVec& u, const IntVec& v) {
  if (u.size() != lat.rank || v.size() != lat.rank)
    throw invalid_argument_error("pairing: vector size mismatch");
  // <u,v> = u^T Omega v; Omega couples only a_i with b_i
  Int s = 0;
  for (int i = 1; i <= lat.genus; ++i) {
    s += u[lat.a_index(i)] * v[lat.b_index(i)];
    s -= u[lat.b_index(i)] * v[lat.a_index(i)];
  }
  return s;
}

IntMat transvection(const HomologyLattice& lat, const IntVec& c) {
  if (c.size() != lat.rank) throw invalid_argument_error("transvection: vector size mismatch");
  if (vec_is_zero(c)) throw McgError("degenerate-twist", "transvection by the zero class");
  // M = I - c (c^T Omega); acts as v |-> v + <v,c> c
  IntMat m = IntMat::identity(lat.rank);
  IntVec row(lat.rank, Int(0));  // row = c^T Omega
  for (int i = 1; i <= lat.genus; ++i) {
    row[lat.b_index(i)] = c[lat.a_index(i)];
    row[lat.a_index(i)] = -c[lat.b_index(i)];
  }
  for (std::size_t i = 0; i < lat.rank; ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < lat.rank; ++j) {
      if (row[j] != 0) m.at(i, j) -= c[i] * row[j];
    }
  }
  return m;
}

bool is_symplectic(const HomologyLattice& lat, const IntMat& m) {
  if (m.rows() != lat.rank || m.cols() != lat.rank) return false;
  return m.transpose() * lat.omega * m == lat.omega;
}

bool is_involution(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  return (m * m).is_identity();
}

IntMat puncture_block(int b, const Perm& pi) {
  if (pi.degree() != b) throw invalid_argument_error("puncture_block: degree mismatch");
  std::size_t n = b > 0 ? static_cast<std::size_t>(b - 1) : 0;
  IntMat p(n, n);
  for (int j = 1; j <= b - 1; ++j) {
    int t = pi(j);
    if (t < b) {
      p.at(static_cast<std::size_t>(t - 1), static_cast<std::size_t>(j - 1)) = 1;
    } else {
      for (int i = 0; i + 1 < b; ++i) p.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) = -1;
    }
  }
  return p;
}

namespace {

// The completion works inside the 2g-dimensional handle block, where the
// pairing is unimodular; puncture classes are handled by the permutation
// block afterwards.
struct HandleSpace {
  int g;
  std::size_t dim;  // 2g

  IntVec omega_row(const IntVec& f) const {
    // (f^T Omega) as a vector: pairs a_i <-> b_i
    IntVec r(dim, Int(0));
    for (int i = 0; i < g; ++i) {
      r[static_cast<std::size_t>(g + i)] = f[static_cast<std::size_t>(i)];
      r[static_cast<std::size_t>(i)] = -f[static_cast<std::size_t>(g + i)];
    }
    return r;
  }

  Int pair(const IntVec& u, const IntVec& v) const {
    Int s = 0;
    for (int i = 0; i < g; ++i) {
      s += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(g + i)];
      s -= u[static_cast<std::size_t>(g + i)] * v[static_cast<std::size_t>(i)];
    }
    return s;
  }
};

IntVec truncate_handle(const IntVec& v, std::size_t dim) {
  return IntVec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim));
}

}  // namespace

IntMat complete_partial_involution(const HomologyLattice& lat,
                                   const InvolutionConstraints& cons) {
  const int g = lat.genus;
  const int b = lat.punctures;
  HandleSpace hs{g, static_cast<std::size_t>(2 * g)};

  if (cons.puncture_perm.degree() != b)
    throw McgError("invalid-puncture-perm", "degree must equal the puncture count");
  if (!cons.puncture_perm.is_involution())
    throw McgError("invalid-puncture-perm", "puncture action must be an involution");

  // collect phi as (source, target) with both directions of each swap
  std::vector<IntVec> src, tgt;
  auto add_constraint = [&](const IntVec& u, const IntVec& v) {
    if (u.size() != lat.rank || v.size() != lat.rank)
      throw invalid_argument_error("constraint vector size mismatch");
    if (!lat.handle_block_only(u) || !lat.handle_block_only(v))
      throw invalid_argument_error("constraint classes must lie in the handle block");
    if (vec_is_zero(u) || vec_is_zero(v))
      throw invalid_argument_error("constraint classes must be nonzero");
    src.push_back(truncate_handle(u, hs.dim));
    tgt.push_back(truncate_handle(v, hs.dim));
  };
  for (const auto& [u, v] : cons.pairs) {
    add_constraint(u, v);
    add_constraint(v, u);
  }
  for (const auto& [w, s] : cons.fixed) {
    if (s != 1 && s != -1) throw invalid_argument_error("fixed sign must be +1 or -1");
    IntVec sw = s == 1 ? w : vec_neg(w);
    add_constraint(w, sw);
  }

  const std::size_t k = src.size();
  IntMat h_block;

  if (k == 0) {
    h_block = IntMat::identity(hs.dim);
  } else {
    // pairing compatibility of the partial map
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (hs.pair(src[i], src[j]) != hs.pair(tgt[i], tgt[j]))
          throw no_completion_error("constraints do not preserve the pairing");

    // linear well-definedness: relations among sources must hold among targets
    IntMat src_mat(hs.dim, k);
    for (std::size_t j = 0; j < k; ++j) src_mat.set_column(j, src[j]);
    for (const IntVec& rel : int_kernel(src_mat)) {
      IntVec image(hs.dim, Int(0));
      for (std::size_t j = 0; j < k; ++j)
        if (rel[j] != 0) image = vec_add(image, vec_scale(rel[j], tgt[j]));
      if (!vec_is_zero(image))
        throw no_completion_error("constraints are linearly inconsistent");
    }

    std::vector<IntVec> f = saturate_span(src, hs.dim);
    const std::size_t r = f.size();
    if (2 * r > hs.dim)
      throw no_completion_error("constraint span exceeds half the handle rank");

    // isotropy; guaranteed for disjoint-curve constraint systems
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j)
        if (hs.pair(f[i], f[j]) != 0)
          throw no_completion_error("constraint span is not isotropic (unsupported)");

    // phi on the saturated basis, integral by saturation or not at all
    std::vector<IntVec> phi_f;
    for (std::size_t t = 0; t < r; ++t) {
      auto coeffs = solve_rational(src, f[t]);
      if (!coeffs) throw no_completion_error("saturation escapes the constraint span");
      std::vector<Rat> image(hs.dim, Rat(0));
      for (std::size_t j = 0; j < k; ++j) {
        if ((*coeffs)[j] == 0) continue;
        for (std::size_t i = 0; i < hs.dim; ++i)
          image[i] += (*coeffs)[j] * Rat(tgt[j][i]);
      }
      IntVec img(hs.dim);
      for (std::size_t i = 0; i < hs.dim; ++i) {
        if (denominator(image[i]) != 1)
          throw no_completion_error("no integral involution satisfies the constraints");
        img[i] = numerator(image[i]);
      }
      phi_f.push_back(std::move(img));
    }

    // matrix A of phi in the f basis; A^2 = I or the constraints lied
    IntMat a_phi(r, r);
    for (std::size_t t = 0; t < r; ++t) {
      auto coeffs = solve_rational(f, phi_f[t]);
      if (!coeffs) throw no_completion_error("phi does not preserve the constraint span");
      for (std::size_t i = 0; i < r; ++i) {
        if (denominator((*coeffs)[i]) != 1)
          throw no_completion_error("phi is not integral on the saturated span");
        a_phi.at(i, t) = numerator((*coeffs)[i]);
      }
    }
    if (!is_involution(a_phi))
      throw no_completion_error("constraints do not square to the identity");

    // dual vectors d_t with <f_i, d_t> = delta_it, then made isotropic
    IntMat pair_rows(r, hs.dim);
    for (std::size_t i = 0; i < r; ++i) {
      IntVec row = hs.omega_row(f[i]);
      for (std::size_t j = 0; j < hs.dim; ++j) pair_rows.at(i, j) = row[j];
    }
    std::vector<IntVec> dual;
    for (std::size_t t = 0; t < r; ++t) {
      IntVec e(r, Int(0));
      e[t] = 1;
      auto d = solve_int(pair_rows, e);
      if (!d) throw no_completion_error("constraint span is not saturated in the lattice");
      dual.push_back(*d);
    }
    for (std::size_t j = 0; j < r; ++j) {
      IntVec u = dual[j];
      for (std::size_t i = 0; i < j; ++i) {
        Int s = hs.pair(dual[i], dual[j]);
        if (s != 0) u = vec_add(u, vec_scale(s, f[i]));
      }
      dual[j] = u;
    }
    // re-isotropize pass check deferred to the final verification

    // orthogonal complement W of span(f) + span(dual)
    IntMat ortho_rows(2 * r, hs.dim);
    for (std::size_t i = 0; i < r; ++i) {
      IntVec row_f = hs.omega_row(f[i]);
      IntVec row_u = hs.omega_row(dual[i]);
      for (std::size_t j = 0; j < hs.dim; ++j) {
        ortho_rows.at(i, j) = row_f[j];
        ortho_rows.at(r + i, j) = row_u[j];
      }
    }
    std::vector<IntVec> w = int_kernel(ortho_rows);
    if (w.size() != hs.dim - 2 * r)
      throw construction_failed_error("complement has unexpected rank");

    IntMat t_mat(hs.dim, hs.dim);
    for (std::size_t j = 0; j < r; ++j) t_mat.set_column(j, f[j]);
    for (std::size_t j = 0; j < r; ++j) t_mat.set_column(r + j, dual[j]);
    for (std::size_t j = 0; j < w.size(); ++j) t_mat.set_column(2 * r + j, w[j]);
    Int dt = t_mat.det();
    if (dt != 1 && dt != -1)
      throw construction_failed_error("completion basis is not unimodular");

    // block action: A on f, A^T on duals (forced by <Hf, Hu> = <f, u>), identity on W
    IntMat block(hs.dim, hs.dim);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        block.at(i, j) = a_phi.at(i, j);
        block.at(r + i, r + j) = a_phi.at(j, i);
      }
    for (std::size_t j = 2 * r; j < hs.dim; ++j) block.at(j, j) = 1;

    IntMat t_inv(hs.dim, hs.dim);
    for (std::size_t j = 0; j < hs.dim; ++j) {
      IntVec e(hs.dim, Int(0));
      e[j] = 1;
      auto col = solve_int(t_mat, e);
      if (!col) throw construction_failed_error("unimodular basis failed to invert");
      t_inv.set_column(j, *col);
    }
    h_block = t_mat * block * t_inv;
  }

  // assemble the full-lattice matrix and verify every promise before returning
  IntMat m = IntMat::identity(lat.rank);
  for (std::size_t i = 0; i < hs.dim; ++i)
    for (std::size_t j = 0; j < hs.dim; ++j) m.at(i, j) = h_block.at(i, j);
  IntMat p = puncture_block(b, cons.puncture_perm);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) m.at(hs.dim + i, hs.dim + j) = p.at(i, j);

  if (!is_involution(m) || !is_symplectic(lat, m))
    throw no_completion_error("completion failed verification");
  for (std::size_t t = 0; t < k; ++t) {
    IntVec full_src(lat.rank, Int(0)), full_tgt(lat.rank, Int(0));
    for (std::size_t i = 0; i < hs.dim; ++i) {
      full_src[i] = src[t][i];
      full_tgt[i] = tgt[t][i];
    }
    if (m.apply(full_src) != full_tgt)
      throw no_completion_error("completion failed to satisfy a constraint");
  }
  return m;
}

}  // namespace mcgcert
