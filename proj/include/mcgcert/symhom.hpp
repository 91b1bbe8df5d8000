#pragma once

#include "mcgcert/intmat.hpp"
#include "mcgcert/perm.hpp"

#include <utility>
#include <vector>

namespace mcgcert {

// First homology of a genus-g surface with b punctures, as a based lattice.
//
// Basis order: a_1..a_g, b_1..b_g, c_1..c_{b-1}.  The a/b block carries the
// standard symplectic pairing <a_i, b_j> = delta_ij; the puncture loop classes
// c_j are central (pair to zero with everything).  The class of the loop
// around the last puncture is not a basis vector: c_b = -(c_1 + ... + c_{b-1}).
struct HomologyLattice {
  int genus = 0;
  int punctures = 0;
  std::size_t rank = 0;
  IntMat omega;  // rank x rank pairing Gram matrix

  std::size_t a_index(int i) const { return static_cast<std::size_t>(i - 1); }
  std::size_t b_index(int i) const { return static_cast<std::size_t>(genus + i - 1); }
  std::size_t c_index(int j) const { return static_cast<std::size_t>(2 * genus + j - 1); }

  IntVec zero() const { return IntVec(rank, Int(0)); }
  IntVec basis_a(int i) const;
  IntVec basis_b(int i) const;
  // c_class(j) is defined for 1 <= j <= b, expanding c_b via the sum relation.
  IntVec c_class(int j) const;

  bool handle_block_only(const IntVec& v) const;
};

HomologyLattice make_lattice(int g, int b);

Int pairing(const HomologyLattice& lat, const IntVec& u, const IntVec& v);

// Transvection v |-> v + <v,c>c as a matrix.  Independent of the sign of c;
// the identity when c is central.
IntMat transvection(const HomologyLattice& lat, const IntVec& c);

bool is_symplectic(const HomologyLattice& lat, const IntMat& m);
bool is_involution(const IntMat& m);

// Matrix of the permutation action on the c-block: c_j |-> c_{pi(j)}, with
// c_b expanded through the sum relation.  Size (b-1) x (b-1).
IntMat puncture_block(int b, const Perm& pi);

// Partial data for an involution: swapped class pairs (u <-> v), fixed classes
// with a sign (w |-> sign*w), and the action on punctures.  All classes must
// lie in the a/b handle block; the puncture action is supplied separately.
struct InvolutionConstraints {
  std::vector<std::pair<IntVec, IntVec>> pairs;
  std::vector<std::pair<IntVec, int>> fixed;
  Perm puncture_perm;
};

// Completes the constraints to an integral involution of the full lattice that
// preserves the pairing and acts on puncture classes by puncture_perm.  The
// construction extends the constrained sublattice by a dual isotropic
// complement and acts as the identity on the rest; it is deterministic.
//
// Throws no_completion_error when the constraints are linearly or
// pairing-incompatible (or when their span is not isotropic, which never
// happens for disjoint-curve constraint sets), invalid_argument_error for
// malformed input.
IntMat complete_partial_involution(const HomologyLattice& lat,
                                   const InvolutionConstraints& cons);

}  // namespace mcgcert
