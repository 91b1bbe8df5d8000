#pragma once

#include <optional>
#include <vector>

#include "mcgcert/intmat.hpp"
#include "mcgcert/perm.hpp"

namespace mcgcert {

// Stabilizer-chain representation of a permutation group on {1..b}.
// Deterministic construction: base is 1, 2, 3, ..., generators are always
// scanned in insertion order, so identical inputs give identical chains.
class PermGroup {
 public:
  PermGroup(std::vector<Perm> gens, int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return input_; }
  const Int& order() const { return order_; }
  bool contains(const Perm& p) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Perm> stab_gens;          // strong generators fixing earlier base points
    std::vector<int> orbit;               // discovery order
    std::vector<std::optional<Perm>> rep; // rep[x-1] maps base to x
  };

  void rebuild_level(std::size_t i);
  Perm sift(Perm p) const;

  int degree_;
  std::vector<Perm> input_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
  Int order_;
};

PermGroup schreier_sims(const std::vector<Perm>& gens, int b);

// The three standard involutions: r1 reverses, r2 reverses keeping b in
// place, r3 reverses keeping 1 and b in place.
Perm canonical_r(int b, int which);

// Exhaustive hunt for an involution s with the given number of fixed points
// such that r1, r2, s together generate the full symmetric group.
std::optional<Perm> complement_search(int b, int fixed_points);

}  // namespace mcgcert
