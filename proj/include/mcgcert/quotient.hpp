#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcgcert/symhom.hpp"

namespace mcgcert {

// Dense square matrix over F_p, used for the closed-surface 2g x 2g block.
struct ModPMat {
  int p = 2;
  std::size_t n = 0;
  std::vector<std::uint8_t> e;  // row-major, entries in [0, p)

  ModPMat() = default;
  ModPMat(int prime, std::size_t dim)
      : p(prime), n(dim), e(dim * dim, 0) {}

  std::uint8_t& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return e[i * n + j]; }

  static ModPMat identity(int prime, std::size_t dim);
  ModPMat operator*(const ModPMat& o) const;
  bool operator==(const ModPMat& o) const { return p == o.p && n == o.n && e == o.e; }

  // row-major byte string; the dedup key during closure
  std::string key() const { return std::string(e.begin(), e.end()); }
};

// order of the finite symplectic group Sp(2g, F_p)
Int sp_order(int g, int p);

// top-left 2g x 2g block of a lattice automorphism, reduced mod p
ModPMat reduce_handle_block(const HomologyLattice& lat, const IntMat& m, int p);

bool is_symplectic_mod_p(const ModPMat& m);

struct ClosureResult {
  bool capped = false;
  Int order = 0;
};

// Breadth-first closure of the generated matrix group.  The parallel version
// splits each frontier level across threads and merges thread buffers in
// order, so its visit order — and therefore its result — is identical to the
// serial reference for any thread count.
ClosureResult enumerate_generated(const std::vector<ModPMat>& gens, std::size_t cap);
ClosureResult enumerate_generated_serial(const std::vector<ModPMat>& gens, std::size_t cap);

}  // namespace mcgcert
