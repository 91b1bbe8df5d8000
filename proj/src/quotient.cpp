#include "mcgcert/quotient.hpp"

#include <unordered_set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mcgcert/errors.hpp"

namespace mcgcert {

ModPMat ModPMat::identity(int prime, std::size_t dim) {
  ModPMat m(prime, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

ModPMat ModPMat::operator*(const ModPMat& o) const {
  ModPMat out(p, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint8_t v = at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < n; ++j)
        out.e[i * n + j] =
            static_cast<std::uint8_t>((out.e[i * n + j] + v * o.e[k * n + j]) % p);
    }
  return out;
}

Int sp_order(int g, int p) {
  if (g < 1) throw invalid_argument_error("sp_order: g must be >= 1");
  Int q(p), out = 1;
  for (int i = 0; i < g * g; ++i) out *= q;
  Int pw = 1;
  for (int i = 1; i <= g; ++i) {
    pw *= q * q;
    out *= pw - 1;
  }
  return out;
}

ModPMat reduce_handle_block(const HomologyLattice& lat, const IntMat& m, int p) {
  std::size_t n = 2 * static_cast<std::size_t>(lat.genus);
  ModPMat out(p, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int v = m.at(i, j) % p;
      if (v < 0) v += p;
      out.at(i, j) = static_cast<std::uint8_t>(v.convert_to<int>());
    }
  return out;
}

bool is_symplectic_mod_p(const ModPMat& m) {
  std::size_t g = m.n / 2;
  if (m.n != 2 * g) return false;
  auto omega = [&](std::size_t i, std::size_t j) -> int {
    if (j == i + g) return 1;
    if (i == j + g) return m.p - 1;
    return 0;
  };
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < m.n; ++k)
        for (std::size_t l = 0; l < m.n; ++l)
          acc = (acc + m.at(k, i) * omega(k, l) % m.p * m.at(l, j)) % m.p;
      if (acc % m.p != omega(i, j) % m.p) return false;
    }
  return true;
}

namespace {

void validate_gens(const std::vector<ModPMat>& gens) {
  for (const auto& g : gens) {
    if (g.p != gens[0].p || g.n != gens[0].n)
      throw invalid_argument_error("enumerate_generated: generators disagree "
                                   "on modulus or dimension");
    if (!is_symplectic_mod_p(g))
      throw invalid_argument_error("enumerate_generated: generator does not "
                                   "preserve the mod-p form");
  }
}

}  // namespace

ClosureResult enumerate_generated_serial(const std::vector<ModPMat>& gens, std::size_t cap) {
  validate_gens(gens);
  if (gens.empty()) return {false, 1};
  ModPMat id = ModPMat::identity(gens[0].p, gens[0].n);
  std::unordered_set<std::string> seen;
  seen.insert(id.key());
  std::vector<ModPMat> frontier{id};
  while (!frontier.empty()) {
    std::vector<ModPMat> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        ModPMat prod = m * g;
        if (seen.insert(prod.key()).second) {
          if (seen.size() > cap) return {true, 0};
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return {false, Int(seen.size())};
}

ClosureResult enumerate_generated(const std::vector<ModPMat>& gens, std::size_t cap) {
  validate_gens(gens);
  if (gens.empty()) return {false, 1};
  ModPMat id = ModPMat::identity(gens[0].p, gens[0].n);
  std::unordered_set<std::string> seen;
  seen.insert(id.key());
  std::vector<ModPMat> frontier{id};
  while (!frontier.empty()) {
    // each thread expands a contiguous slice of the frontier; merging the
    // slices in slice order replays exactly the serial visit order
    int nt = 1;
#ifdef _OPENMP
    nt = omp_get_max_threads();
#endif
    std::size_t chunk = (frontier.size() + static_cast<std::size_t>(nt) - 1) /
                        static_cast<std::size_t>(nt);
    std::vector<std::vector<ModPMat>> buf(static_cast<std::size_t>(nt));
#ifdef _OPENMP
#pragma omp parallel num_threads(nt)
    {
      int t = omp_get_thread_num();
#else
    for (int t = 0; t < nt; ++t) {
#endif
      std::size_t lo = static_cast<std::size_t>(t) * chunk;
      std::size_t hi = std::min(frontier.size(), lo + chunk);
      auto& local = buf[static_cast<std::size_t>(t)];
      for (std::size_t f = lo; f < hi; ++f)
        for (const auto& g : gens) {
          ModPMat prod = frontier[f] * g;
          if (!seen.count(prod.key())) local.push_back(std::move(prod));
        }
    }
    std::vector<ModPMat> next;
    for (auto& local : buf)
      for (auto& prod : local)
        if (seen.insert(prod.key()).second) {
          if (seen.size() > cap) return {true, 0};
          next.push_back(std::move(prod));
        }
    frontier = std::move(next);
  }
  return {false, Int(seen.size())};
}

}  // namespace mcgcert
