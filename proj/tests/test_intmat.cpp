#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcgcert/intmat.hpp"

using namespace mcgcert;

namespace {

// cofactor-expansion determinant, the oracle for the Bareiss implementation
Int det_naive(const IntMat& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int acc = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (m.at(0, k) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    }
    Int term = m.at(0, k) * det_naive(minor);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

IntMat random_mat(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    IntMat m = random_mat(rng, 4, -5, 5);
    CHECK(m.det() == det_naive(m));
  }
  IntMat id = IntMat::identity(6);
  CHECK(id.det() == 1);
}

TEST_CASE("matrix product and apply agree") {
  std::mt19937 rng(11);
  IntMat a = random_mat(rng, 5, -4, 4);
  IntMat b = random_mat(rng, 5, -4, 4);
  IntVec v(5);
  for (auto& x : v) x = std::uniform_int_distribution<int>(-9, 9)(rng);
  CHECK((a * b).apply(v) == a.apply(b.apply(v)));
}

TEST_CASE("column hermite form: transform is unimodular and reproduces h") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat a = random_mat(rng, 4, -6, 6);
    HermiteResult hr = hermite_cols(a);
    CHECK(a * hr.u == hr.h);
    Int du = hr.u.det();
    CHECK((du == 1 || du == -1));
    // pivots descend strictly by row and are positive
    for (std::size_t k = 0; k + 1 < hr.pivot_rows.size(); ++k)
      CHECK(hr.pivot_rows[k] < hr.pivot_rows[k + 1]);
    for (std::size_t k = 0; k < hr.rank; ++k)
      CHECK(hr.h.at(hr.pivot_rows[k], k) > 0);
  }
}

TEST_CASE("integer kernel annihilates and has complementary rank") {
  IntMat a(2, 3);
  a.at(0, 0) = 1; a.at(0, 1) = 2; a.at(0, 2) = 3;
  a.at(1, 0) = 2; a.at(1, 1) = 4; a.at(1, 2) = 6;
  std::vector<IntVec> k = int_kernel(a);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(vec_is_zero(a.apply(v)));
}

TEST_CASE("integer solve finds witnesses and rejects the unsolvable") {
  IntMat a(2, 2);
  a.at(0, 0) = 2; a.at(0, 1) = 0;
  a.at(1, 0) = 0; a.at(1, 1) = 3;
  IntVec b{Int(4), Int(9)};
  auto x = solve_int(a, b);
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == b);

  IntVec odd{Int(3), Int(3)};
  CHECK_FALSE(solve_int(a, odd).has_value());
}

TEST_CASE("span saturation divides out content") {
  // 2e1 and 2e2 inside Z^3 saturate to the full e1,e2 plane
  std::vector<IntVec> gens = {{Int(2), Int(0), Int(0)}, {Int(0), Int(2), Int(0)}};
  auto sat = saturate_span(gens, 3);
  REQUIRE(sat.size() == 2);
  for (const auto& v : sat) CHECK(v[2] == 0);
  // e1 must be an integer combination of the saturated basis
  IntMat basis(3, 2);
  for (std::size_t j = 0; j < 2; ++j) basis.set_column(j, sat[j]);
  IntVec e1{Int(1), Int(0), Int(0)};
  CHECK(solve_int(basis, e1).has_value());
}

TEST_CASE("rational solve distinguishes consistent from inconsistent") {
  std::vector<IntVec> cols = {{Int(2), Int(0)}, {Int(0), Int(2)}};
  auto sol = solve_rational(cols, {Int(1), Int(3)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(1, 2));
  CHECK((*sol)[1] == Rat(3, 2));

  std::vector<IntVec> dep = {{Int(1), Int(1)}};
  CHECK_FALSE(solve_rational(dep, {Int(1), Int(2)}).has_value());
}
