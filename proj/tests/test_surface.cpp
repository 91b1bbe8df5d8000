#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcgcert/errors.hpp"
#include "mcgcert/surface.hpp"

using namespace mcgcert;

TEST_CASE("parameter validation") {
  CHECK(make_params(3, 2).k == 1);
  CHECK(make_params(8, 0).k == 4);
  CHECK_THROWS_AS(make_params(0, 2), McgError);
  CHECK_THROWS_AS(make_params(3, -1), McgError);
  CHECK_THROWS_AS(make_params(13, 0), McgError);
}

TEST_CASE("curve classes at genus 3 with two punctures") {
  CurveRegistry reg = build_registry(make_params(3, 2));
  const auto& lat = reg.lattice();
  for (int i = 1; i <= 3; ++i) {
    CHECK(reg.alpha(i) == lat.basis_a(i));
    CHECK(reg.beta(i) == lat.basis_b(i));
  }
  CHECK(reg.gamma(1) == vec_sub(lat.basis_a(1), lat.basis_a(2)));
  CHECK(reg.gamma(2) == vec_sub(lat.basis_a(2), lat.basis_a(3)));
  CHECK(reg.delta(0) == lat.basis_a(1));
  CHECK(reg.delta(1) == vec_add(lat.basis_a(1), lat.c_class(1)));
  // rotation preimages: R eta_j = delta_{j-1}, and R a_3 = a_1
  CHECK(reg.eta(1) == lat.basis_a(3));
  CHECK(reg.eta(2) == vec_add(lat.basis_a(3), lat.c_class(2)));
}

TEST_CASE("delta and eta ranges are enforced") {
  CurveRegistry reg = build_registry(make_params(3, 2));
  CHECK_THROWS_AS(reg.delta(2), McgError);
  CHECK_THROWS_AS(reg.delta(-1), McgError);
  CHECK_THROWS_AS(reg.eta(0), McgError);
  CHECK_THROWS_AS(reg.eta(3), McgError);
  CHECK_THROWS_AS(reg.gamma(3), McgError);
}

TEST_CASE("lantern boundary classes at even genus") {
  // middle handle g/2, reflection through it is the first one
  CurveRegistry reg = build_registry(make_params(4, 0));
  const auto& lc = reg.lantern();
  const auto& lat = reg.lattice();
  CHECK(lc.m == 2);
  CHECK(lc.pivot_is_rho1);
  CHECK(lc.b1 == lat.basis_a(3));
  CHECK(lc.b2 == vec_neg(lat.basis_a(1)));
  CHECK(lc.b3 == vec_sub(lat.basis_a(1), lat.basis_a(2)));
  CHECK(lc.b4 == vec_sub(lat.basis_a(2), lat.basis_a(3)));
  CHECK(lc.x1 == vec_neg(lat.basis_a(2)));
  CHECK(lc.x2 == vec_add(lc.b1, lc.b3));
  CHECK(lc.x3 == vec_add(lc.b1, lc.b2));
}

TEST_CASE("lantern pivot flips at odd genus") {
  CurveRegistry reg = build_registry(make_params(3, 0));
  const auto& lc = reg.lantern();
  CHECK(lc.m == 2);
  CHECK_FALSE(lc.pivot_is_rho1);
  CHECK(lc.x1 == vec_neg(reg.alpha(2)));
}

TEST_CASE("lantern classes satisfy the boundary-sum and pair-sum identities") {
  for (int g = 3; g <= 9; ++g) {
    CurveRegistry reg = build_registry(make_params(g, 0));
    const auto& lc = reg.lantern();
    CHECK(vec_is_zero(vec_add(vec_add(lc.b1, lc.b2), vec_add(lc.b3, lc.b4))));
    CHECK(lc.x1 == vec_add(lc.b2, lc.b3));
    CHECK(lc.x2 == vec_add(lc.b1, lc.b3));
    CHECK(lc.x3 == vec_add(lc.b1, lc.b2));
    // b4 is the class of the middle connector curve
    CHECK(lc.b4 == reg.gamma(lc.m));
  }
}

TEST_CASE("lantern twist identity holds on homology") {
  for (int g = 3; g <= 8; ++g) {
    CurveRegistry reg = build_registry(make_params(g, 1));
    const auto& lat = reg.lattice();
    const auto& lc = reg.lantern();
    IntMat lhs = transvection(lat, lc.x1) * transvection(lat, lc.x2) * transvection(lat, lc.x3);
    IntMat rhs = transvection(lat, lc.b1) * transvection(lat, lc.b2) *
                 transvection(lat, lc.b3) * transvection(lat, lc.b4);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("no lantern below genus 3") {
  CurveRegistry reg = build_registry(make_params(2, 0));
  CHECK_FALSE(reg.has_lantern());
  CHECK_THROWS_AS(reg.lantern(), McgError);
}

TEST_CASE("name lookup round-trips the dump") {
  CurveRegistry reg = build_registry(make_params(4, 2));
  for (const auto& [name, cls] : reg.all_curves()) CHECK(reg.by_name(name) == cls);
  CHECK_THROWS_AS(reg.by_name("alpha_9"), McgError);
  CHECK_THROWS_AS(reg.by_name("nonsense"), McgError);
}

TEST_CASE("coverage targets are the 3g-1 twist curves") {
  for (int g = 2; g <= 6; ++g) {
    CurveRegistry reg = build_registry(make_params(g, 0));
    auto targets = reg.coverage_targets();
    CHECK(targets.size() == static_cast<std::size_t>(3 * g - 1));
    for (const auto& t : targets) CHECK_NOTHROW(reg.by_name(t));
  }
}
