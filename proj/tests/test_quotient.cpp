#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcgcert/errors.hpp"
#include "mcgcert/quotient.hpp"
#include "mcgcert/rep.hpp"
#include "mcgcert/surface.hpp"

using namespace mcgcert;

namespace {

std::vector<ModPMat> twist_images(const CurveRegistry& reg, int p) {
  std::vector<ModPMat> out;
  for (const auto& name : reg.coverage_targets()) {
    RepElement t = twist(reg.lattice(), reg.by_name(name));
    out.push_back(reduce_handle_block(reg.lattice(), t.matrix, p));
  }
  return out;
}

}  // namespace

TEST_CASE("finite symplectic group orders") {
  CHECK(sp_order(1, 2) == 6);
  CHECK(sp_order(2, 2) == 720);
  CHECK(sp_order(3, 2) == 1451520);
  CHECK(sp_order(2, 3) == 51840);
  CHECK(sp_order(1, 3) == 24);
}

TEST_CASE("reduction keeps the symplectic property and drops puncture data") {
  CurveRegistry reg = build_registry(make_params(2, 3));
  SurfaceParams p = reg.params();
  for (const RepElement& h : {rho1(p), rho2(p), rotation(p)}) {
    ModPMat m2 = reduce_handle_block(reg.lattice(), h.matrix, 2);
    CHECK(m2.n == 4);
    CHECK(is_symplectic_mod_p(m2));
    ModPMat m3 = reduce_handle_block(reg.lattice(), h.matrix, 3);
    CHECK(is_symplectic_mod_p(m3));
  }
  // -1 reduces to p-1
  RepElement r = rho1(p);
  bool has_two = false;
  ModPMat m3 = reduce_handle_block(reg.lattice(), r.matrix, 3);
  for (auto v : m3.e) {
    CHECK(v < 3);
    if (v == 2) has_two = true;
  }
  CHECK(has_two);
}

TEST_CASE("mod-p matrix algebra basics") {
  ModPMat id = ModPMat::identity(3, 4);
  CHECK(is_symplectic_mod_p(id));
  CHECK(id * id == id);
  CHECK(id.key().size() == 16);
  ModPMat z(3, 4);
  CHECK_FALSE(is_symplectic_mod_p(z));
}

TEST_CASE("closure of the identity alone is trivial") {
  auto res = enumerate_generated_serial({ModPMat::identity(2, 4)}, 100);
  CHECK_FALSE(res.capped);
  CHECK(res.order == 1);
}

TEST_CASE("twist images fill the full symplectic quotient") {
  // genus 1: two twist curves, group of order 6 over F_2
  CurveRegistry reg1 = build_registry(make_params(1, 0));
  auto res1 = enumerate_generated_serial(twist_images(reg1, 2), 100);
  CHECK_FALSE(res1.capped);
  CHECK(res1.order == sp_order(1, 2));
  // genus 2 over F_2 and F_3
  CurveRegistry reg2 = build_registry(make_params(2, 0));
  auto res2 = enumerate_generated_serial(twist_images(reg2, 2), 2000);
  CHECK(res2.order == sp_order(2, 2));
  auto res3 = enumerate_generated(twist_images(reg2, 3), 100000);
  CHECK(res3.order == sp_order(2, 3));
}

TEST_CASE("parallel closure reproduces the serial reference") {
  CurveRegistry reg = build_registry(make_params(2, 0));
  auto gens2 = twist_images(reg, 2);
  auto serial = enumerate_generated_serial(gens2, 2000);
  auto parallel = enumerate_generated(gens2, 2000);
  CHECK(serial.capped == parallel.capped);
  CHECK(serial.order == parallel.order);
  CHECK(serial.order == 720);
}

TEST_CASE("closure reports a cap instead of running away") {
  CurveRegistry reg = build_registry(make_params(2, 0));
  auto res = enumerate_generated_serial(twist_images(reg, 2), 50);
  CHECK(res.capped);
  auto par = enumerate_generated(twist_images(reg, 2), 50);
  CHECK(par.capped);
}

TEST_CASE("closure input validation") {
  // no generators: the trivial group
  CHECK(enumerate_generated_serial({}, 10).order == 1);
  std::vector<ModPMat> mixed = {ModPMat::identity(2, 4), ModPMat::identity(3, 4)};
  CHECK_THROWS_AS(enumerate_generated_serial(mixed, 10), McgError);
  std::vector<ModPMat> degenerate = {ModPMat(2, 4)};
  CHECK_THROWS_AS(enumerate_generated(degenerate, 10), McgError);
}
