#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mcgcert/errors.hpp"
#include "mcgcert/words.hpp"

using namespace mcgcert;

namespace {

GeneratorSet reflection_gens(const SurfaceParams& p) {
  GeneratorSet gs;
  gs.gens = {rho1(p), rho2(p)};
  return gs;
}

}  // namespace

TEST_CASE("word algebra: reduction, inversion, conjugation") {
  CHECK(reduce_word({"a", "a", "b"}) == Word{"b"});
  CHECK(reduce_word({"a", "b", "b", "a"}) == Word{});
  CHECK(reduce_word({"a", "b", "a"}) == Word{"a", "b", "a"});
  CHECK(word_inverse({"f", "g", "h"}) == Word{"h", "g", "f"});
  CHECK(conjugate_word({"u", "v"}, {"w"}) == Word{"u", "v", "w", "v", "u"});
  CHECK(concat({"a"}, {"b", "c"}) == Word{"a", "b", "c"});
}

TEST_CASE("evaluation is a homomorphism and survives reduction") {
  SurfaceParams p = make_params(4, 2);
  HomologyLattice lat = make_lattice(p.g, p.b);
  GeneratorSet gs = reflection_gens(p);
  Word u{"rho1", "rho2", "rho1"}, v{"rho2", "rho1"};
  CHECK(rep_equal(evaluate(lat, gs, concat(u, v)),
                  compose(evaluate(lat, gs, u), evaluate(lat, gs, v))));
  Word padded{"rho1", "rho2", "rho2", "rho1", "rho2"};
  CHECK(rep_equal(evaluate(lat, gs, padded), evaluate(lat, gs, reduce_word(padded))));
  CHECK(rep_equal(evaluate(lat, gs, Word{}), rep_identity(lat)));
  CHECK_THROWS_AS(evaluate(lat, gs, Word{"missing"}), McgError);
}

TEST_CASE("rotation words evaluate to rotation powers") {
  SurfaceParams p = make_params(5, 2);
  HomologyLattice lat = make_lattice(p.g, p.b);
  GeneratorSet gs = reflection_gens(p);
  RepElement rot = rotation(p);
  RepElement acc = rep_identity(lat);
  for (int e = 0; e <= 4; ++e) {
    CHECK(rep_equal(evaluate(lat, gs, rotation_word(e)), acc));
    acc = compose(rot, acc);
  }
  CHECK(rep_equal(evaluate(lat, gs, rotation_word(-2)),
                  rep_inverse(compose(rot, rot))));
}

TEST_CASE("breadth-first search finds shortest words and reports misses") {
  SurfaceParams p = make_params(5, 0);
  HomologyLattice lat = make_lattice(p.g, p.b);
  GeneratorSet gs = reflection_gens(p);
  RepElement rot = rotation(p);
  std::vector<RepElement> targets = {
      rho1(p),                          // one letter
      compose(rot, rot),                // four letters, starts with rho2
      twist(lat, lat.basis_a(1)),       // infinite order, unreachable
  };
  auto found = bfs_search(lat, targets, gs, SearchLimits{});
  REQUIRE(found.size() == 3);
  REQUIRE(found[0].has_value());
  CHECK(*found[0] == Word{"rho1"});
  REQUIRE(found[1].has_value());
  CHECK(*found[1] == Word{"rho2", "rho1", "rho2", "rho1"});
  CHECK_FALSE(found[2].has_value());
}

TEST_CASE("search degrades to a miss under a tiny budget") {
  SurfaceParams p = make_params(5, 0);
  HomologyLattice lat = make_lattice(p.g, p.b);
  GeneratorSet gs = reflection_gens(p);
  RepElement target = compose(rotation(p), rotation(p));
  auto found = bfs_search(lat, {target}, gs, SearchLimits{2, 2000});
  CHECK_FALSE(found[0].has_value());
}

TEST_CASE("word plans cover every target over the branch alphabet") {
  struct Case {
    int g, b, branch;
    std::size_t alphabet;
  };
  for (const Case& c : {Case{3, 2, 6, 6}, Case{6, 0, 5, 5}, Case{8, 0, 4, 4}}) {
    CAPTURE(c.g);
    CurveRegistry reg = build_registry(make_params(c.g, c.b));
    const HomologyLattice& lat = reg.lattice();
    WordPlan plan = build_word_plan(reg, c.branch);
    CHECK(plan.gens.gens.size() == c.alphabet);

    // the four-boundary twist of the middle lantern comes out of the base word
    RepElement base = evaluate(lat, plan.gens, plan.lantern_base);
    CHECK(base.perm.is_identity());
    CHECK(base.matrix == transvection(lat, reg.lantern().b4));

    auto targets = reg.coverage_targets();
    CHECK(plan.coverage.size() == targets.size());
    auto alphabet = plan.gens.names();
    for (const auto& t : targets) {
      CAPTURE(t);
      REQUIRE(plan.coverage.count(t) == 1);
      const Word& w = plan.coverage.at(t);
      for (const auto& letter : w)
        CHECK(std::find(alphabet.begin(), alphabet.end(), letter) != alphabet.end());
      RepElement e = evaluate(lat, plan.gens, w);
      CHECK(e.perm.is_identity());
      CHECK(e.matrix == transvection(lat, reg.by_name(t)));
    }
  }
}

TEST_CASE("word plans reject alien branch numbers") {
  CurveRegistry reg = build_registry(make_params(4, 0));
  CHECK_THROWS_AS(build_word_plan(reg, 9), McgError);
  CHECK_THROWS_AS(build_word_plan(reg, 7), McgError);
}
