#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mcgcert/errors.hpp"
#include "mcgcert/permgrp.hpp"

using namespace mcgcert;

namespace {

// brute-force closure, usable up to a few thousand elements
std::set<std::vector<int>> naive_closure(const std::vector<Perm>& gens, int b) {
  auto key = [b](const Perm& p) {
    std::vector<int> k(static_cast<std::size_t>(b));
    for (int i = 1; i <= b; ++i) k[static_cast<std::size_t>(i - 1)] = p(i);
    return k;
  };
  std::set<std::vector<int>> seen;
  std::vector<Perm> frontier{Perm(b)};
  seen.insert(key(Perm(b)));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Perm c = g.compose(e);
        if (seen.insert(key(c)).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return seen;
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("canonical involutions at five points") {
  CHECK(canonical_r(5, 1).cycle_string() == "(1,5)(2,4)");
  CHECK(canonical_r(5, 2).cycle_string() == "(1,4)(2,3)");
  CHECK(canonical_r(5, 3).cycle_string() == "(2,4)");
  // the two reversals compose to the standard rotation
  Perm rot = canonical_r(5, 2).compose(canonical_r(5, 1));
  CHECK(rot == Perm::from_images({5, 1, 2, 3, 4}));
  Perm swap_ends = canonical_r(5, 1).compose(canonical_r(5, 3));
  CHECK(swap_ends.cycle_string() == "(1,5)");
}

TEST_CASE("reversal pair generates the dihedral group") {
  for (int b = 3; b <= 12; ++b) {
    PermGroup d({canonical_r(b, 1), canonical_r(b, 2)}, b);
    CHECK(d.order() == 2 * b);
  }
}

TEST_CASE("adding the end swap yields the full symmetric group") {
  for (int b = 3; b <= 12; ++b) {
    PermGroup s({canonical_r(b, 1), canonical_r(b, 2), canonical_r(b, 3)}, b);
    CHECK(s.order() == factorial(b));
  }
}

TEST_CASE("order and membership agree with brute-force closure") {
  std::vector<Perm> gens = {canonical_r(5, 1), canonical_r(5, 2)};
  PermGroup grp(gens, 5);
  auto closure = naive_closure(gens, 5);
  CHECK(grp.order() == Int(closure.size()));
  // every element of the closure passes membership; a transposition not in
  // the dihedral group fails it
  for (const auto& k : closure) {
    std::vector<int> images(k.begin(), k.end());
    CHECK(grp.contains(Perm::from_images(images)));
  }
  CHECK_FALSE(grp.contains(Perm::from_images({2, 1, 3, 4, 5})));
}

TEST_CASE("trivial and single-generator groups") {
  PermGroup trivial({}, 4);
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(Perm(4)));
  CHECK_FALSE(trivial.contains(Perm::from_images({2, 1, 3, 4})));
  PermGroup cyc({Perm::from_images({2, 3, 1})}, 3);
  CHECK(cyc.order() == 3);
}

TEST_CASE("complement search finds a full-group involution at seven points") {
  auto s = complement_search(7, 1);
  REQUIRE(s.has_value());
  CHECK(s->is_involution());
  CHECK(s->fixed_points() == 1);
  PermGroup full({canonical_r(7, 1), canonical_r(7, 2), *s}, 7);
  CHECK(full.order() == factorial(7));
}

TEST_CASE("complement search is honest about misses") {
  CHECK_FALSE(complement_search(5, 1).has_value());
  CHECK_FALSE(complement_search(9, 1).has_value());
  CHECK(complement_search(5, 3).has_value());
}

TEST_CASE("complement search rejects impossible or oversized inputs") {
  // even point counts never need a complement and are rejected outright
  CHECK_THROWS_AS(complement_search(6, 1), McgError);
  CHECK_THROWS_AS(complement_search(4, -1), McgError);
  CHECK_THROWS_WITH_AS(complement_search(13, 1), doctest::Contains("budget"), McgError);
}
