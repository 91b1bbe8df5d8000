#include "mcgcert/permgrp.hpp"

#include <algorithm>
#include <functional>

#include "mcgcert/errors.hpp"

namespace mcgcert {

namespace {

bool fixes_prefix(const Perm& p, int upto) {
  for (int x = 1; x <= upto; ++x)
    if (p(x) != x) return false;
  return true;
}

}  // namespace

PermGroup::PermGroup(std::vector<Perm> gens, int degree)
    : degree_(degree), input_(std::move(gens)) {
  for (const auto& g : input_) {
    if (g.degree() != degree_)
      throw invalid_argument_error("permutation degree mismatch");
    if (!g.is_identity() &&
        std::find(strong_.begin(), strong_.end(), g) == strong_.end())
      strong_.push_back(g);
  }
  levels_.resize(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) levels_[static_cast<std::size_t>(i)].base = i + 1;

  bool stable = false;
  while (!stable) {
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);
    stable = true;
    for (std::size_t i = 0; i < levels_.size() && stable; ++i) {
      const Level& lv = levels_[i];
      for (int x : lv.orbit) {
        for (const Perm& g : lv.stab_gens) {
          const Perm& tx = *lv.rep[static_cast<std::size_t>(x - 1)];
          const Perm& tgx = *lv.rep[static_cast<std::size_t>(g(x) - 1)];
          Perm schreier = tgx.inverse().compose(g).compose(tx);
          Perm residue = sift(std::move(schreier));
          if (!residue.is_identity()) {
            strong_.push_back(std::move(residue));
            stable = false;
            break;
          }
        }
        if (!stable) break;
      }
    }
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= Int(lv.orbit.size());
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  lv.stab_gens.clear();
  for (const auto& g : strong_)
    if (fixes_prefix(g, lv.base - 1)) lv.stab_gens.push_back(g);
  lv.orbit.clear();
  lv.rep.assign(static_cast<std::size_t>(degree_), std::nullopt);
  lv.orbit.push_back(lv.base);
  lv.rep[static_cast<std::size_t>(lv.base - 1)] = Perm(degree_);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    int y = lv.orbit[head];
    for (const auto& g : lv.stab_gens) {
      int z = g(y);
      if (!lv.rep[static_cast<std::size_t>(z - 1)]) {
        lv.rep[static_cast<std::size_t>(z - 1)] =
            g.compose(*lv.rep[static_cast<std::size_t>(y - 1)]);
        lv.orbit.push_back(z);
      }
    }
  }
}

Perm PermGroup::sift(Perm p) const {
  for (const auto& lv : levels_) {
    if (p.is_identity()) break;
    int x = p(lv.base);
    const auto& t = lv.rep[static_cast<std::size_t>(x - 1)];
    if (!t) return p;
    p = t->inverse().compose(p);
  }
  return p;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  return sift(p).is_identity();
}

PermGroup schreier_sims(const std::vector<Perm>& gens, int b) {
  return PermGroup(gens, b);
}

Perm canonical_r(int b, int which) {
  if (b < 0) throw invalid_argument_error("negative degree");
  std::vector<int> img(static_cast<std::size_t>(b));
  for (int i = 1; i <= b; ++i) {
    int t;
    switch (which) {
      case 1: t = b + 1 - i; break;
      case 2: t = (i == b) ? b : b - i; break;
      case 3: t = (i == 1 || i == b) ? i : b + 1 - i; break;
      default: throw invalid_argument_error("canonical_r: which must be 1, 2 or 3");
    }
    img[static_cast<std::size_t>(i - 1)] = t;
  }
  return Perm::from_images(std::move(img));
}

namespace {

// enumerate involutions with the exact fixed set and matching on the rest,
// lexicographically, calling visit until it returns true
bool enumerate_matchings(std::vector<int>& img, std::vector<int>& free_pts,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  if (free_pts.empty()) return visit(img);
  int a = free_pts.front();
  for (std::size_t k = 1; k < free_pts.size(); ++k) {
    int c = free_pts[k];
    img[static_cast<std::size_t>(a - 1)] = c;
    img[static_cast<std::size_t>(c - 1)] = a;
    std::vector<int> rest;
    rest.reserve(free_pts.size() - 2);
    for (std::size_t t = 1; t < free_pts.size(); ++t)
      if (t != k) rest.push_back(free_pts[t]);
    if (enumerate_matchings(img, rest, visit)) return true;
  }
  return false;
}

}  // namespace

std::optional<Perm> complement_search(int b, int fixed_points) {
  if (b % 2 != 1) throw invalid_argument_error("complement_search: b must be odd");
  if (fixed_points != 1 && fixed_points != 3)
    throw invalid_argument_error("complement_search: fixed point count must be 1 or 3");
  if (b > 11)
    throw McgError("search-budget-exceeded",
                   "exhaustive complement search is bounded to b <= 11");
  if (b - fixed_points < 0 || (b - fixed_points) % 2 != 0) return std::nullopt;

  Perm r1 = canonical_r(b, 1), r2 = canonical_r(b, 2);
  Int full = 1;
  for (int i = 2; i <= b; ++i) full *= i;

  std::optional<Perm> found;
  auto visit = [&](const std::vector<int>& img) {
    Perm s = Perm::from_images(std::vector<int>(img));
    PermGroup grp({r1, r2, s}, b);
    if (grp.order() == full) {
      found = s;
      return true;
    }
    return false;
  };

  // choose the fixed set in lexicographic order, then match the rest
  std::vector<int> pick(static_cast<std::size_t>(fixed_points));
  std::function<bool(int, int)> choose = [&](int start, int need) {
    if (need == 0) {
      std::vector<int> img(static_cast<std::size_t>(b));
      for (int i = 1; i <= b; ++i) img[static_cast<std::size_t>(i - 1)] = i;
      std::vector<int> free_pts;
      for (int i = 1; i <= b; ++i)
        if (std::find(pick.begin(), pick.end(), i) == pick.end()) free_pts.push_back(i);
      return enumerate_matchings(img, free_pts, visit);
    }
    for (int v = start; v <= b - need + 1; ++v) {
      pick[static_cast<std::size_t>(fixed_points - need)] = v;
      if (choose(v + 1, need - 1)) return true;
    }
    return false;
  };
  choose(1, fixed_points);
  return found;
}

}  // namespace mcgcert
