#include "mcgcert/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "mcgcert/errors.hpp"

namespace mcgcert {

const RepElement* GeneratorSet::find(const std::string& name) const {
  for (const auto& g : gens)
    if (g.name == name) return &g;
  return nullptr;
}

std::vector<std::string> GeneratorSet::names() const {
  std::vector<std::string> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.name);
  return out;
}

Word word_inverse(const Word& w) {
  return Word(w.rbegin(), w.rend());
}

Word reduce_word(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word conjugate_word(const Word& by, const Word& w) {
  return concat(concat(by, w), word_inverse(by));
}

RepElement evaluate(const HomologyLattice& lat, const GeneratorSet& gens, const Word& w) {
  RepElement acc = rep_identity(lat);
  for (const auto& l : w) {
    const RepElement* g = gens.find(l);
    if (!g) throw invalid_argument_error("evaluate: unbound letter '" + l + "'");
    acc = compose(acc, *g);
  }
  return acc;
}

Word rotation_word(int exponent) {
  Word out;
  Word step = exponent >= 0 ? Word{"rho2", "rho1"} : Word{"rho1", "rho2"};
  for (int i = 0; i < std::abs(exponent); ++i) out = concat(out, step);
  return out;
}

namespace {

struct PlanBuilder {
  const CurveRegistry& reg;
  const HomologyLattice& lat;
  int branch;
  WordPlan plan;

  PlanBuilder(const CurveRegistry& r, int br) : reg(r), lat(r.lattice()), branch(br) {
    plan.branch = br;
  }

  RepElement eval(const Word& w) const { return evaluate(lat, plan.gens, w); }

  bool word_gives_twist(const Word& w, const IntVec& c) const {
    RepElement e = eval(w);
    return e.perm.is_identity() && e.matrix == transvection(lat, c);
  }

  void store(const std::string& curve, const Word& w, const IntVec& c) {
    if (!word_gives_twist(w, c))
      throw construction_failed_error("coverage word for " + curve +
                                      " does not evaluate to its twist");
    plan.coverage[curve] = reduce_word(w);
  }

  // the two-twist factor rho3.pivot (or pivot.rho3), whichever equals
  // transvection(x1) . transvection(b1)^-1
  Word base_factor() const {
    const LanternConfig& lc = reg.lantern();
    RepElement quot =
        compose(twist(lat, lc.x1), rep_inverse(twist(lat, lc.b1)));
    std::string piv = pivot_involution(reg).name;
    for (const Word& cand : {Word{"rho3", piv}, Word{piv, "rho3"}}) {
      if (rep_equal(eval(cand), quot)) return cand;
    }
    throw construction_failed_error("no orientation of rho3 against the pivot "
                                    "yields the twist quotient");
  }

  // conjugator words sending the first lantern factor to the role-th one
  Word role_conjugator(int role, const Word& factor) const {
    const LanternConfig& lc = reg.lantern();
    const IntVec& x = role == 2 ? lc.x2 : lc.x3;
    const IntVec& b = role == 2 ? lc.b2 : lc.b3;
    RepElement want = compose(twist(lat, x), rep_inverse(twist(lat, b)));
    std::vector<Word> candidates;
    if (branch == 4) {
      Word j{"J"};
      candidates = {concat(j, rotation_word(2)), concat(rotation_word(2), j),
                    concat(j, rotation_word(-2)), concat(rotation_word(-2), j)};
    } else {
      candidates = {Word{role == 2 ? "I12" : "I13"}};
    }
    for (const Word& h : candidates) {
      if (rep_equal(eval(conjugate_word(h, factor)), want)) return h;
    }
    throw construction_failed_error("no conjugator reaches lantern factor " +
                                    std::to_string(role));
  }

  // conjugator crossing from the gamma family into alpha resp. beta
  Word family_crossing(const IntVec& from, const IntVec& to) const {
    std::vector<Word> candidates;
    if (branch == 4) {
      Word j{"J"};
      candidates = {concat(j, rotation_word(2)), concat(rotation_word(2), j),
                    concat(j, rotation_word(-2)), concat(rotation_word(-2), j)};
    } else if (branch == 5) {
      candidates = {Word{"I13"}, Word{"I12"}};
    } else {
      candidates = {Word{"I13"}, Word{"I12"}, Word{"I"}};
    }
    for (const Word& h : candidates) {
      RepElement he = eval(h);
      if (he.matrix.apply(from) == to || he.matrix.apply(from) == vec_neg(to)) return h;
    }
    throw construction_failed_error("no generator crosses between curve families");
  }

  void build() {
    const SurfaceParams& p = reg.params();
    const LanternConfig& lc = reg.lantern();
    const int m = lc.m;

    Word f = base_factor();
    Word h2 = role_conjugator(2, f);
    Word h3 = role_conjugator(3, f);
    Word base = concat(concat(f, conjugate_word(h2, f)), conjugate_word(h3, f));
    base = reduce_word(base);
    if (!word_gives_twist(base, lc.b4))
      throw construction_failed_error("lantern word does not evaluate to the "
                                      "fourth boundary twist");
    plan.lantern_base = base;

    for (int i = 1; i <= p.g - 1; ++i)
      store("gamma_" + std::to_string(i),
            conjugate_word(rotation_word(i - m), base), reg.gamma(i));

    // alpha anchor: conjugate the gamma_{m-1} twist across families
    Word ha = family_crossing(reg.gamma(m - 1), reg.alpha(m + 1));
    Word alpha_anchor =
        conjugate_word(ha, plan.coverage.at("gamma_" + std::to_string(m - 1)));
    for (int i = 1; i <= p.g; ++i)
      store("alpha_" + std::to_string(i),
            conjugate_word(rotation_word(i - (m + 1)), alpha_anchor), reg.alpha(i));

    // beta anchor, branch-dependent crossing
    Word beta_anchor;
    int banchor;
    if (branch == 6) {
      banchor = pants_beta_index(reg);
      Word hb = family_crossing(reg.alpha(m), reg.beta(banchor));
      beta_anchor =
          conjugate_word(hb, plan.coverage.at("alpha_" + std::to_string(m)));
    } else {
      banchor = m - 2;
      Word hb = family_crossing(reg.gamma(m + 1), reg.beta(m - 2));
      beta_anchor =
          conjugate_word(hb, plan.coverage.at("gamma_" + std::to_string(m + 1)));
    }
    for (int i = 1; i <= p.g; ++i)
      store("beta_" + std::to_string(i),
            conjugate_word(rotation_word(i - banchor), beta_anchor), reg.beta(i));
  }
};

}  // namespace

GeneratorSet branch_generators(const CurveRegistry& reg, int branch) {
  const SurfaceParams& p = reg.params();
  GeneratorSet gs;
  gs.gens.push_back(rho1(p));
  gs.gens.push_back(rho2(p));
  gs.gens.push_back(rho3(reg));
  switch (branch) {
    case 4:
      gs.gens.push_back(build_J(reg, puncture_r(p.b, 3)));
      break;
    case 5:
      gs.gens.push_back(build_I12(reg, true, pairing_involution(p.b)));
      gs.gens.push_back(build_I13(reg, puncture_r(p.b, 3)));
      break;
    case 6:
      gs.gens.push_back(build_I12(reg, false, pairing_involution(p.b)));
      gs.gens.push_back(build_I13(reg, pairing_involution(p.b)));
      gs.gens.push_back(build_I(reg, puncture_r(p.b, 3)));
      break;
    default:
      throw branch_not_available_error("no word plan for branch count " +
                                       std::to_string(branch));
  }
  return gs;
}

WordPlan build_word_plan(const CurveRegistry& reg, int branch) {
  PlanBuilder b(reg, branch);
  b.plan.gens = branch_generators(reg, branch);
  b.build();
  return b.plan;
}

namespace {

std::string state_key(const RepElement& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.matrix.rows(); ++i)
    for (std::size_t j = 0; j < e.matrix.cols(); ++j) os << e.matrix.at(i, j) << ',';
  os << ';';
  for (int i = 1; i <= e.perm.degree(); ++i) os << e.perm(i) << ',';
  return os.str();
}

}  // namespace

std::vector<std::optional<Word>> bfs_search(const HomologyLattice& lat,
                                            const std::vector<RepElement>& targets,
                                            const GeneratorSet& gens,
                                            const SearchLimits& limits) {
  if (gens.gens.empty()) throw invalid_argument_error("bfs_search: no generators");
  if (limits.max_depth < 1) throw invalid_argument_error("bfs_search: depth must be >= 1");

  std::vector<std::optional<Word>> out(targets.size());
  std::size_t remaining = targets.size();
  auto match = [&](const RepElement& e, const Word& w) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (!out[t] && rep_equal(e, targets[t])) {
        out[t] = w;
        --remaining;
      }
    }
  };

  RepElement id = rep_identity(lat);
  std::unordered_set<std::string> seen;
  seen.insert(state_key(id));
  std::deque<std::pair<Word, RepElement>> queue;
  queue.emplace_back(Word{}, id);
  match(id, {});

  while (!queue.empty() && remaining > 0) {
    auto [w, e] = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(w.size()) >= limits.max_depth) continue;
    for (const auto& g : gens.gens) {
      if (!w.empty() && w.back() == g.name) continue;
      RepElement child = compose(e, g);
      std::string key = state_key(child);
      if (!seen.insert(std::move(key)).second) continue;
      Word cw = w;
      cw.push_back(g.name);
      match(child, cw);
      if (remaining == 0) return out;
      if (seen.size() < limits.max_states) queue.emplace_back(std::move(cw), std::move(child));
    }
  }
  return out;
}

}  // namespace mcgcert
