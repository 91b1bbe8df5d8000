#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcgcert/rep.hpp"
#include "mcgcert/surface.hpp"

namespace mcgcert {

// A word is a sequence of generator names, composed left to right: the word
// {f, g, h} denotes f.g.h, i.e. h acts first on a vector.  Every letter in
// play is an involution, so inversion is reversal and reduction is cancelling
// adjacent repeats.
using Word = std::vector<std::string>;

struct GeneratorSet {
  std::vector<RepElement> gens;

  const RepElement* find(const std::string& name) const;
  std::vector<std::string> names() const;
};

Word word_inverse(const Word& w);
Word reduce_word(const Word& w);
Word conjugate_word(const Word& by, const Word& w);
Word concat(const Word& a, const Word& b);

RepElement evaluate(const HomologyLattice& lat, const GeneratorSet& gens, const Word& w);

// rotation and its powers spelled in the two reflections
Word rotation_word(int exponent);

// The plan for expressing the standard twists over one branch's involution
// alphabet.  Built for branches with 4, 5 or 6 generators; every stored word
// is evaluated against the twist it claims to equal before being stored.
struct WordPlan {
  int branch = 0;
  GeneratorSet gens;
  Word lantern_base;                     // evaluates to the twist about gamma_m
  std::map<std::string, Word> coverage;  // curve name -> verified word
};

// The involution alphabet of a branch, with its canonical puncture actions;
// branches 4, 5 and 6 only.
GeneratorSet branch_generators(const CurveRegistry& reg, int branch);

WordPlan build_word_plan(const CurveRegistry& reg, int branch);

struct SearchLimits {
  int max_depth = 10;        // hard cap on word length
  std::size_t max_states = 2000;  // dedup-set bound keeping search time sane
};

// Breadth-first search over reduced words for each target.  Deterministic:
// FIFO expansion with generators tried in set order, so a found word is
// shortest and lexicographically first (in generator-set order) among the
// shortest.  Not finding a word is a value, not an error.
std::vector<std::optional<Word>> bfs_search(const HomologyLattice& lat,
                                            const std::vector<RepElement>& targets,
                                            const GeneratorSet& gens,
                                            const SearchLimits& limits);

}  // namespace mcgcert
