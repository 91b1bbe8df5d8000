#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "mcgcert/words.hpp"

namespace mcgcert {

struct TheoremBranch {
  int count = 0;               // 4, 5, 6 or 9
  std::string case_label;      // "a" .. "d"
  std::string condition;       // human-readable side condition
  std::vector<std::string> involution_names;
};

// Smallest involution count whose side condition holds at (g, b).
// Genus 1 and 2 groups are not generated by involutions at all.
TheoremBranch select_branch(int g, int b);

struct CertifyOptions {
  SearchLimits search;
  std::size_t quotient_cap = 2000000;
  bool run_quotient = true;
};

// Full verification pipeline; the result is a self-contained, replayable
// JSON record.  verified is true only when every mandatory check passed;
// the 9-involution case is always sketch-only.
nlohmann::json certify(int g, int b, const CertifyOptions& opts = {});

// Re-evaluates every word stored in a certificate against the stored
// generator matrices and compares with the recorded verdicts.
bool replay(const nlohmann::json& cert);

std::string certificate_to_string(const nlohmann::json& cert);

}  // namespace mcgcert
