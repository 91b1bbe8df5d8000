#include "mcgcert/certify.hpp"

#include <algorithm>
#include <limits>

#include "mcgcert/errors.hpp"
#include "mcgcert/permgrp.hpp"
#include "mcgcert/quotient.hpp"

namespace mcgcert {

using nlohmann::json;

namespace {

const char* kScopeBanner =
    "This certificate verifies exact identities in the integral homology "
    "representation of the mapping class group together with its action on "
    "punctures: (i) every stored word evaluates to the stated twist matrix, "
    "(ii) the generator images generate the full symmetric group on the "
    "punctures, (iii) where enumerable, the mod-2 images generate the full "
    "finite symplectic group. Generation of the mapping class group itself "
    "follows by combining these with the classical twist-generation theorems "
    "of Lickorish, Johnson and Gervais, which are cited, not re-proved; the "
    "homology representation is not faithful, so all checks here are "
    "necessary conditions, not sufficient ones.";

long long to_ll(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) throw invalid_argument_error("integer too large for JSON");
  return v.convert_to<long long>();
}

json matrix_to_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_ll(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat matrix_from_json(const json& rows) {
  std::size_t n = rows.size();
  IntMat m(n, rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Int(rows[i][j].get<long long>());
  return m;
}

json perm_to_json(const Perm& p) {
  json out = json::array();
  for (int i = 1; i <= p.degree(); ++i) out.push_back(p(i));
  return out;
}

Perm perm_from_json(const json& images) {
  std::vector<int> img;
  for (const auto& v : images) img.push_back(v.get<int>());
  return Perm::from_images(std::move(img));
}

Int factorial(int b) {
  Int out = 1;
  for (int i = 2; i <= b; ++i) out *= i;
  return out;
}

json sym_section(int b, const std::vector<RepElement>& gens) {
  PermGroup dihedral({canonical_r(b, 1), canonical_r(b, 2)}, b);
  std::vector<Perm> images;
  for (const auto& g : gens) images.push_back(g.perm);
  PermGroup generated(images, b);
  json out;
  out["order_r1r2"] = to_ll(dihedral.order());
  out["order_images"] = to_ll(generated.order());
  out["full"] = generated.order() == factorial(b);
  return out;
}

json relations_to_json(const CheckReport& report) {
  json out = json::array();
  for (const auto& e : report.entries)
    out.push_back({{"relation", e.relation},
                   {"instance", e.instance},
                   {"holds", e.holds},
                   {"mandatory", e.mandatory}});
  return out;
}

}  // namespace

TheoremBranch select_branch(int g, int b) {
  if (g < 3)
    throw McgError("not-generated-by-involutions",
                   "mapping class groups of genus below 3 are not generated "
                   "by involutions");
  if (b < 0) throw invalid_argument_error("negative puncture count");
  TheoremBranch br;
  if (g > 7 || (g == 7 && b % 2 == 0)) {
    br.count = 4;
    br.case_label = "a";
    br.condition = "g>7 or g=7 with even punctures";
    br.involution_names = {"rho1", "rho2", "rho3", "J"};
  } else if (g > 5 || (g == 5 && b % 2 == 0)) {
    br.count = 5;
    br.case_label = "b";
    br.condition = "g>5 or g=5 with even punctures";
    br.involution_names = {"rho1", "rho2", "rho3", "I12", "I13"};
  } else if (g > 3 || (g == 3 && b % 2 == 0)) {
    br.count = 6;
    br.case_label = "c";
    br.condition = "g>3 or g=3 with even punctures";
    br.involution_names = {"rho1", "rho2", "rho3", "I12", "I13", "I"};
  } else {
    br.count = 9;
    br.case_label = "d";
    br.condition = "g=3 with odd punctures";
  }
  return br;
}

json certify(int g, int b, const CertifyOptions& opts) {
  TheoremBranch br = select_branch(g, b);
  SurfaceParams p = make_params(g, b);
  HomologyLattice lat = make_lattice(g, b);
  CurveRegistry reg = build_registry(p);

  json cert;
  cert["params"] = {{"g", g}, {"b", b}};
  cert["branch"] = {{"count", br.count},
                    {"case", br.case_label},
                    {"condition", br.condition}};
  cert["scope"] = kScopeBanner;

  CheckReport report = check_relations(p);
  bool relations_ok = report.all_mandatory_hold();

  if (br.count == 9) {
    std::vector<RepElement> gens = {rho1(p), rho2(p), rho3(reg)};
    json jg = json::array();
    for (const auto& e : gens)
      jg.push_back({{"name", e.name},
                    {"matrix", matrix_to_json(e.matrix)},
                    {"perm", perm_to_json(e.perm)}});
    cert["generators"] = std::move(jg);
    cert["relations"] = relations_to_json(report);
    cert["coverage"] = json::array();
    cert["delta"] = json::array();
    cert["sym"] = sym_section(b, gens);
    cert["quotient"] = {{"p", 2}, {"skipped", "sketch-only branch"}};
    cert["verified"] = false;
    cert["reason"] = "sketch-only branch";
    return cert;
  }

  WordPlan plan = build_word_plan(reg, br.count);

  for (const auto& e : plan.gens.gens) {
    if (e.name == "rho1" || e.name == "rho2" || e.name == "rho3") continue;
    report.entries.push_back({"involution", e.name, is_involution(e), true});
    report.entries.push_back({"symplectic", e.name, is_symplectic(lat, e.matrix), true});
    report.entries.push_back(
        {"compatibility", e.name, satisfies_compatibility(lat, e), true});
  }
  relations_ok = report.all_mandatory_hold();
  cert["relations"] = relations_to_json(report);

  json jg = json::array();
  for (const auto& e : plan.gens.gens)
    jg.push_back({{"name", e.name},
                  {"matrix", matrix_to_json(e.matrix)},
                  {"perm", perm_to_json(e.perm)}});
  cert["generators"] = std::move(jg);

  bool coverage_ok = true;
  json jc = json::array();
  for (const auto& name : reg.coverage_targets()) {
    const Word& w = plan.coverage.at(name);
    RepElement val = evaluate(lat, plan.gens, w);
    bool ok = val.perm.is_identity() &&
              val.matrix == transvection(lat, reg.by_name(name));
    coverage_ok = coverage_ok && ok;
    jc.push_back({{"curve", name}, {"word", w}, {"ok", ok}});
  }
  cert["coverage"] = std::move(jc);

  cert["sym"] = sym_section(b, plan.gens.gens);
  bool sym_ok = cert["sym"]["full"].get<bool>();

  bool quotient_ok = true;
  if (!opts.run_quotient) {
    cert["quotient"] = {{"p", 2}, {"skipped", "disabled"}};
  } else if (g > 3) {
    cert["quotient"] = {{"p", 2}, {"skipped", "size"}};
  } else {
    std::vector<ModPMat> qgens;
    for (const auto& e : plan.gens.gens)
      qgens.push_back(reduce_handle_block(lat, e.matrix, 2));
    ClosureResult res = enumerate_generated(qgens, opts.quotient_cap);
    if (res.capped) {
      cert["quotient"] = {{"p", 2}, {"skipped", "cap-exceeded"}};
    } else {
      Int expected = sp_order(g, 2);
      quotient_ok = res.order == expected;
      cert["quotient"] = {{"p", 2},
                          {"order", to_ll(res.order)},
                          {"expected", to_ll(expected)},
                          {"ok", quotient_ok}};
    }
  }

  json jd = json::array();
  if (b > 0) {
    std::vector<RepElement> targets;
    for (int j = 0; j < b; ++j) targets.push_back(twist(lat, reg.delta(j)));
    auto words = bfs_search(lat, targets, plan.gens, opts.search);
    for (int j = 0; j < b; ++j) {
      json entry = {{"j", j}};
      if (words[static_cast<std::size_t>(j)]) {
        entry["word"] = *words[static_cast<std::size_t>(j)];
      } else {
        entry["word"] = nullptr;
        entry["note"] = "not certified at representation level";
      }
      jd.push_back(std::move(entry));
    }
  }
  cert["delta"] = std::move(jd);

  bool verified = relations_ok && coverage_ok && sym_ok && quotient_ok;
  cert["verified"] = verified;
  if (!verified) {
    std::string reason;
    if (!relations_ok) reason = "relation check failed";
    else if (!coverage_ok) reason = "coverage word failed";
    else if (!sym_ok) reason = "puncture action does not generate the symmetric group";
    else reason = "finite quotient order mismatch";
    cert["reason"] = reason;
  } else {
    cert["reason"] = "";
  }
  return cert;
}

bool replay(const json& cert) {
  int g = cert.at("params").at("g").get<int>();
  int b = cert.at("params").at("b").get<int>();
  SurfaceParams p = make_params(g, b);
  HomologyLattice lat = make_lattice(g, b);
  CurveRegistry reg = build_registry(p);

  GeneratorSet gens;
  for (const auto& e : cert.at("generators")) {
    RepElement el{matrix_from_json(e.at("matrix")), perm_from_json(e.at("perm")),
                  e.at("name").get<std::string>()};
    if (!is_involution(el)) return false;
    gens.gens.push_back(std::move(el));
  }

  for (const auto& e : cert.at("coverage")) {
    Word w = e.at("word").get<Word>();
    RepElement val = evaluate(lat, gens, w);
    bool ok = val.perm.is_identity() &&
              val.matrix == transvection(lat, reg.by_name(e.at("curve").get<std::string>()));
    if (ok != e.at("ok").get<bool>()) return false;
  }

  for (const auto& e : cert.at("delta")) {
    if (e.at("word").is_null()) continue;
    Word w = e.at("word").get<Word>();
    RepElement val = evaluate(lat, gens, w);
    int j = e.at("j").get<int>();
    if (!rep_equal(val, twist(lat, reg.delta(j)))) return false;
  }
  return true;
}

std::string certificate_to_string(const json& cert) { return cert.dump(2) + "\n"; }

}  // namespace mcgcert
