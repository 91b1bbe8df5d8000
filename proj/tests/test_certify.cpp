#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "mcgcert/certify.hpp"
#include "mcgcert/cli.hpp"
#include "mcgcert/errors.hpp"

using namespace mcgcert;
using nlohmann::json;

TEST_CASE("branch selection over the parameter grid") {
  struct Point {
    int g, b, count;
  };
  const Point grid[] = {
      {8, 0, 4}, {8, 1, 4}, {7, 0, 4}, {7, 1, 5}, {7, 2, 4},
      {6, 0, 5}, {6, 1, 5}, {5, 0, 5}, {5, 1, 6}, {5, 2, 5},
      {4, 0, 6}, {4, 1, 6}, {3, 0, 6}, {3, 1, 9}, {3, 2, 6},
      {3, 3, 9}, {10, 5, 4}, {9, 2, 4}, {6, 4, 5}, {4, 6, 6},
  };
  for (const auto& pt : grid) {
    CAPTURE(pt.g);
    CAPTURE(pt.b);
    TheoremBranch br = select_branch(pt.g, pt.b);
    CHECK(br.count == pt.count);
    CHECK(static_cast<int>(br.involution_names.size()) ==
          (pt.count == 9 ? 0 : pt.count));
  }
  CHECK(select_branch(8, 0).case_label == "a");
  CHECK(select_branch(6, 0).case_label == "b");
  CHECK(select_branch(4, 0).case_label == "c");
  CHECK(select_branch(3, 1).case_label == "d");
}

TEST_CASE("no involution generation below genus 3") {
  for (int g : {1, 2}) {
    try {
      select_branch(g, 0);
      FAIL("expected a refusal at genus " << g);
    } catch (const McgError& e) {
      CHECK(e.code() == "not-generated-by-involutions");
    }
  }
  CHECK_THROWS_AS(select_branch(3, -1), McgError);
}

TEST_CASE("certificate structure and replay at genus 4 with one puncture") {
  json cert = certify(4, 1);
  CHECK(cert.at("verified").get<bool>());
  CHECK(cert.at("reason").get<std::string>().empty());
  CHECK(cert.at("branch").at("count").get<int>() == 6);
  CHECK(cert.at("branch").at("case").get<std::string>() == "c");
  CHECK(cert.at("params").at("g").get<int>() == 4);
  CHECK(cert.at("generators").size() == 6);
  for (const auto& e : cert.at("generators")) {
    CHECK(e.contains("name"));
    CHECK(e.contains("matrix"));
    CHECK(e.contains("perm"));
  }
  CHECK(cert.at("sym").at("full").get<bool>());
  CHECK(cert.at("quotient").at("skipped").get<std::string>() == "size");
  CHECK(cert.at("coverage").size() == 11);  // 3g-1 targets at genus 4
  for (const auto& e : cert.at("coverage")) CHECK(e.at("ok").get<bool>());
  CHECK(!cert.at("scope").get<std::string>().empty());

  CHECK(replay(cert));

  json tampered = cert;
  tampered["coverage"][0]["word"] = json::array({"rho1"});
  CHECK_FALSE(replay(tampered));
}

TEST_CASE("certification is deterministic") {
  json a = certify(4, 0);
  json b = certify(4, 0);
  CHECK(certificate_to_string(a) == certificate_to_string(b));
  CHECK(certificate_to_string(a).back() == '\n');
}

TEST_CASE("quotient can be disabled and is reported as such") {
  CertifyOptions opts;
  opts.run_quotient = false;
  json cert = certify(3, 0, opts);
  CHECK(cert.at("verified").get<bool>());
  CHECK(cert.at("quotient").at("skipped").get<std::string>() == "disabled");
}

TEST_CASE("sketch-only branch is never reported verified") {
  json cert = certify(3, 1);
  CHECK_FALSE(cert.at("verified").get<bool>());
  CHECK(cert.at("reason").get<std::string>() == "sketch-only branch");
  CHECK(cert.at("branch").at("count").get<int>() == 9);
  CHECK(cert.at("generators").size() == 3);
  CHECK(cert.at("coverage").empty());
  CHECK(cert.at("quotient").contains("skipped"));
  // the relation checks themselves still run and pass
  for (const auto& e : cert.at("relations"))
    if (e.at("mandatory").get<bool>()) CHECK(e.at("holds").get<bool>());
}

namespace {

int cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"mcgcert"};
  argv.insert(argv.end(), args.begin(), args.end());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("command line exit codes") {
  CHECK(cli({"relations", "--genus", "3", "--punctures", "2"}) == 0);
  CHECK(cli({"lantern", "--genus", "4"}) == 0);
  CHECK(cli({"symgroup", "--punctures", "5"}) == 0);
  // the global output flag works in either position
  CHECK(cli({"symgroup", "--punctures", "5", "--json"}) == 0);
  CHECK(cli({"--json", "lantern", "--genus", "3"}) == 0);
  CHECK(cli({"dump-curves", "--genus", "3", "--punctures", "1"}) == 0);
  // sketch-only: failure unless explicitly tolerated
  CHECK(cli({"certify", "--genus", "3", "--punctures", "5"}) == 1);
  CHECK(cli({"certify", "--genus", "3", "--punctures", "5", "--allow-sketch"}) == 0);
  // usage errors
  CHECK(cli({"certify", "--genus", "2"}) == 2);
  CHECK(cli({"quotient", "--genus", "2", "--prime", "7"}) == 2);
  CHECK(cli({"no-such-command"}) == 2);
  CHECK(cli({"relations"}) == 2);  // --genus is required
}
