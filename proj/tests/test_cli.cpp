#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include <json.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs dolkit from the fixture directory; stderr is folded into stdout.
Run dolkit(const std::string& args) {
  const std::string cmd = "cd '" + std::string(DOL_FIXTURE_DIR) + "' && '" + DOLKIT_PATH + "' " + args + " 2>&1";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli: parse succeeds on fixtures") {
  const auto r = dolkit("parse owltime_le.dol relationships.dol prop_modules.dol el_fol.dol");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli: empty document is a syntax error with position") {
  const auto r = dolkit("parse empty.dol");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("empty.dol:1:1: SyntaxError") != std::string::npos);
}

TEST_CASE("cli: unresolved reference without a store") {
  const auto r = dolkit("verify owltime_le.dol");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("owltime_le.dol:11:3: UnresolvedReference") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(dolkit("").exit_code == 2);
  CHECK(dolkit("translate owltime_le.dol").exit_code == 2);
  CHECK(dolkit("models linear_ordering.clif --bound 0").exit_code == 2);
  CHECK(dolkit("verify missing.dol").exit_code == 2);
}

TEST_CASE("cli: model counts match brute force") {
  const auto r = dolkit("models colore/orderings/partial_ordering.clif --bound 3 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["sizes"].size() == 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(j["sizes"][n - 1]["domain_size"] == n);
    CHECK(j["sizes"][n - 1]["count"] == oracle::count_orders(n, false));
  }
  const auto text = dolkit("models colore/orderings/linear_ordering.clif --bound 3");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("size 3: " + std::to_string(oracle::count_orders(3, true))) != std::string::npos);
}

TEST_CASE("cli: verify JSON for the owltime interpretation") {
  const auto r = dolkit("verify owltime_le.dol --store fixtures.store --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["reports"].size() == 1);
  const auto& rep = j["reports"][0];
  CHECK(rep["link"] == "i");
  CHECK(rep["overall"]["status"] == "VerifiedUpToBound");
  CHECK(rep["overall"]["bound"] == 3);
  CHECK(rep["obligations"].size() == 4);
}

TEST_CASE("cli: a refuted link exits with 1 and prints the counterexample") {
  const auto r = dolkit("verify relationships.dol --store fixtures.store --link into_partial");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("Refuted") != std::string::npos);
  CHECK(r.out.find("leq = {(0,0), (1,1)}") != std::string::npos);
  CHECK(dolkit("verify relationships.dol --store fixtures.store --link no_such_link").exit_code == 2);
}

TEST_CASE("cli: flatten and translate") {
  const auto f = dolkit("flatten owltime_le.dol --store fixtures.store --ontology ord:linear_ordering");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("4 axioms") != std::string::npos);
  const auto t = dolkit("translate el_fol.dol --ontology :time_el --target-logic CLSub");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("CLSub") != std::string::npos);
  CHECK(dolkit("translate el_fol.dol --ontology :asymmetry --target-logic EL").exit_code == 2);
  CHECK(dolkit("translate el_fol.dol --ontology :asymmetry --target-logic Modal").exit_code == 2);
}
