#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "uhecke/verify.hpp"

using namespace uhecke;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 6);
  CHECK(names[0] == "hecke-core");
  CHECK(names[5] == "weil-finite");
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteOptions{}),
                  std::invalid_argument);
}

TEST_CASE("all suites pass at reduced bounds") {
  SuiteOptions opts;
  opts.rmax = 2;
  opts.p = 3;
  for (const std::string& name : suite_names()) {
    Report rep = run_suite(name, opts);
    INFO(name);
    CHECK(!rep.checks.empty());
    for (const auto& c : rep.checks) {
      INFO(c.id << ": " << c.lhs << " vs " << c.rhs << " " << c.notes);
      CHECK(c.pass);
    }
    CHECK(rep.all_pass());
    CHECK(rep.passed() == static_cast<int>(rep.checks.size()));
  }
}

TEST_CASE("suite reports are deterministic") {
  SuiteOptions opts;
  opts.rmax = 1;
  Report a = run_suite("zeta-identities", opts);
  Report b = run_suite("zeta-identities", opts);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].lhs == b.checks[i].lhs);
    CHECK(a.checks[i].pass == b.checks[i].pass);
  }
}

TEST_CASE("zeta suite carries the denominator discrepancy flag") {
  SuiteOptions opts;
  opts.rmax = 1;
  Report rep = run_suite("zeta-identities", opts);
  bool found = false;
  for (const auto& c : rep.checks) {
    if (c.id != "zeta-r1-half-value") continue;
    found = true;
    CHECK(c.pass);
    CHECK(c.notes.find("1 - q^{-1-2s}") != std::string::npos);
    CHECK(c.notes.find("1 - q^{-2-2s}") != std::string::npos);
    CHECK(c.notes.find("normative") != std::string::npos);
  }
  CHECK(found);
}
