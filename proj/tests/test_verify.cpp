#include "demflag/verify.hpp"
#include "doctest.h"

using namespace demflag;

TEST_SUITE("verify") {
  TEST_CASE("bounds scaling") {
    Bounds a = Bounds::acceptance(), s = Bounds::scaled(20);
    CHECK(s.cf12_total == a.cf12_total);
    CHECK(s.base_m == a.base_m);
    CHECK(s.rec_x == a.rec_x);
    Bounds small = Bounds::scaled(1);
    CHECK(small.cf12_total == 2);
    CHECK(small.base_m == 1);
    CHECK(Bounds::scaled(40).agree_s == 36);
    CHECK_THROWS_AS(Bounds::scaled(0), std::invalid_argument);
  }

  TEST_CASE("suites") {
    CHECK(acceptance_criteria().size() == 15);
    for (auto& name : suite_names()) CHECK_FALSE(suite_checks(name).empty());
    CHECK_THROWS_AS(suite_checks("bogus"), std::invalid_argument);
    for (auto& c : suite_checks("all")) {
      CheckResult r = run_check(c, Bounds::scaled(6));
      CHECK_MESSAGE(r.passed, c.name << ": " << r.counterexample);
      CHECK(r.cases > 0);
    }
  }

  TEST_CASE("a failing check reports its counterexample") {
    NamedCheck broken{"broken", [](const Bounds&) -> CheckResult { throw std::runtime_error("boom"); }};
    CheckResult r = run_check(broken, Bounds::acceptance());
    CHECK_FALSE(r.passed);
    CHECK(r.counterexample.find("boom") != std::string::npos);
  }
}
