#include <doctest.h>

#include <sstream>

#include "twosym/suites.hpp"

using namespace twosym;

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 8);
  CHECK(default_bound("laws") == 13);
  CHECK(default_bound("sigma-constructive") == 11);
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("suites pass at small bounds") {
  for (const auto& name : suite_names()) {
    INFO(name);
    const auto report = run_suite(name, 7);
    CHECK(report.passed());
    CHECK(report.checked > 0);
    std::ostringstream out;
    write_report(out, report);
    CHECK(out.str().rfind("suite " + name + " bound=", 0) == 0);
    CHECK(out.str().find("PASS") != std::string::npos);
  }
}
