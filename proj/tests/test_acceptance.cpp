#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "conint/verify.hpp"

using namespace conint;

// end-to-end gate: one line per criterion, tolerances pinned in the suite
TEST_CASE("acceptance criteria") {
    const auto records = run_acceptance("all");
    REQUIRE(records.size() == 11);
    int k = 0;
    for (const CheckRecord& r : records) {
        ++k;
        std::printf("criterion %2d %-24s %s  (got %s, tol %s)\n", k, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.got.c_str(), fmt(r.tolerance).c_str());
        std::fflush(stdout);
        CAPTURE(r.name);
        CAPTURE(r.note);
        CHECK(r.pass);
    }
}

TEST_CASE("suite selection") {
    CHECK(run_acceptance("identities").size() == 2);
    CHECK(run_acceptance("moments").size() == 2);
    CHECK(run_acceptance("action").size() == 1);
    CHECK(run_acceptance("integrals").size() == 6);
    CHECK_THROWS_AS(run_acceptance("bogus"), std::invalid_argument);
}
