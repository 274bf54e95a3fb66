#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "patlab/verify.hpp"

using namespace patlab;

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("problem names round-trip") {
    for (Problem p : {Problem::confrule, Problem::hui, Problem::maxclosed})
        CHECK(problem_from_name(problem_name(p)) == p);
    CHECK(!problem_from_name("nonsense").has_value());
}

TEST_CASE("verification runs agree on all three problems") {
    VerifyParams params;
    params.trials = 15;

    params.problem = Problem::confrule;
    params.vars = 4;
    params.clauses_lo = 4;
    params.clauses_hi = 8;
    params.seed = 1;
    const auto confrule = run_verification(params);
    CHECK(confrule.passed());
    CHECK(confrule.agreements + confrule.disagreements.size() == confrule.trials);

    params.problem = Problem::hui;
    params.vars = 7;
    params.clauses_lo = 2;
    params.clauses_hi = 5;
    const auto hui = run_verification(params);
    CHECK(hui.passed());

    params.problem = Problem::maxclosed;
    params.vars = 3;
    params.clauses_lo = 2;
    params.clauses_hi = 5;
    const auto maxclosed = run_verification(params);
    CHECK(maxclosed.passed());
}

TEST_CASE("reports are byte-identical for identical seeds") {
    VerifyParams params;
    params.problem = Problem::maxclosed;
    params.vars = 3;
    params.clauses_lo = 2;
    params.clauses_hi = 4;
    params.trials = 10;
    params.seed = 99;
    const std::string a = report_json(run_verification(params));
    const std::string b = report_json(run_verification(params));
    CHECK(a == b);
    params.seed = 100;
    CHECK(report_json(run_verification(params)) != a);
}

TEST_CASE("caps gate oversized runs unless forced") {
    VerifyParams params;
    params.problem = Problem::confrule;
    params.vars = 9;  // above the documented cap of 5
    params.clauses_lo = params.clauses_hi = 3;
    params.trials = 1;
    CHECK_THROWS_AS(run_verification(params), Error);
    params.force = true;
    CHECK(run_verification(params).passed());

    params = VerifyParams{};
    params.clauses_lo = 3;
    params.clauses_hi = 2;  // empty range
    CHECK_THROWS_AS(run_verification(params), Error);
}
