#include <doctest.h>

#include <thread>

#include "ramastir/verifier.hpp"

using namespace ramastir::verifier;
using ramastir::algebra::Rat;

TEST_CASE("registry is id-sorted and ids are unique") {
    const auto& checks = registry();
    REQUIRE(!checks.empty());
    for (size_t i = 1; i < checks.size(); ++i) CHECK(checks[i - 1].id < checks[i].id);
}

TEST_CASE("individual checks pass at their documented ranges") {
    CHECK(run_check("thm-1.1", 25).passed);
    CHECK(run_check("eq-1.7", 40).passed);
    CHECK(run_check("eq-2.9", 25).passed);
    CHECK(run_check("eq-1.7", 0).passed);
    CHECK(run_check("thm-1.1", 0).passed);
}

TEST_CASE("unknown ids are rejected") {
    CHECK_THROWS_AS(run_check("bogus-id"), std::invalid_argument);
    CHECK(!has_check("bogus-id"));
    CHECK(has_check("prop-4.3"));
}

TEST_CASE("run_all at a small range passes and is deterministic") {
    auto first = run_all(6);
    auto second = run_all(6);
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].id == second[i].id);
        CHECK(first[i].passed);
        CHECK(second[i].passed);
    }
}

TEST_CASE("run_all passes at the base indices") {
    for (const auto& rep : run_all(0)) CHECK(rep.passed);
}

TEST_CASE("checks can run concurrently") {
    std::vector<std::string> ids = {"eq-2.9", "eq-5.11", "prop-7.1", "eq-1.7", "thm-1.1", "eq-9.16"};
    std::vector<CheckReport> reports(ids.size());
    std::vector<std::thread> threads;
    for (size_t i = 0; i < ids.size(); ++i)
        threads.emplace_back([&, i] { reports[i] = run_check(ids[i], 12); });
    for (auto& t : threads) t.join();
    for (size_t i = 0; i < ids.size(); ++i) {
        CHECK(reports[i].id == ids[i]);
        CHECK(reports[i].passed);
    }
}

TEST_CASE("corrupting gamma_3 trips the registry with counterexamples") {
    SequencePool corrupted;
    corrupted.gamma_override[3] = ramastir::sequences::gamma_r(3) + Rat(1);
    auto thm = run_check("thm-1.1", 10, corrupted);
    CHECK(!thm.passed);
    REQUIRE(thm.failure);
    CHECK(thm.failure->index <= 3);
    CHECK(!thm.failure->lhs.empty());
    CHECK(!thm.failure->rhs.empty());

    int failures = 0;
    for (const auto& rep : run_all(10, corrupted))
        if (!rep.passed) ++failures;
    CHECK(failures >= 2);
}

TEST_CASE("each single-gamma corruption up to index 5 breaks at least two checks") {
    for (int r = 0; r <= 5; ++r) {
        SequencePool corrupted;
        corrupted.gamma_override[r] = ramastir::sequences::gamma_r(r) + Rat(1);
        int failures = 0;
        for (const auto& rep : run_all(8, corrupted))
            if (!rep.passed) ++failures;
        CHECK(failures >= 2);
    }
}

TEST_CASE("reports carry exact values on failure") {
    SequencePool corrupted;
    corrupted.gamma_override[0] = Rat(2);  // gamma_0 must be 1
    auto rep = run_check("eq-2.9", 5, corrupted);
    REQUIRE(!rep.passed);
    CHECK(rep.failure->index == 0);
    CHECK(rep.failure->lhs == "4");  // (gamma_0)^2
    CHECK(rep.failure->rhs == "1");
}
