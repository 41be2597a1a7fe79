#include <doctest.h>

#include "ramastir/interval.hpp"

using namespace ramastir::numeric;
using ramastir::algebra::Rat;

namespace {

Rat rat_eps(long exp10) { return Rat(1) / Rat(10).pow(exp10); }

}  // namespace

TEST_CASE("interval arithmetic basics") {
    RatInterval a(Rat(1), Rat(2));
    RatInterval b(Rat(-1), Rat(3));
    CHECK((a + b).lo == Rat(0));
    CHECK((a + b).hi == Rat(5));
    CHECK((a * b).lo == Rat(-2));
    CHECK((a * b).hi == Rat(6));
    CHECK(abs(RatInterval(Rat(-3), Rat(2))).hi == Rat(3));
    CHECK_THROWS_AS(a / b, std::domain_error);
    CHECK_THROWS_AS(RatInterval(Rat(2), Rat(1)), std::domain_error);
    CHECK((a / RatInterval(Rat(2))).hi == Rat(1));
}

TEST_CASE("exp_nat encloses known digits") {
    RatInterval e1 = exp_nat(1, rat_eps(6));
    CHECK(RatInterval(Rat(2718281, 1000000), Rat(2718283, 1000000)).contains(e1));
    CHECK(e1.width() <= rat_eps(6));
    CHECK(exp_nat(0, rat_eps(3)).lo == Rat(1));
    CHECK(exp_nat(0, rat_eps(3)).hi == Rat(1));
    // independent route: e^5 through the fifth interval power of e
    RatInterval e = exp_nat(1, rat_eps(35));
    RatInterval e5_indirect = e * e * e * e * e;
    RatInterval e5 = exp_nat(5, rat_eps(30));
    CHECK(e5.width() <= rat_eps(30));
    CHECK(e5.lo <= e5_indirect.hi);
    CHECK(e5_indirect.lo <= e5.hi);  // the two enclosures overlap
}

TEST_CASE("pi and sqrt enclosures") {
    RatInterval pi = pi_interval(rat_eps(8));
    CHECK(RatInterval(Rat(314159265, 100000000), Rat(314159266, 100000000)).contains(pi));
    CHECK(pi.width() <= rat_eps(8));
    RatInterval r2 = sqrt_interval(Rat(2), rat_eps(8));
    CHECK(RatInterval(Rat(141421356, 100000000), Rat(141421357, 100000000)).contains(r2));
    CHECK(r2.width() <= rat_eps(8));
    // perfect squares come back exact
    RatInterval exact = sqrt_interval(Rat(9, 4), rat_eps(10));
    CHECK(exact.lo == Rat(3, 2));
    CHECK(exact.hi == Rat(3, 2));
    CHECK_THROWS_AS(sqrt_interval(Rat(-1), rat_eps(3)), std::domain_error);
}

TEST_CASE("theta_1 enclosure") {
    // theta_1 = e/2 - 1
    RatInterval t1 = theta_exact(1, rat_eps(12));
    RatInterval e = exp_nat(1, rat_eps(14));
    RatInterval expect = e * RatInterval(Rat(1, 2)) - RatInterval(Rat(1));
    CHECK(t1.lo <= expect.hi);
    CHECK(expect.lo <= t1.hi);
    CHECK(RatInterval(Rat(359140, 1000000), Rat(359141, 1000000)).contains(t1));
    CHECK(t1.width() <= rat_eps(12));
}

TEST_CASE("theta enclosures drift toward 1/3") {
    Rat third(1, 3);
    Rat prev_gap(1);
    for (long n = 10; n <= 40; n += 10) {
        RatInterval t = theta_exact(n, rat_eps(30));
        Rat gap = (t.lo - third).abs();
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("enclosure soundness: smaller eps nests inside") {
    for (long scale = 0; scale < 3; ++scale) {
        Rat wide = rat_eps(10 + 10 * scale);
        Rat tight = wide / Rat(10);
        CHECK(exp_nat(7, wide).contains(exp_nat(7, tight)));
        CHECK(pi_interval(wide).contains(pi_interval(tight)));
        CHECK(sqrt_interval(Rat(5), wide).contains(sqrt_interval(Rat(5), tight)));
        CHECK(theta_exact(9, wide).contains(theta_exact(9, tight)));
    }
}

TEST_CASE("stirling ratio at n=20 matches the series prediction coarsely") {
    RatInterval ratio = stirling_ratio(20, rat_eps(30));
    CHECK(ratio.width() <= rat_eps(30));
    // gamma_0 + gamma_1/20 = 1.0041666..; the ratio sits within 1e-5 of it
    CHECK(ratio.lo > Rat(10041, 10000));
    CHECK(ratio.hi < Rat(10042, 10000));
}

TEST_CASE("validate_expansion verdicts") {
    auto pass = validate_expansion(ExpansionTarget::Stirling, 20, 4, rat_eps(40));
    CHECK(pass.verdict == ExpansionVerdict::Pass);
    CHECK(pass.error.width() <= rat_eps(30));
    auto theta_pass = validate_expansion(ExpansionTarget::Theta, 20, 3, rat_eps(40));
    CHECK(theta_pass.verdict == ExpansionVerdict::Pass);
    // far outside the asymptotic regime the first-omitted-term heuristic breaks
    auto fail = validate_expansion(ExpansionTarget::Stirling, 2, 8, rat_eps(40));
    CHECK(fail.verdict == ExpansionVerdict::Fail);
    CHECK_THROWS_AS(validate_expansion(ExpansionTarget::Theta, 0, 3, rat_eps(10)), std::domain_error);
    CHECK_THROWS_AS(validate_expansion(ExpansionTarget::Theta, 10, 0, rat_eps(10)), std::domain_error);
}

TEST_CASE("monotone improvement in the term count") {
    for (long n : {10L, 20L, 40L}) {
        Rat prev_stirling(1000000);
        Rat prev_theta(1000000);
        for (int terms = 1; terms <= 5; ++terms) {
            auto s = validate_expansion(ExpansionTarget::Stirling, n, terms, rat_eps(40));
            auto t = validate_expansion(ExpansionTarget::Theta, n, terms, rat_eps(40));
            CHECK(s.verdict == ExpansionVerdict::Pass);
            CHECK(t.verdict == ExpansionVerdict::Pass);
            CHECK(s.error.hi < prev_stirling);
            CHECK(t.error.hi < prev_theta);
            prev_stirling = s.error.hi;
            prev_theta = t.error.hi;
        }
    }
}

TEST_CASE("eps strings parse") {
    CHECK(parse_eps("1e-40") == Rat(1) / Rat(10).pow(40));
    CHECK(parse_eps("25e-3") == Rat(1, 40));
    CHECK(parse_eps("3/7") == Rat(3, 7));
    CHECK(!parse_eps("abc"));
    CHECK(!parse_eps("1e"));
}
