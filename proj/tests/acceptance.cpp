// Acceptance suite: every criterion prints one PASS/FAIL line with its
// runtime and the binary exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ramastir/interval.hpp"
#include "ramastir/sequences.hpp"
#include "ramastir/triangles.hpp"
#include "ramastir/verifier.hpp"

using ramastir::algebra::Rat;
using ramastir::algebra::Sqrt2Rat;
namespace seq = ramastir::sequences;
namespace tri = ramastir::triangles;
namespace num = ramastir::numeric;
namespace ver = ramastir::verifier;

namespace {

int g_failures = 0;

void criterion(const std::string& label, double budget_seconds, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s %s (%.2fs, budget %.0fs)%s%s\n", ok ? "PASS" : "FAIL", label.c_str(), elapsed,
                budget_seconds, detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

bool golden_coefficients(std::string& detail) {
    bool ok = true;
    const std::pair<int, Rat> gammas[] = {{0, Rat(1)}, {1, Rat(1, 12)}, {2, Rat(1, 288)}, {3, Rat(-139, 51840)}};
    for (auto& [r, v] : gammas) ok &= expect(seq::gamma_r(r) == v, "gamma_" + std::to_string(r), detail);
    const std::pair<int, Rat> rhos[] = {{0, Rat(1, 3)}, {1, Rat(4, 135)}, {2, Rat(-8, 2835)}, {3, Rat(-16, 8505)}};
    for (auto& [r, v] : rhos) ok &= expect(seq::rho_r(r) == v, "rho_" + std::to_string(r), detail);
    const std::pair<int, Rat> psis[] = {{0, Rat(-1, 3)}, {1, Rat(4, 135)}, {2, Rat(8, 2835)}, {3, Rat(-16, 8505)}};
    for (auto& [r, v] : psis) ok &= expect(seq::psi_r(r) == v, "psi_" + std::to_string(r), detail);
    return ok;
}

bool main_theorem(std::string& detail) {
    for (int r = 0; r <= 25; ++r) {
        // independent pipelines: triangular solve vs the direct coefficient formula
        Rat psi = seq::psi_r(r);
        Rat rho = seq::rho_r(r, seq::RhoMethod::DeMoivreBinomial);
        Rat expected = (r % 2 == 0 ? Rat(-1) : Rat(1)) * rho;
        if (!expect(psi == expected, "r=" + std::to_string(r), detail)) return false;
    }
    return true;
}

bool eulerian_bernoulli_identity(std::string& detail) {
    auto rep = ver::run_check("eq-1.7", 40);
    return expect(rep.passed, "first failure index " + (rep.failure ? std::to_string(rep.failure->index) : ""),
                  detail);
}

template <typename Method, typename Eval>
bool methods_agree(const std::string& name, std::span<const Method> methods, int max_index, Eval eval,
                   std::string& detail) {
    for (int i = 0; i <= max_index; ++i) {
        auto reference = eval(i, methods[0]);
        for (size_t m = 1; m < methods.size(); ++m)
            if (!expect(eval(i, methods[m]) == reference,
                        name + " index " + std::to_string(i) + " method " + seq::method_name(methods[m]),
                        detail))
                return false;
    }
    return true;
}

bool cross_method_audit(std::string& detail) {
    bool ok = true;
    ok &= methods_agree<seq::GammaMethod>("gamma", seq::gamma_methods(), 25,
                                          [](int i, auto m) { return seq::gamma_r(i, m); }, detail);
    ok &= methods_agree<seq::RhoMethod>("rho_hat", seq::rho_methods(), 25,
                                        [](int i, auto m) { return seq::rho_hat_r(i, m); }, detail);
    ok &= methods_agree<seq::TauMethod>("tau", seq::tau_methods(), 25,
                                        [](int i, auto m) { return seq::tau_r(i, m); }, detail);
    ok &= methods_agree<seq::AlphaMethod>("alpha", seq::alpha_methods(), 25,
                                          [](int i, auto m) { return seq::alpha(i, m); }, detail);
    ok &= methods_agree<seq::AlphaStarMethod>("alpha_star", seq::alpha_star_methods(), 25,
                                              [](int i, auto m) { return seq::alpha_star(i, m); }, detail);
    ok &= methods_agree<seq::BetaMethod>("beta", seq::beta_methods(), 25,
                                         [](int i, auto m) { return seq::beta(i, m); }, detail);
    ok &= methods_agree<seq::BetaMethod>("beta_star", seq::beta_methods(), 25,
                                         [](int i, auto m) { return seq::beta_star(i, m); }, detail);
    ok &= methods_agree<seq::CMethod>("c", seq::c_methods(), 50, [](int i, auto m) { return seq::c_n(i, m); },
                                      detail);
    return ok;
}

bool figure_reproduction(std::string& detail) {
    bool ok = true;
    auto row = [&](auto&& fn, long n, std::vector<std::pair<long, Rat>> expected, const std::string& name) {
        for (auto& [k, v] : expected)
            ok &= expect(fn(n, k) == v, name + "(" + std::to_string(n) + "," + std::to_string(k) + ")", detail);
    };
    // plain Stirling cycle rows up to n = 5
    row(tri::stirling_cycle, 4, {{1, Rat(6)}, {2, Rat(11)}, {3, Rat(6)}, {4, Rat(1)}}, "stirling");
    row(tri::stirling_cycle, 5, {{1, Rat(24)}, {2, Rat(50)}, {3, Rat(35)}, {4, Rat(10)}, {5, Rat(1)}},
        "stirling");
    // starred Stirling rows
    row(tri::stirling_cycle_star, 2, {{2, Rat(1, 2)}}, "stirling*");
    row(tri::stirling_cycle_star, 3, {{2, Rat(1)}, {3, Rat(2, 3)}}, "stirling*");
    row(tri::stirling_cycle_star, 4, {{2, Rat(3)}, {3, Rat(3)}, {4, Rat(3, 4)}}, "stirling*");
    row(tri::stirling_cycle_star, 5, {{2, Rat(12)}, {3, Rat(15)}, {4, Rat(6)}, {5, Rat(4, 5)}}, "stirling*");
    // second-order Eulerian rows
    row(tri::eulerian2, 4, {{0, Rat(1)}, {1, Rat(22)}, {2, Rat(58)}, {3, Rat(24)}}, "eulerian2");
    row(tri::eulerian2, 5, {{0, Rat(1)}, {1, Rat(52)}, {2, Rat(328)}, {3, Rat(444)}, {4, Rat(120)}},
        "eulerian2");
    // starred Eulerian rows
    row(tri::eulerian2_star, 4, {{0, Rat(3)}, {1, Rat(42)}, {2, Rat(60)}}, "eulerian2*");
    row(tri::eulerian2_star, 5, {{0, Rat(3)}, {1, Rat(108)}, {2, Rat(474)}, {3, Rat(360)}}, "eulerian2*");
    // extension row of the starred Stirling triangle
    ok &= expect(tri::stirling_cycle_star(0, 1) == Rat(1, 2), "[0,1]*", detail);
    ok &= expect(tri::stirling_cycle_star(0, 2) == Rat(-5, 12), "[0,2]*", detail);
    ok &= expect(tri::stirling_cycle_star(0, 3) == Rat(7, 18), "[0,3]*", detail);
    ok &= expect(tri::stirling_cycle_star(0, 4) == Rat(-1631, 4320), "[0,4]*", detail);
    return ok;
}

bool full_verifier(std::string& detail) {
    for (const auto& rep : ver::run_all()) {
        if (!rep.passed) {
            detail = rep.id + " failed at index " + std::to_string(rep.failure->index) + ": " +
                     rep.failure->lhs + " != " + rep.failure->rhs;
            return false;
        }
    }
    return true;
}

bool property_suites(std::string& detail) {
    using ramastir::algebra::PowerSeries;
    bool ok = true;
    // reversion round-trips and the two reversion routes
    for (int order = 4; order <= 10; order += 3) {
        PowerSeries<Rat> f(order);
        for (int i = 1; i <= order; ++i) f.set(i, Rat((i * 7919) % 13 - 6, (i % 5) + 1));
        f.set(1, Rat(1));
        auto g = revert(f);
        ok &= expect(g == revert_fixed_point(f), "reversion routes", detail);
        auto round = compose(f, g);
        for (int i = 0; i <= round.order(); ++i)
            ok &= expect(round.at(i) == Rat(i == 1 ? 1 : 0), "reversion round trip", detail);
    }
    // recip / exp / log inverses
    for (int order = 4; order <= 12; order += 4) {
        PowerSeries<Rat> a(order);
        a.set(0, Rat(1));
        for (int i = 1; i <= order; ++i) a.set(i, Rat((i * 31) % 11 - 5, i + 1));
        auto prod = a * reciprocal(a);
        for (int i = 0; i <= order; ++i)
            ok &= expect(prod.at(i) == Rat(i == 0 ? 1 : 0), "recip inverse", detail);
        ok &= expect(exp(log(a)) == a, "exp(log)", detail);
    }
    // De Moivre dual computation
    ramastir::algebra::CoeffStream stream = [](long j) { return Rat(1, j + 2); };
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            ok &= expect(demoivre(n, k, stream) == demoivre_multinomial(n, k, stream), "demoivre dual",
                         detail);
    // positivity of the divide-mode array
    tri::ATArray divide(tri::ATMode::Divide);
    for (long n = 0; n <= 30 && ok; ++n)
        for (long m = 0; m <= 30; ++m)
            ok &= expect(divide.at(n, m).sign() > 0, "divide-array positivity", detail);
    // omega denominator smoothness
    ok &= expect(ver::run_check("omega-denominator-smooth", 25).passed, "omega smoothness", detail);
    return ok;
}

bool numeric_validation(std::string& detail) {
    Rat eps = Rat(1) / Rat(10).pow(40);
    Rat width_cap = Rat(1) / Rat(10).pow(30);
    for (long n : {10L, 20L, 40L})
        for (int terms = 1; terms <= 5; ++terms) {
            auto s = num::validate_expansion(num::ExpansionTarget::Stirling, n, terms, eps);
            auto t = num::validate_expansion(num::ExpansionTarget::Theta, n, terms, eps);
            std::string at = " at n=" + std::to_string(n) + " R=" + std::to_string(terms);
            if (!expect(s.verdict == num::ExpansionVerdict::Pass, "stirling bound" + at, detail)) return false;
            if (!expect(t.verdict == num::ExpansionVerdict::Pass, "theta bound" + at, detail)) return false;
            if (!expect(s.error.width() <= width_cap, "stirling width" + at, detail)) return false;
            if (!expect(t.error.width() <= width_cap, "theta width" + at, detail)) return false;
        }
    return true;
}

bool mutation_sensitivity(std::string& detail) {
    for (int r = 0; r <= 5; ++r) {
        ver::SequencePool corrupted;
        corrupted.gamma_override[r] = seq::gamma_r(r) + Rat(1);
        int failures = 0;
        std::string failed_ids;
        for (const auto& rep : ver::run_all(10, corrupted)) {
            if (!rep.passed) {
                ++failures;
                if (!rep.failure->lhs.empty() && failures <= 3) failed_ids += rep.id + " ";
            }
        }
        if (!expect(failures >= 2,
                    "gamma_" + std::to_string(r) + "+1 tripped only " + std::to_string(failures) + " checks",
                    detail))
            return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion("criterion-1 golden coefficients", 1, golden_coefficients);
    criterion("criterion-2 main reflection theorem to r=25", 30, main_theorem);
    criterion("criterion-3 Eulerian/Bernoulli identity to n=40", 10, eulerian_bernoulli_identity);
    criterion("criterion-4 cross-method audit", 120, cross_method_audit);
    criterion("criterion-5 figure reproduction", 5, figure_reproduction);
    criterion("criterion-6 full verifier suite", 60, full_verifier);
    criterion("criterion-7 property suites", 60, property_suites);
    criterion("criterion-8 numeric validation", 60, numeric_validation);
    criterion("criterion-9 mutation sensitivity", 60, mutation_sensitivity);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
