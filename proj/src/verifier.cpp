/*
   Copyright 2026 The ramastir authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ramastir/verifier.hpp"

#include <algorithm>
#include <chrono>

#include "ramastir/poly.hpp"
#include "ramastir/triangles.hpp"

namespace ramastir::verifier {

using algebra::BigInt;
using algebra::Poly;
using algebra::PowerSeries;
using algebra::Sqrt2Rat;
using sequences::alpha;
using sequences::alpha_star;
using sequences::beta;
using sequences::beta_star;
using sequences::c_n;
using sequences::d_n;
using sequences::s_n_k;
using triangles::bernoulli;
using triangles::binomial_int;
using triangles::binomial_rat;
using triangles::binomial_half;
using triangles::double_factorial;
using triangles::eulerian2;
using triangles::eulerian2_star;
using triangles::omega;
using triangles::stirling_cycle;
using triangles::stirling_cycle_star;

Rat SequencePool::gamma(int r) const {
    auto it = gamma_override.find(r);
    if (it != gamma_override.end()) return it->second;
    return sequences::gamma_r(r);
}

Rat SequencePool::rho_hat(int r) const { return sequences::rho_hat_r(r); }
Rat SequencePool::rho(int r) const { return sequences::rho_r(r); }
Rat SequencePool::tau(int r) const { return sequences::tau_r(r); }

Rat SequencePool::psi(int r) const {
    std::vector<Rat> psi;
    for (int i = 0; i <= r; ++i) {
        Rat acc = tau(i);
        for (int j = 0; j <= i - 1; ++j) acc -= psi[static_cast<size_t>(j)] * gamma(i - j);
        psi.push_back(acc / gamma(0));
    }
    return psi.back();
}

namespace {

using Checker = std::function<std::optional<CheckFailure>(int, const SequencePool&)>;

Rat sign_pow(long k) { return Rat((k % 2 + 2) % 2 == 0 ? 1 : -1); }

std::optional<CheckFailure> mismatch(long index, const Rat& lhs, const Rat& rhs, std::string where = {}) {
    if (lhs == rhs) return std::nullopt;
    return CheckFailure{index, std::move(where), lhs.str(), rhs.str()};
}

std::optional<CheckFailure> mismatch(long index, const Sqrt2Rat& lhs, const Sqrt2Rat& rhs,
                                     std::string where = {}) {
    if (lhs == rhs) return std::nullopt;
    return CheckFailure{index, std::move(where), lhs.str(), rhs.str()};
}

// Exact value of the convergent integral of t^a (1-t)^{-c} over (-inf, 0],
// i.e. (-1)^a a! (c-a-2)! / (c-1)!; needs c >= a + 2.
Rat tail_integral(long a, long c) {
    if (a < 0 || c < a + 2) throw std::domain_error("tail_integral: divergent parameters");
    return sign_pow(a) * Rat(algebra::factorial(a) * algebra::factorial(c - a - 2)) /
           Rat(algebra::factorial(c - 1));
}

// cos(pi x / 2) for integer x: 0 for odd x, +-1 alternating on even x.
Rat cos_half_pi(long x) {
    if (x % 2 != 0) return Rat(0);
    return (x / 2) % 2 == 0 ? Rat(1) : Rat(-1);
}

std::optional<CheckFailure> check_thm_1_1(int max, const SequencePool& seq) {
    for (int r = 0; r <= max; ++r) {
        Rat expected = (r % 2 == 0 ? Rat(-1) : Rat(1)) * seq.rho(r);
        if (auto f = mismatch(r, seq.psi(r), expected)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_1_7(int max, const SequencePool&) {
    for (long n = 0; n <= max; ++n) {
        Rat acc(0);
        for (long k = 0; k <= n; ++k)
            acc += sign_pow(k) * eulerian2(n, k) / Rat(binomial_int(2 * n + 1, k + 1));
        if (auto f = mismatch(n, acc, Rat(2) * bernoulli(n + 1))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_2_2(int max, const SequencePool& seq) {
    for (int r = 0; r <= max; ++r) {
        Rat acc = seq.gamma(r) + seq.tau(r);
        for (int j = 0; j <= r; ++j) acc += sign_pow(j) * seq.rho_hat(j) * seq.gamma(r - j);
        if (auto f = mismatch(r, acc, Rat(0))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_2_8(int max, const SequencePool& seq) {
    for (int r = 0; r <= max; ++r) {
        Rat acc(0);
        for (int j = 0; j <= r; ++j) acc += sequences::psi_r(j) * seq.gamma(r - j);
        if (auto f = mismatch(r, acc, seq.tau(r))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_2_9(int max, const SequencePool& seq) {
    for (int r = 0; r <= max; ++r) {
        Rat acc(0);
        for (int j = 0; j <= r; ++j) acc += sign_pow(j) * seq.gamma(j) * seq.gamma(r - j);
        if (auto f = mismatch(r, acc, Rat(r == 0 ? 1 : 0))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_2_10(int max, const SequencePool& seq) {
    for (int r = 0; r <= max; ++r) {
        Rat acc(0);
        for (int j = 0; j <= r; ++j) acc += sign_pow(j) * Rat(j + 1) * seq.gamma(j + 1) * seq.gamma(r - j);
        if (auto f = mismatch(r, acc, bernoulli(r + 2) / Rat(r + 2))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_lagrange_roundtrip(int max, const SequencePool&) {
    int n = std::max(max, 2);
    PowerSeries<Rat> v = sequences::series_V(n - 1);
    PowerSeries<Rat> vs = sequences::series_V_star(n - 1);
    PowerSeries<Rat> f(n), g(n);
    for (int i = 1; i <= n; ++i) {
        f.set(i, v.at(i - 1));
        g.set(i, vs.at(i - 1));
    }
    PowerSeries<Rat> fg = compose(f, g);
    PowerSeries<Rat> gf = compose(g, f);
    for (int i = 0; i <= n; ++i) {
        Rat want(i == 1 ? 1 : 0);
        if (auto fail = mismatch(i, fg.at(i), want, "F(G)")) return fail;
        if (auto fail = mismatch(i, gf.at(i), want, "G(F)")) return fail;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_3_cross(int max, const SequencePool&) {
    using sequences::GammaMethod;
    using sequences::RhoMethod;
    using sequences::TauMethod;
    for (int r = 0; r <= max; ++r) {
        if (auto f = mismatch(r, sequences::rho_hat_r(r, RhoMethod::VPower),
                              sequences::rho_hat_r(r, RhoMethod::VStarCoeff), "rho_hat"))
            return f;
        if (auto f = mismatch(r, sequences::gamma_r(r, GammaMethod::VPower),
                              sequences::gamma_r(r, GammaMethod::VStarCoeff), "gamma"))
            return f;
        if (auto f = mismatch(r, sequences::tau_r(r, TauMethod::VPower),
                              sequences::tau_r(r, TauMethod::VStarLogDeriv), "tau"))
            return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_4_2(int max, const SequencePool& seq) {
    using sequences::GammaMethod;
    using sequences::RhoMethod;
    using sequences::TauMethod;
    for (int r = 0; r <= max; ++r) {
        if (auto f = mismatch(r, seq.gamma(r), sequences::gamma_r(r, GammaMethod::FromC), "gamma"))
            return f;
        if (auto f = mismatch(r, seq.rho_hat(r), sequences::rho_hat_r(r, RhoMethod::FromC), "rho_hat"))
            return f;
        if (auto f = mismatch(r, seq.tau(r), sequences::tau_r(r, TauMethod::FromC), "tau")) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_4_3(int max, const SequencePool&) {
    for (int i = 0; i <= max; ++i) {
        long n = 2 * i + 3;
        // odd-split form
        Sqrt2Rat odd_sum(0), mixed_sum(0);
        for (long x = 1; x <= n; x += 2) {
            long y = n - x;
            Sqrt2Rat prod = Sqrt2Rat(Rat(x)) * c_n(static_cast<int>(x)) * Sqrt2Rat(Rat(y)) *
                            c_n(static_cast<int>(y));
            odd_sum += prod;
            Sqrt2Rat dprod = Sqrt2Rat(Rat(double_factorial(x))) * c_n(static_cast<int>(x)) *
                             Sqrt2Rat(Rat(double_factorial(y))) * c_n(static_cast<int>(y));
            mixed_sum += Sqrt2Rat(sign_pow(y / 2)) * dprod;
        }
        Sqrt2Rat lhs = Sqrt2Rat(Rat(2) * Rat(double_factorial(n - 4))) * odd_sum;
        Sqrt2Rat rhs = -Sqrt2Rat(Rat(double_factorial(n))) * c_n(static_cast<int>(n)) +
                       Sqrt2Rat(Rat(4) * Rat(double_factorial(n - 2))) * c_n(static_cast<int>(n - 2)) +
                       mixed_sum;
        if (auto f = mismatch(n, lhs, rhs, "odd-split")) return f;
        // symmetric cosine form
        Sqrt2Rat sym(0);
        for (long x = 0; x <= n; ++x) {
            long y = n - x;
            Rat bracket = Rat(double_factorial(n - 4)) * Rat(x) * Rat(y) -
                          (cos_half_pi(x) + cos_half_pi(y)) / Rat(2) *
                              Rat(double_factorial(x) * double_factorial(y));
            sym += Sqrt2Rat(bracket) * c_n(static_cast<int>(x)) * c_n(static_cast<int>(y));
        }
        Sqrt2Rat sym_rhs = -Sqrt2Rat(Rat(double_factorial(n))) * c_n(static_cast<int>(n)) +
                           Sqrt2Rat(Rat(4) * Rat(double_factorial(n - 2))) * c_n(static_cast<int>(n - 2));
        if (auto f = mismatch(n, sym, sym_rhs, "symmetric")) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_lemma_5_2(int max, const SequencePool&) {
    for (int n = 1; n <= max; ++n)
        for (int k = 1; k <= max; ++k) {
            Sqrt2Rat lhs = s_n_k(n, k + 1) / Sqrt2Rat(Rat(k + 1));
            Sqrt2Rat rhs = s_n_k(n, k) / Sqrt2Rat(Rat(k)) +
                           Sqrt2Rat(Rat(2, n)) * (n >= 2 ? s_n_k(n - 2, k) : Sqrt2Rat(0));
            if (auto f = mismatch(n, lhs, rhs, "k=" + std::to_string(k))) return f;
        }
    return std::nullopt;
}

std::optional<CheckFailure> check_thm_5_3(int max, const SequencePool&) {
    for (int n = 0; n <= max; ++n)
        for (int k = 1; k <= std::min(max, 10); ++k) {
            Sqrt2Rat lhs = Sqrt2Rat(Rat(double_factorial(n))) * s_n_k(n, k) / Sqrt2Rat(Rat(k));
            Sqrt2Rat rhs(0);
            Rat two_j(1);
            for (int j = 0; j <= k - 1; ++j, two_j *= Rat(2)) {
                rhs += Sqrt2Rat(two_j * stirling_cycle(k, k - j)) * d_n(n - 2 * j);
                if (n == 2 * j) rhs -= Sqrt2Rat(two_j * stirling_cycle_star(k, k - j));
            }
            if (auto f = mismatch(n, lhs, rhs, "k=" + std::to_string(k))) return f;
        }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_5_4(int max, const SequencePool&) {
    for (int n = 0; n <= max; ++n) {
        Sqrt2Rat lhs = Sqrt2Rat(Rat(n, 2)) * d_n(n) * Sqrt2Rat::sqrt2_pow(-n);
        Sqrt2Rat rhs(0);
        for (int j = 0; j <= n / 2; ++j)
            rhs += d_n(n - 2 * j) * Sqrt2Rat::sqrt2_pow(-(n - 2 * j)) * Sqrt2Rat(alpha(j));
        if (n % 2 == 0) rhs -= Sqrt2Rat(alpha_star(n / 2));
        if (auto f = mismatch(n, lhs, rhs)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_5_11(int max, const SequencePool& seq) {
    for (int m = 0; m <= max; ++m) {
        Rat acc(0);
        for (int j = 0; j <= m - 1; ++j) acc += alpha(j + 1) * seq.gamma(m - 1 - j);
        if (auto f = mismatch(m, Rat(m) * seq.gamma(m), acc)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_5_12(int max, const SequencePool& seq) {
    for (int m = 0; m <= max; ++m) {
        Rat acc = alpha_star(m + 1) - alpha(m + 1);
        for (int j = 0; j <= m - 1; ++j) acc += alpha(j + 1) * seq.rho_hat(m - 1 - j);
        if (auto f = mismatch(m, Rat(2 * m + 1, 2) * seq.rho_hat(m), acc)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_6_1(int max, const SequencePool&) {
    for (long n = 0; n <= max; ++n)
        for (long m = 0; m <= 2 * max; ++m) {
            Rat acc(0);
            for (long k = 0; k <= n; ++k) acc += eulerian2(n, k) * Rat(binomial_int(m + k, 2 * n));
            if (auto f = mismatch(n, stirling_cycle(m, m - n), acc, "m=" + std::to_string(m))) return f;
        }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_6_2(int max, const SequencePool&) {
    for (long n = 1; n <= max; ++n)
        for (long m = 1; m <= 2 * max; ++m) {
            Rat acc(0);
            for (long k = -1; k <= n - 2; ++k)
                acc += eulerian2_star(n, k) * Rat(binomial_int(m + k, 2 * n));
            if (auto f = mismatch(n, stirling_cycle_star(m, m - n), acc, "m=" + std::to_string(m)))
                return f;
        }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_6_1(int max, const SequencePool&) {
    using sequences::AlphaMethod;
    using sequences::AlphaStarMethod;
    for (int j = 0; j <= max; ++j) {
        if (auto f = mismatch(j, alpha(j, AlphaMethod::DoubleSum), alpha(j, AlphaMethod::Eulerian),
                              "alpha"))
            return f;
        if (auto f = mismatch(j, alpha_star(j, AlphaStarMethod::DoubleSum),
                              alpha_star(j, AlphaStarMethod::EulerianStar), "alpha*"))
            return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_6_2(int max, const SequencePool&) {
    long box = std::min(max, 4);
    for (long n = 1; n <= std::max<long>(max, 1); ++n)
        for (long a = 0; a <= box; ++a)
            for (long b = std::max(-n - 1, -box); b <= box; ++b) {
                Rat lhs = sequences::beta_integral_F(static_cast<int>(a), static_cast<int>(b),
                                                     static_cast<int>(n));
                Rat acc(0);
                for (long k = 0; k <= n - 1; ++k)
                    acc += sign_pow(k) * eulerian2(n, k) / Rat(binomial_int(2 * n + a + b, k + a));
                Rat rhs = sign_pow(a) / Rat(2 * n + a + b + 1) * acc;
                if (auto f = mismatch(n, lhs, rhs, "a=" + std::to_string(a) + " b=" + std::to_string(b)))
                    return f;
            }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_6_9(int max, const SequencePool&) {
    std::vector<Poly> e;  // E_0 .. E_{max+1}
    for (long i = 0; i <= max + 1; ++i) e.push_back(triangles::eulerian2_via_ratfun(i));
    for (long n = 1; n <= max; ++n) {
        Rat want = alpha(static_cast<int>(n));
        for (long j = 0; j <= n + 1; ++j) {
            Poly prod = e[static_cast<size_t>(j)] * e[static_cast<size_t>(n + 1 - j)];
            Rat integral(0);
            for (int p = 0; p <= prod.degree(); ++p)
                integral += prod.coeff(p) * tail_integral(p + 1, 2 * n + 3);
            Rat value = sign_pow(j) * integral;
            if (auto f = mismatch(n, value, want, "j=" + std::to_string(j))) return f;
        }
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_6_10(int max, const SequencePool&) {
    for (long n = 1; n <= max; ++n) {
        Rat integral(0);
        for (long p = 0; p <= n - 1; ++p)
            integral += eulerian2(n, p) * tail_integral(p, 2 * n + 3);
        if (auto f = mismatch(n, sign_pow(n) * integral, alpha_star(static_cast<int>(n)))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_6_11(int max, const SequencePool&) {
    using sequences::AlphaStarMethod;
    for (int j = 0; j <= max; ++j)
        if (auto f = mismatch(j, alpha_star(j, AlphaStarMethod::EulerianPlain),
                              alpha_star(j, AlphaStarMethod::EulerianStar)))
            return f;
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_7_1(int max, const SequencePool&) {
    using sequences::AlphaMethod;
    for (int j = 0; j <= max; ++j)
        if (auto f = mismatch(j, alpha(j, AlphaMethod::Eulerian), bernoulli(j + 1) / Rat(j + 1)))
            return f;
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_7_3(int max, const SequencePool& seq) {
    for (int m = 0; m <= max; ++m) {
        Rat acc = alpha_star(m + 1) - bernoulli(m + 2) / Rat(m + 2);
        for (int j = 0; j <= m - 1; ++j)
            acc += bernoulli(j + 2) / Rat(j + 2) * seq.rho_hat(m - 1 - j);
        if (auto f = mismatch(m, Rat(2 * m + 1, 2) * seq.rho_hat(m), acc)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_8_1(int max, const SequencePool&) {
    for (int i = 0; i <= max; ++i) {
        long n = 2 * i + 3;
        Sqrt2Rat lhs(0);
        Rat two_j(1);
        for (long j = 0; j <= (n - 3) / 2; ++j, two_j *= Rat(2))
            lhs += Sqrt2Rat(beta(static_cast<int>(j)) * two_j) * d_n(static_cast<int>(n - 2 - 2 * j));
        Sqrt2Rat inner(0);
        for (long x = 1; x <= n; x += 2) {
            long y = n - x;
            inner += Sqrt2Rat(sign_pow(y / 2) / Rat(2)) * d_n(static_cast<int>(x)) * d_n(static_cast<int>(y));
        }
        Sqrt2Rat rhs = Sqrt2Rat(Rat(n - 2, 2)) *
                       (Sqrt2Rat(Rat(2)) * d_n(static_cast<int>(n - 2)) -
                        d_n(static_cast<int>(n)) / Sqrt2Rat(Rat(2)) + inner);
        if (auto f = mismatch(n, lhs, rhs)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_8_2(int max, const SequencePool& seq) {
    for (int m = 1; m <= max; ++m) {
        Rat acc = sign_pow(m) * beta(m) + Rat(2) * bernoulli(m + 1) / Rat(m + 1);
        for (int j = 0; j <= m - 1; ++j)
            acc += bernoulli(j + 2) / Rat(j + 2) * seq.rho_hat(m - 1 - j);
        if (auto f = mismatch(m, Rat(2 * m + 1, 2) * seq.rho_hat(m), acc)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_prop_8_3(int max, const SequencePool&) {
    using sequences::BetaMethod;
    for (int j = 0; j <= max; ++j) {
        if (auto f = mismatch(j, beta(j, BetaMethod::DoubleSum), beta(j, BetaMethod::Eulerian), "beta"))
            return f;
        if (auto f = mismatch(j, beta_star(j, BetaMethod::DoubleSum), beta_star(j, BetaMethod::Eulerian),
                              "beta*"))
            return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_8_4(int max, const SequencePool&) {
    for (int n = 0; n <= max; ++n) {
        Sqrt2Rat conv(0);
        for (int x = 0; x <= n + 2; ++x) {
            int y = n + 2 - x;
            conv += Sqrt2Rat(Rat(x)) * c_n(x) * Sqrt2Rat(Rat(y)) * c_n(y);
        }
        Sqrt2Rat lhs = Sqrt2Rat(Rat(double_factorial(n), 4)) * conv;
        Sqrt2Rat rhs(0);
        Rat two_j(1);
        for (int j = 0; j <= n / 2; ++j, two_j *= Rat(2))
            rhs += Sqrt2Rat(two_j * beta(j)) * d_n(n - 2 * j);
        if (n % 2 == 0) rhs -= Sqrt2Rat::sqrt2_pow(n) * Sqrt2Rat(beta_star(n / 2));
        if (auto f = mismatch(n, lhs, rhs)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_8_7(int max, const SequencePool&) {
    for (int m = 1; m <= max; ++m) {
        Rat rhs = sign_pow(m) * beta(m) + bernoulli(m + 2) / Rat(m + 2) +
                  Rat(2) * bernoulli(m + 1) / Rat(m + 1);
        if (auto f = mismatch(m, alpha_star(m + 1), rhs)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_9_14(int max, const SequencePool& seq) {
    for (int r = 0; r <= max; ++r) {
        Rat acc(0);
        for (int j = 0; j <= r; ++j)
            acc += binomial_rat(Rat(2 * r + 3, 2), j + 1) * seq.rho_hat(j) * seq.gamma(r - j);
        if (auto f = mismatch(r, acc, -seq.gamma(r))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_9_15(int max, const SequencePool& seq) {
    for (int r = 1; r <= max; ++r) {
        Rat acc(0);
        for (int j = 0; j <= r - 1; ++j)
            acc += Rat(binomial_int(r + 1, j + 1)) * seq.rho_hat(j) * seq.rho_hat(r - 1 - j);
        Rat half_sum(0);
        for (int j = 0; j <= r; ++j)
            half_sum += binomial_half(r + 2, j + 1) * seq.gamma(j) * seq.gamma(r - j);
        acc += half_sum / Rat(2 * (r + 2));
        if (auto f = mismatch(r, acc, Rat(-2) * seq.rho_hat(r - 1))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_9_16(int max, const SequencePool& seq) {
    for (int r = 0; r <= max; ++r) {
        Rat acc(0);
        for (int j = 0; j <= r; ++j)
            acc += seq.rho_hat(j) * seq.gamma(r - j) *
                   (binomial_rat(Rat(2 * r - 1, 2), j) + sign_pow(j) / Rat(2));
        if (auto f = mismatch(r, acc, -seq.gamma(r))) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_9_17(int max, const SequencePool& seq) {
    for (int r = 0; r <= max; ++r) {
        Rat acc(0);
        for (int j = 0; j <= r - 1; ++j)
            acc += Rat(binomial_int(r - 1, j)) * seq.rho_hat(j) * seq.rho_hat(r - 1 - j);
        acc = Rat(r) * acc;
        Rat half_sum(0);
        for (int j = 0; j <= r; ++j)
            half_sum += binomial_half(r, j) * seq.gamma(j) * seq.gamma(r - j);
        acc += half_sum / Rat(2);
        Rat rhs = beta(r) - beta_star(r);
        for (int j = 0; j <= r - 1; ++j) rhs -= beta(j) * seq.rho_hat(r - 1 - j);
        if (auto f = mismatch(r, acc, rhs)) return f;
    }
    return std::nullopt;
}

std::optional<CheckFailure> check_eq_10_2(int max, const SequencePool&) {
    for (long n = 0; n <= max; ++n)
        for (long k = 0; k <= max; ++k) {
            Rat acc(0);
            for (long j = 1; j <= k; ++j)
                acc += (j % 2 == 1 ? Rat(1) : Rat(-1)) * omega(j) * stirling_cycle(n, k - j);
            if (auto f = mismatch(n, stirling_cycle_star(n, k), acc, "k=" + std::to_string(k))) return f;
        }
    return std::nullopt;
}

std::optional<CheckFailure> check_stirstar_diag(int max, const SequencePool&) {
    for (long n = 1; n <= max; ++n)
        if (auto f = mismatch(n, stirling_cycle_star(n, n), Rat(n - 1, n))) return f;
    return std::nullopt;
}

std::optional<CheckFailure> check_omega_denominator(int max, const SequencePool&) {
    for (long n = 0; n <= max; ++n) {
        BigInt den = omega(n).denominator();
        for (long p = 2; p <= n + 1 && den > 1; ++p)
            while (den % p == 0) den /= p;
        if (den != 1)
            return CheckFailure{n, "", "denominator cofactor " + den.get_str(), "1"};
    }
    return std::nullopt;
}

std::vector<IdentityCheck> build_registry() {
    std::vector<IdentityCheck> v = {
        {"thm-1.1", "psi_r = (-1)^{r+1} rho_r; psi from the tau/gamma triangular solve, rho by series coefficients", 25,
         check_thm_1_1},
        {"eq-1.7", "alternating second-order Eulerian sum of reciprocal binomials equals 2 B_{n+1}", 40,
         check_eq_1_7},
        {"prop-2.2", "gamma_r + tau_r + sum_j (-1)^j rho^_j gamma_{r-j} = 0", 20, check_prop_2_2},
        {"eq-2.8", "sum_j psi_j gamma_{r-j} = tau_r", 20, check_eq_2_8},
        {"eq-2.9", "sum_j (-1)^j gamma_j gamma_{r-j} = [r = 0]", 20, check_eq_2_9},
        {"eq-2.10", "sum_j (-1)^j (j+1) gamma_{j+1} gamma_{r-j} = B_{r+2}/(r+2)", 20, check_eq_2_10},
        {"lagrange-roundtrip", "x V(x) and x V*(x) are compositional inverses", 20,
         check_lagrange_roundtrip},
        {"eq-3.5-3.10", "V-power and reverted-series forms of rho^, gamma, tau agree", 20,
         check_eq_3_cross},
        {"prop-4.2", "rho^, gamma, tau recovered from the c coefficients", 20, check_prop_4_2},
        {"prop-4.3", "odd-index quadratic identity for the c coefficients, plus its symmetric form", 20,
         check_prop_4_3},
        {"lemma-5.2", "S_n(k+1)/(k+1) = S_n(k)/k + (2/n) S_{n-2}(k)", 14, check_lemma_5_2},
        {"thm-5.3", "n!! S_n(k)/k expands over Stirling cycle rows against d_{n-2j}", 14, check_thm_5_3},
        {"prop-5.4", "(n/2) d_n / 2^{n/2} = sum_j d_{n-2j} 2^{j-n/2} alpha(j) - alpha*(n/2)", 20,
         check_prop_5_4},
        {"eq-5.11", "m gamma_m = sum_j alpha(j+1) gamma_{m-1-j}", 20, check_eq_5_11},
        {"eq-5.12", "(m+1/2) rho^_m = alpha*(m+1) - alpha(m+1) + sum_j alpha(j+1) rho^_{m-1-j}", 20,
         check_eq_5_12},
        {"eq-6.1", "[m, m-n] = sum_k <<n,k>> C(m+k, 2n)", 8, check_eq_6_1},
        {"eq-6.2", "[m, m-n]* = sum_k <<n,k>>* C(m+k, 2n)", 8, check_eq_6_2},
        {"prop-6.1", "double-sum and Eulerian closed forms of alpha, alpha* agree", 20, check_prop_6_1},
        {"prop-6.2", "beta-term expansion of the F_n tail integral equals its closed form", 6,
         check_prop_6_2},
        {"eq-6.9", "integration-by-parts shift invariance of the alpha(n) integral", 8, check_eq_6_9},
        {"eq-6.10", "alpha*(n) = (-1)^n integral of (1-t)^{-3} F_n(t)", 12, check_eq_6_10},
        {"eq-6.11", "plain-Eulerian form of alpha*(n) matches the starred form", 12, check_eq_6_11},
        {"prop-7.1", "alpha(j) = B_{j+1}/(j+1)", 20, check_prop_7_1},
        {"eq-7.3", "(m+1/2) rho^_m = alpha*(m+1) - B_{m+2}/(m+2) + sum_j B_{j+2}/(j+2) rho^_{m-1-j}", 20,
         check_eq_7_3},
        {"prop-8.1", "beta-weighted d expansion of the odd-index quadratic identity", 20, check_prop_8_1},
        {"prop-8.2", "(m+1/2) rho^_m = (-1)^m beta(m) + 2 B_{m+1}/(m+1) + sum_j B_{j+2}/(j+2) rho^_{m-1-j}",
         20, check_prop_8_2},
        {"prop-8.3", "double-sum and Eulerian closed forms of beta, beta* agree", 20, check_prop_8_3},
        {"eq-8.4", "(n!!/4) sum x c_x y c_y = sum_j 2^j d_{n-2j} beta(j) - 2^{n/2} beta*(n/2)", 16,
         check_eq_8_4},
        {"eq-8.7", "alpha*(m+1) = (-1)^m beta(m) + B_{m+2}/(m+2) + 2 B_{m+1}/(m+1)", 20, check_eq_8_7},
        {"eq-9.14", "sum_j C(r+3/2, j+1) rho^_j gamma_{r-j} = -gamma_r", 20, check_eq_9_14},
        {"eq-9.15", "even-index convolution relation with half-integer binomial weights", 20,
         check_eq_9_15},
        {"eq-9.16", "sum_j rho^_j gamma_{r-j} (C(r-1/2, j) + (-1)^j/2) = -gamma_r", 20, check_eq_9_16},
        {"eq-9.17", "even analogue mixing rho^ and gamma convolutions with beta, beta*", 20,
         check_eq_9_17},
        {"eq-10.2", "[n,k]* = sum_j (-1)^{j-1} omega_j [n, k-j]", 15, check_eq_10_2},
        {"stirstar-diag", "[n,n]* = (n-1)/n from the omega-seeded triangle", 20, check_stirstar_diag},
        {"omega-denominator-smooth", "denominator(omega_n) has no prime factor exceeding n+1", 25,
         check_omega_denominator},
    };
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return v;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
    static std::vector<IdentityCheck> r = build_registry();
    return r;
}

bool has_check(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return true;
    return false;
}

CheckReport run_check(const std::string& id, int max_index, const SequencePool& pool) {
    for (const auto& c : registry()) {
        if (c.id != id) continue;
        CheckReport rep;
        rep.id = c.id;
        rep.description = c.description;
        rep.range = max_index < 0 ? c.default_range : max_index;
        auto start = std::chrono::steady_clock::now();
        rep.failure = c.run(rep.range, pool);
        rep.passed = !rep.failure.has_value();
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }
    throw std::invalid_argument("run_check: unknown check id '" + id + "'");
}

std::vector<CheckReport> run_all(int max_index, const SequencePool& pool) {
    std::vector<CheckReport> reports;
    for (const auto& c : registry()) reports.push_back(run_check(c.id, max_index, pool));
    return reports;
}

}  // namespace ramastir::verifier
