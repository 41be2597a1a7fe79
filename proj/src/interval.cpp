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

#include "ramastir/interval.hpp"

#include <algorithm>

#include "ramastir/sequences.hpp"

namespace ramastir::numeric {

using algebra::BigInt;

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4})};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.lo.sign() <= 0 && b.hi.sign() >= 0)
        throw std::domain_error("RatInterval: division by an interval containing zero");
    return a * RatInterval(b.hi.inverse(), b.lo.inverse());
}

RatInterval abs(const RatInterval& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return {-a.hi, -a.lo};
    return {Rat(0), std::max(-a.lo, a.hi)};
}

RatInterval exp_nat(long n, const Rat& eps) {
    if (n < 0) throw std::domain_error("exp_nat: negative argument");
    if (eps.sign() <= 0) throw std::domain_error("exp_nat: eps must be positive");
    if (n == 0) return {Rat(1), Rat(1)};
    Rat sum(0);
    Rat term(1);
    long k = 0;
    while (true) {
        sum += term;
        term *= Rat(n, k + 1);  // now the (k+1)-st term
        ++k;
        if (k >= 2 * n) {
            // ratio n/(k+1) <= 1/2, so the tail is at most term / (1 - n/(k+1))
            Rat tail_bound = term / (Rat(1) - Rat(n, k + 1));
            if (tail_bound <= eps) return {sum, sum + tail_bound};
        }
    }
}

namespace {

// Alternating series sum with first-omitted-term bracketing:
// arctan(1/m) = sum_{i>=0} (-1)^i / ((2i+1) m^{2i+1}).
RatInterval arctan_inv(long m, const Rat& eps) {
    Rat sum(0);
    Rat power(1, m);
    Rat m2(m * m);
    long i = 0;
    while (true) {
        Rat term = power / Rat(2 * i + 1);
        if (term <= eps) {
            // remainder has the sign of the next (i-th) term
            if (i % 2 == 0) return {sum, sum + term};
            return {sum - term, sum};
        }
        sum += (i % 2 == 0) ? term : -term;
        power /= m2;
        ++i;
    }
}

}  // namespace

RatInterval pi_interval(const Rat& eps) {
    if (eps.sign() <= 0) throw std::domain_error("pi_interval: eps must be positive");
    // pi = 16 arctan(1/5) - 4 arctan(1/239)
    Rat budget = eps / Rat(40);
    RatInterval a = arctan_inv(5, budget);
    RatInterval b = arctan_inv(239, budget);
    return RatInterval(Rat(16)) * a - RatInterval(Rat(4)) * b;
}

RatInterval sqrt_interval(const Rat& q, const Rat& eps) {
    if (q.sign() < 0) throw std::domain_error("sqrt_interval: negative radicand");
    if (eps.sign() <= 0) throw std::domain_error("sqrt_interval: eps must be positive");
    if (q.is_zero()) return {Rat(0), Rat(0)};
    // sqrt(num/den) = sqrt(num*den)/den; bracket the integer root of
    // num*den*4^m so the enclosure width is 1/(2^m den) <= eps.
    BigInt num = q.numerator(), den = q.denominator();
    BigInt target = num * den;
    unsigned long m = 0;
    // need 2^m >= 1/(eps*den)
    Rat need = Rat(1) / (eps * Rat(den));
    Rat two_m(1);
    while (two_m < need) {
        two_m *= Rat(2);
        ++m;
    }
    BigInt scaled = target << (2 * m);
    BigInt root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
    BigInt scale_den = den << m;
    Rat lo(root, scale_den);
    if (rem == 0) return {lo, lo};
    return {lo, Rat(root + 1, scale_den)};
}

RatInterval sqrt_interval(const RatInterval& x, const Rat& eps) {
    if (x.lo.sign() < 0) throw std::domain_error("sqrt_interval: interval dips below zero");
    return {sqrt_interval(x.lo, eps).lo, sqrt_interval(x.hi, eps).hi};
}

namespace {

// n! / n^n as an exact rational.
Rat factorial_over_power(long n) {
    Rat r(algebra::factorial(n));
    return r / Rat(BigInt(n)).pow(n);
}

// sum_{k=0}^{n-1} n^k / k!, exact.
Rat exp_partial_sum(long n) {
    Rat sum(0);
    Rat term(1);
    for (long k = 0; k < n; ++k) {
        sum += term;
        term *= Rat(n, k + 1);
    }
    return sum;
}

}  // namespace

RatInterval theta_exact(long n, const Rat& eps) {
    if (n < 1) throw std::domain_error("theta_exact: n must be >= 1");
    if (eps.sign() <= 0) throw std::domain_error("theta_exact: eps must be positive");
    Rat scale = factorial_over_power(n);  // < 1 for n >= 2
    Rat exp_eps = eps * Rat(2) / scale;
    RatInterval e = exp_nat(n, exp_eps);
    RatInterval half_gap = (e - RatInterval(Rat(2) * exp_partial_sum(n))) * RatInterval(Rat(1, 2));
    return half_gap * RatInterval(scale);
}

RatInterval stirling_ratio(long n, const Rat& eps) {
    if (n < 1) throw std::domain_error("stirling_ratio: n must be >= 1");
    if (eps.sign() <= 0) throw std::domain_error("stirling_ratio: eps must be positive");
    Rat sub_eps = eps;
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatInterval e = exp_nat(n, sub_eps);
        RatInterval two_pi_n = RatInterval(Rat(2 * n)) * pi_interval(sub_eps);
        RatInterval root = sqrt_interval(two_pi_n, sub_eps);
        RatInterval value = RatInterval(factorial_over_power(n)) * e / root;
        if (value.width() <= eps) return value;
        sub_eps /= Rat(64);
    }
    throw std::domain_error("stirling_ratio: failed to reach the requested width");
}

ExpansionReport validate_expansion(ExpansionTarget target, long n, int terms, const Rat& eps) {
    if (terms < 1) throw std::domain_error("validate_expansion: need at least one term");
    if (n < 1) throw std::domain_error("validate_expansion: n must be >= 1");
    if (eps.sign() <= 0) throw std::domain_error("validate_expansion: eps must be positive");

    Rat partial(0);
    Rat n_pow(1);
    for (int r = 0; r < terms; ++r) {
        Rat coef = target == ExpansionTarget::Stirling ? sequences::gamma_r(r) : sequences::rho_r(r);
        partial += coef / n_pow;
        n_pow *= Rat(n);
    }
    Rat next_coef =
        target == ExpansionTarget::Stirling ? sequences::gamma_r(terms) : sequences::rho_r(terms);
    Rat bound = Rat(2) * next_coef.abs() / n_pow;

    ExpansionReport rep;
    rep.target = target;
    rep.n = n;
    rep.terms = terms;
    rep.bound = bound;

    Rat working_eps = eps;
    for (int attempt = 0; attempt < 8; ++attempt) {
        RatInterval exact = target == ExpansionTarget::Stirling ? stirling_ratio(n, working_eps)
                                                                : theta_exact(n, working_eps);
        RatInterval err = abs(exact - RatInterval(partial));
        rep.error = err;
        rep.eps = working_eps;
        if (err.hi <= bound) {
            rep.verdict = ExpansionVerdict::Pass;
            return rep;
        }
        if (err.lo > bound) {
            rep.verdict = ExpansionVerdict::Fail;
            return rep;
        }
        working_eps /= Rat(1000);  // straddling: the enclosure is too wide to decide
    }
    rep.verdict = ExpansionVerdict::Undecided;
    return rep;
}

std::optional<Rat> parse_eps(const std::string& text) {
    auto epos = text.find_first_of("eE");
    if (epos == std::string::npos) return Rat::parse(text);
    auto mant = Rat::parse(text.substr(0, epos));
    if (!mant) return std::nullopt;
    try {
        long exponent = std::stol(text.substr(epos + 1));
        return *mant * Rat(10).pow(exponent);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace ramastir::numeric
