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

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ramastir/rat.hpp"
#include "ramastir/sqrt2rat.hpp"

namespace ramastir::algebra {

/// Dense truncated formal power series. A series of order N stores exact
/// coefficients for x^0 .. x^N; asking beyond the order is an error, never a
/// silent zero. Every operation returns the smallest order that is still
/// guaranteed correct given the orders of its inputs:
///   a+b, a*b        -> min(order a, order b)
///   derivative      -> order - 1
///   recip/log/exp   -> order preserved
///   compose(f, g)   -> min(order g, order f * valuation g)
///   revert          -> order preserved
template <typename S>
class PowerSeries {
  public:
    explicit PowerSeries(int order) : c_(check_order(order) + 1) {}
    PowerSeries(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
    }

    static PowerSeries constant(S v, int order) {
        PowerSeries r(order);
        r.c_[0] = std::move(v);
        return r;
    }
    static PowerSeries one(int order) { return constant(S(1), order); }
    static PowerSeries x(int order) {
        if (order < 1) throw std::invalid_argument("PowerSeries::x: order must be >= 1");
        PowerSeries r(order);
        r.c_[1] = S(1);
        return r;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const S& at(int i) const {
        if (i < 0 || i > order())
            throw std::out_of_range("PowerSeries: coefficient index " + std::to_string(i) +
                                    " outside stored order " + std::to_string(order()));
        return c_[static_cast<size_t>(i)];
    }

    void set(int i, S v) {
        if (i < 0 || i > order()) throw std::out_of_range("PowerSeries::set: index outside order");
        c_[static_cast<size_t>(i)] = std::move(v);
    }

    /// Index of the lowest nonzero coefficient, or nullopt if zero up to order.
    std::optional<int> valuation() const {
        for (int i = 0; i <= order(); ++i)
            if (!c_[static_cast<size_t>(i)].is_zero()) return i;
        return std::nullopt;
    }

    PowerSeries truncated(int new_order) const {
        if (new_order < 0 || new_order > order())
            throw std::out_of_range("PowerSeries::truncated: bad target order");
        return PowerSeries(std::vector<S>(c_.begin(), c_.begin() + new_order + 1));
    }

    /// Drops the x^0..x^{k-1} coefficients (which must be zero) and divides by x^k.
    PowerSeries shifted_down(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("PowerSeries::shifted_down: bad shift");
        for (int i = 0; i < k; ++i)
            if (!c_[static_cast<size_t>(i)].is_zero())
                throw std::domain_error("PowerSeries::shifted_down: nonzero low-order coefficient");
        return PowerSeries(std::vector<S>(c_.begin() + k, c_.end()));
    }

    PowerSeries operator-() const {
        PowerSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.order(), b.order());
        PowerSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j)
                r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
        return r;
    }
    friend PowerSeries operator*(const S& s, const PowerSeries& a) {
        PowerSeries r = a;
        for (auto& v : r.c_) v = s * v;
        return r;
    }
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * reciprocal(b); }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

  private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
        return order;
    }
    std::vector<S> c_;
};

template <typename S>
PowerSeries<S> derivative(const PowerSeries<S>& a) {
    if (a.order() < 1) throw std::domain_error("derivative: series order must be >= 1");
    PowerSeries<S> r(a.order() - 1);
    for (int i = 1; i <= a.order(); ++i) r.set(i - 1, S(static_cast<long>(i)) * a.at(i));
    return r;
}

/// Multiplicative inverse; the constant term must be nonzero.
template <typename S>
PowerSeries<S> reciprocal(const PowerSeries<S>& a) {
    if (a.at(0).is_zero()) throw std::domain_error("reciprocal: zero constant term");
    int n = a.order();
    PowerSeries<S> r(n);
    S inv0 = S(1) / a.at(0);
    r.set(0, inv0);
    for (int i = 1; i <= n; ++i) {
        S acc(0);
        for (int j = 1; j <= i; ++j) acc += a.at(j) * r.at(i - j);
        r.set(i, -(inv0 * acc));
    }
    return r;
}

/// log of a series with constant term 1.
template <typename S>
PowerSeries<S> log(const PowerSeries<S>& a) {
    if (!(a.at(0) == S(1))) throw std::domain_error("log: constant term must be 1");
    int n = a.order();
    PowerSeries<S> l(n);
    // n a_n = sum_{k=1..n} k l_k a_{n-k}
    for (int i = 1; i <= n; ++i) {
        S acc = S(static_cast<long>(i)) * a.at(i);
        for (int k = 1; k < i; ++k) acc -= S(static_cast<long>(k)) * l.at(k) * a.at(i - k);
        l.set(i, acc / S(static_cast<long>(i)));
    }
    return l;
}

/// exp of a series with constant term 0.
template <typename S>
PowerSeries<S> exp(const PowerSeries<S>& a) {
    if (!a.at(0).is_zero()) throw std::domain_error("exp: constant term must be 0");
    int n = a.order();
    PowerSeries<S> e(n);
    e.set(0, S(1));
    // n e_n = sum_{k=1..n} k a_k e_{n-k}
    for (int i = 1; i <= n; ++i) {
        S acc(0);
        for (int k = 1; k <= i; ++k) acc += S(static_cast<long>(k)) * a.at(k) * e.at(i - k);
        e.set(i, acc / S(static_cast<long>(i)));
    }
    return e;
}

/// Nonnegative integer power by repeated squaring, any constant term.
template <typename S>
PowerSeries<S> pow(const PowerSeries<S>& a, long e) {
    if (e < 0) throw std::domain_error("pow: negative integer exponent; use a rational exponent");
    PowerSeries<S> r = PowerSeries<S>::one(a.order());
    PowerSeries<S> base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Binomial-series power a^e for rational e; requires constant term 1
/// (integer e >= 0 falls back to repeated multiplication).
template <typename S>
PowerSeries<S> pow(const PowerSeries<S>& a, const Rat& e) {
    if (e.is_integer() && e.sign() >= 0) return pow(a, static_cast<long>(e.numerator().get_si()));
    if (!(a.at(0) == S(1))) throw std::domain_error("pow: rational exponent needs constant term 1");
    return exp(S(e) * log(a));
}

/// outer(inner); inner must have zero constant term.
template <typename S>
PowerSeries<S> compose(const PowerSeries<S>& outer, const PowerSeries<S>& inner) {
    if (!inner.at(0).is_zero()) throw std::domain_error("compose: inner constant term must be 0");
    auto val = inner.valuation();
    if (!val) return PowerSeries<S>::constant(outer.at(0), inner.order());
    long v = *val;
    long n = std::min<long>(inner.order(), static_cast<long>(outer.order()) * v);
    PowerSeries<S> inner_t = inner.truncated(static_cast<int>(n));
    PowerSeries<S> r = PowerSeries<S>::constant(outer.at(outer.order()), static_cast<int>(n));
    for (int k = outer.order() - 1; k >= 0; --k) {
        r = r * inner_t;
        r.set(0, r.at(0) + outer.at(k));
    }
    return r;
}

/// Compositional inverse G of F (F(0)=0, [x^1]F != 0), via the coefficient
/// extraction n [x^n] G = [x^{n-1}] (x/F)^n.
template <typename S>
PowerSeries<S> revert(const PowerSeries<S>& f) {
    if (f.order() < 1) throw std::domain_error("revert: order must be >= 1");
    if (!f.at(0).is_zero()) throw std::domain_error("revert: constant term must be 0");
    if (f.at(1).is_zero()) throw std::domain_error("revert: vanishing linear coefficient");
    int n = f.order();
    PowerSeries<S> w = reciprocal(f.shifted_down(1));  // x/F, order n-1
    PowerSeries<S> g(n);
    PowerSeries<S> p = PowerSeries<S>::one(n - 1);
    for (int k = 1; k <= n; ++k) {
        p = p * w;  // (x/F)^k
        g.set(k, p.at(k - 1) / S(static_cast<long>(k)));
    }
    return g;
}

/// Same inverse, determined coefficient-by-coefficient from F(G(x)) = x by
/// iterated composition. Slower; kept as an independent route for checks.
template <typename S>
PowerSeries<S> revert_fixed_point(const PowerSeries<S>& f) {
    if (f.order() < 1) throw std::domain_error("revert_fixed_point: order must be >= 1");
    if (!f.at(0).is_zero()) throw std::domain_error("revert_fixed_point: constant term must be 0");
    if (f.at(1).is_zero()) throw std::domain_error("revert_fixed_point: vanishing linear coefficient");
    int n = f.order();
    S inv1 = S(1) / f.at(1);
    PowerSeries<S> g(n);
    g.set(1, inv1);
    for (int m = 2; m <= n; ++m) {
        PowerSeries<S> h = compose(f, g);
        g.set(m, -(inv1 * h.at(m)));
    }
    return g;
}

using CoeffStream = std::function<Rat(long)>;

/// [x^n] (a_1 x + a_2 x^2 + ...)^k, evaluated through truncated series powers.
/// Zero whenever n < k (and for n > 0, k = 0).
Rat demoivre(long n, long k, const CoeffStream& a);

/// All of [x^n] (sum a_j x^j)^k for k = 0..k_max, sharing the power ladder.
std::vector<Rat> demoivre_row(long n, long k_max, const CoeffStream& a);

/// Same coefficient by the explicit finite sum over exponent multisets
/// (j_1 + 2 j_2 + ... = n, j_1 + j_2 + ... = k). Independent of the series route.
Rat demoivre_multinomial(long n, long k, const CoeffStream& a);

}  // namespace ramastir::algebra
