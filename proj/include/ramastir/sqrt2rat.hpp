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

#include "ramastir/rat.hpp"

namespace ramastir::algebra {

/// Element a + b*sqrt(2) of the quadratic field Q(sqrt 2). All ring and field
/// operations are exact; a value is rational iff b == 0.
class Sqrt2Rat {
  public:
    Sqrt2Rat() = default;
    Sqrt2Rat(int n) : a_(n) {}
    Sqrt2Rat(long n) : a_(n) {}
    Sqrt2Rat(Rat a) : a_(std::move(a)) {}
    Sqrt2Rat(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// The rational part of a value known to be rational.
    const Rat& rational_part() const {
        if (!b_.is_zero()) throw std::domain_error("Sqrt2Rat: value has a nonzero sqrt2 component");
        return a_;
    }

    Sqrt2Rat operator-() const { return {-a_, -b_}; }
    Sqrt2Rat& operator+=(const Sqrt2Rat& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Sqrt2Rat& operator-=(const Sqrt2Rat& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Sqrt2Rat& operator*=(const Sqrt2Rat& o) {
        // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s  with s^2 = 2
        Rat na = a_ * o.a_ + Rat(2) * b_ * o.b_;
        Rat nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    Sqrt2Rat& operator/=(const Sqrt2Rat& o) { return *this *= o.inverse(); }

    friend Sqrt2Rat operator+(Sqrt2Rat x, const Sqrt2Rat& y) { return x += y; }
    friend Sqrt2Rat operator-(Sqrt2Rat x, const Sqrt2Rat& y) { return x -= y; }
    friend Sqrt2Rat operator*(Sqrt2Rat x, const Sqrt2Rat& y) { return x *= y; }
    friend Sqrt2Rat operator/(Sqrt2Rat x, const Sqrt2Rat& y) { return x /= y; }

    friend bool operator==(const Sqrt2Rat& x, const Sqrt2Rat& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Sqrt2Rat& x, const Sqrt2Rat& y) { return !(x == y); }

    Sqrt2Rat conjugate() const { return {a_, -b_}; }

    Sqrt2Rat inverse() const {
        // Norm a^2 - 2 b^2 vanishes only at zero since sqrt2 is irrational.
        Rat norm = a_ * a_ - Rat(2) * b_ * b_;
        if (norm.is_zero()) throw std::domain_error("Sqrt2Rat: inverse of zero");
        return {a_ / norm, -b_ / norm};
    }

    Sqrt2Rat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Sqrt2Rat r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// (sqrt 2)^k for any integer k, e.g. k = -1 gives sqrt2/2.
    static Sqrt2Rat sqrt2_pow(long k) {
        if (k < 0) return sqrt2().pow(k);
        Rat two_half = Rat(BigInt(1) << static_cast<unsigned long>(k / 2));
        if (k % 2 == 0) return {two_half, Rat(0)};
        return {Rat(0), two_half};
    }

    static Sqrt2Rat sqrt2() { return {Rat(0), Rat(1)}; }

    /// Renders "a+b*sqrt2" with both parts in p/q form. Lossless.
    std::string str() const { return a_.str() + "+" + b_.str() + "*sqrt2"; }

    static std::optional<Sqrt2Rat> parse(std::string_view s);

  private:
    Rat a_;
    Rat b_;
};

inline std::optional<Sqrt2Rat> Sqrt2Rat::parse(std::string_view s) {
    constexpr std::string_view suffix = "*sqrt2";
    if (s.size() < suffix.size() || s.substr(s.size() - suffix.size()) != suffix) return std::nullopt;
    s.remove_suffix(suffix.size());
    auto plus = s.find('+');  // the rational part never contains '+'
    if (plus == std::string_view::npos) return std::nullopt;
    auto a = Rat::parse(s.substr(0, plus));
    auto b = Rat::parse(s.substr(plus + 1));
    if (!a || !b) return std::nullopt;
    return Sqrt2Rat(*a, *b);
}

}  // namespace ramastir::algebra
