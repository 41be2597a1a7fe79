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

#include <vector>

#include "ramastir/rat.hpp"

namespace ramastir::algebra {

/// Dense polynomial over Rat, trailing zeros trimmed.
/// degree() of the zero polynomial is the sentinel -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rat v) { return Poly(std::vector<Rat>{std::move(v)}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i; zero outside the stored range.
    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<Rat> c(std::max(p.c_.size(), q.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<Rat> c(p.c_.size() + q.c_.size() - 1);
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Rat& s, const Poly& p) {
        Poly r = p;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace ramastir::algebra
