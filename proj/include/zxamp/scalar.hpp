// Copyright 2026 The zxamp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "zxamp/bigint.hpp"

namespace zxamp {

// Element of Z[w, 1/sqrt2] with w = e^{i pi/4}:
//     2^{p/2} * (a + b w + c w^2 + d w^3)
// Reduction relation: w^4 = -1.  Canonical form: if a,b,c,d are all even and
// not all zero, divide by 2 and add 2 to the half-power; zero is (0,0,0,0)
// with half-power 0.  Values are immutable after construction.
class ExactScalar {
  public:
    ExactScalar() = default; // zero

    static ExactScalar zero() { return ExactScalar(); }
    static ExactScalar one() { return from_phase(0); }

    // w^k
    static ExactScalar from_phase(int k) {
        ExactScalar s;
        k = ((k % 8) + 8) % 8;
        s.coeffs_[k & 3] = BigInt(k < 4 ? 1 : -1);
        return s;
    }

    // 2^{p/2}
    static ExactScalar sqrt2_power(int64_t p) {
        ExactScalar s = one();
        s.half_power_ = p;
        return s;
    }

    static ExactScalar from_int(int64_t v) {
        ExactScalar s;
        s.coeffs_[0] = BigInt(v);
        s.canonicalize();
        return s;
    }

    // 2^{p/2} * (a + b w + c w^2 + d w^3)
    static ExactScalar make(int64_t a, int64_t b, int64_t c, int64_t d, int64_t p = 0) {
        ExactScalar s;
        s.coeffs_ = {BigInt(a), BigInt(b), BigInt(c), BigInt(d)};
        s.half_power_ = p;
        s.canonicalize();
        return s;
    }

    // 1 + w^k  (the value of an isolated spider with phase k pi/4)
    static ExactScalar one_plus_phase(int k) { return one() + from_phase(k); }

    bool is_zero() const {
        return coeffs_[0].is_zero() && coeffs_[1].is_zero() && coeffs_[2].is_zero() &&
               coeffs_[3].is_zero();
    }
    bool is_one() const {
        return half_power_ == 0 && coeffs_[0].is_one() && coeffs_[1].is_zero() &&
               coeffs_[2].is_zero() && coeffs_[3].is_zero();
    }

    int64_t half_power() const { return half_power_; }
    const BigInt& coeff(int i) const { return coeffs_[i]; }

    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        ExactScalar r;
        if (x.is_zero() || y.is_zero()) return r;
        for (int i = 0; i < 4; i++) {
            if (x.coeffs_[i].is_zero()) continue;
            for (int j = 0; j < 4; j++) {
                if (y.coeffs_[j].is_zero()) continue;
                BigInt t = x.coeffs_[i] * y.coeffs_[j];
                int k = i + j;
                if (k >= 4) {
                    k -= 4;
                    t = -t;
                }
                r.coeffs_[k] += t;
            }
        }
        r.half_power_ = x.half_power_ + y.half_power_;
        r.canonicalize();
        return r;
    }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        const ExactScalar* lo = &x;
        const ExactScalar* hi = &y;
        if (lo->half_power_ > hi->half_power_) std::swap(lo, hi);
        ExactScalar r = *lo;
        ExactScalar rb = *hi;
        int64_t diff = hi->half_power_ - lo->half_power_;
        if (diff & 1) {
            // absorb one sqrt2 = w - w^3 into the coefficients
            rb = rb.times_sqrt2_coeffs();
            diff -= 1;
        }
        for (int64_t s = 0; s < diff / 2; s++)
            for (auto& c : rb.coeffs_) c.double_in_place();
        for (int i = 0; i < 4; i++) r.coeffs_[i] += rb.coeffs_[i];
        r.half_power_ = lo->half_power_;
        r.canonicalize();
        return r;
    }

    ExactScalar operator-() const {
        ExactScalar r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        return x + (-y);
    }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }

    // complex conjugate: w -> w^{-1} = -w^3
    ExactScalar conj() const {
        ExactScalar r;
        r.coeffs_[0] = coeffs_[0];
        r.coeffs_[1] = -coeffs_[3];
        r.coeffs_[2] = -coeffs_[2];
        r.coeffs_[3] = -coeffs_[1];
        r.half_power_ = half_power_;
        return r;
    }

    // structural equality of canonical forms (== value equality)
    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        if (x.is_zero() && y.is_zero()) return true;
        if (x.half_power_ != y.half_power_) return false;
        for (int i = 0; i < 4; i++)
            if (!(x.coeffs_[i] == y.coeffs_[i])) return false;
        return true;
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    std::complex<double> to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        // 2^{p/2} [ (a + (b-d)/sqrt2) + i (c + (b+d)/sqrt2) ]
        constexpr double INV_SQRT2 = 0.70710678118654752440;
        int64_t ea, eb, ec, ed;
        double a = coeffs_[0].to_double_scaled(&ea);
        double b = coeffs_[1].to_double_scaled(&eb);
        double c = coeffs_[2].to_double_scaled(&ec);
        double d = coeffs_[3].to_double_scaled(&ed);
        // bring to common exponent (they differ only for very large coefficients)
        int64_t e = std::max(std::max(ea, eb), std::max(ec, ed));
        a = std::ldexp(a, static_cast<int>(ea - e));
        b = std::ldexp(b, static_cast<int>(eb - e));
        c = std::ldexp(c, static_cast<int>(ec - e));
        d = std::ldexp(d, static_cast<int>(ed - e));
        double re = a + (b - d) * INV_SQRT2;
        double im = c + (b + d) * INV_SQRT2;
        double scale = std::pow(2.0, static_cast<double>(half_power_) / 2.0 +
                                          static_cast<double>(e));
        return {re * scale, im * scale};
    }

    // round-trippable textual form: 2^(p/2) * (a + b*w + c*w^2 + d*w^3)
    std::string to_string() const {
        std::string s = "2^(" + std::to_string(half_power_) + "/2) * (";
        s += coeffs_[0].to_string();
        s += " + " + coeffs_[1].to_string() + "*w";
        s += " + " + coeffs_[2].to_string() + "*w^2";
        s += " + " + coeffs_[3].to_string() + "*w^3)";
        return s;
    }
    static ExactScalar parse(std::string_view text);

  private:
    std::array<BigInt, 4> coeffs_ = {BigInt(), BigInt(), BigInt(), BigInt()};
    int64_t half_power_ = 0;

    ExactScalar times_sqrt2_coeffs() const {
        // multiply coefficient vector by (w - w^3), keeping half_power
        ExactScalar r;
        r.half_power_ = half_power_;
        const BigInt& a = coeffs_[0];
        const BigInt& b = coeffs_[1];
        const BigInt& c = coeffs_[2];
        const BigInt& d = coeffs_[3];
        // (a + bw + cw^2 + dw^3)(w - w^3)
        //   = a w + b w^2 + c w^3 + d w^4 - a w^3 - b w^4 - c w^5 - d w^6
        //   = (b - d) + (a + c) w + (b + d) w^2 + (c - a) w^3   [w^4 = -1]
        r.coeffs_[0] = b - d;
        r.coeffs_[1] = a + c;
        r.coeffs_[2] = b + d;
        r.coeffs_[3] = c - a;
        return r;
    }

    // Unique canonical form: extract every sqrt2 = w - w^3 factor. The
    // coefficient vector is divisible by sqrt2 exactly when a+c and b+d are
    // both even; dividing maps (a,b,c,d) to ((b-d)/2, (a+c)/2, (b+d)/2,
    // (c-a)/2). Two applications reproduce the plain divide-by-2 rule.
    void canonicalize() {
        if (is_zero()) {
            half_power_ = 0;
            return;
        }
        for (;;) {
            BigInt ac = coeffs_[0] + coeffs_[2];
            BigInt bd = coeffs_[1] + coeffs_[3];
            if (!ac.is_even() || !bd.is_even()) break;
            BigInt bmd = coeffs_[1] - coeffs_[3];
            BigInt cma = coeffs_[2] - coeffs_[0];
            bmd.halve();
            ac.halve();
            bd.halve();
            cma.halve();
            coeffs_[0] = std::move(bmd);
            coeffs_[1] = std::move(ac);
            coeffs_[2] = std::move(bd);
            coeffs_[3] = std::move(cma);
            half_power_ += 1;
        }
    }
};

} // namespace zxamp
