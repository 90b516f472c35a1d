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

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace zxamp {

// Signed arbitrary-precision integer, sign-magnitude with 32-bit limbs.
// Term weights in deep decomposition trees overflow fixed-width integers,
// so scalar coefficients use this type throughout.
class BigInt {
  public:
    BigInt() = default;
    BigInt(int64_t v) {
        if (v < 0) {
            neg_ = true;
            // avoid overflow on INT64_MIN
            uint64_t m = static_cast<uint64_t>(-(v + 1)) + 1;
            push64(m);
        } else {
            push64(static_cast<uint64_t>(v));
        }
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1) == 0; }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.neg_ = b.neg_;
        }
        if (r.limbs_.empty()) r.neg_ = false;
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); i++) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); j++) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.limbs_.size();
            while (carry) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                k++;
            }
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // exact division by 2; caller must check is_even
    void halve() {
        uint32_t carry = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint32_t cur = limbs_[i];
            limbs_[i] = (cur >> 1) | (carry << 31);
            carry = cur & 1;
        }
        trim();
        if (limbs_.empty()) neg_ = false;
    }

    void double_in_place() {
        uint32_t carry = 0;
        for (auto& l : limbs_) {
            uint32_t nc = l >> 31;
            l = (l << 1) | carry;
            carry = nc;
        }
        if (carry) limbs_.push_back(carry);
    }

    // value = returned double * 2^{*exp2_out}; keeps ~96 significant bits
    double to_double_scaled(int64_t* exp2_out) const {
        if (is_zero()) {
            *exp2_out = 0;
            return 0.0;
        }
        size_t take = std::min<size_t>(limbs_.size(), 3);
        size_t skip = limbs_.size() - take;
        double m = 0;
        for (size_t i = limbs_.size(); i-- > skip;)
            m = m * 4294967296.0 + limbs_[i];
        *exp2_out = static_cast<int64_t>(skip) * 32;
        return neg_ ? -m : m;
    }

    double to_double() const {
        int64_t e;
        double m = to_double_scaled(&e);
        return std::ldexp(m, static_cast<int>(e));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> work = limbs_;
        std::string digits;
        while (!work.empty()) {
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            char buf[16];
            if (work.empty())
                snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(rem));
            else
                snprintf(buf, sizeof buf, "%09llu", static_cast<unsigned long long>(rem));
            digits = std::string(buf) + digits;
        }
        return neg_ ? "-" + digits : digits;
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            i++;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
        for (; i < s.size(); i++) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(s[i] - '0');
        }
        if (neg && !r.is_zero()) r.neg_ = true;
        return r;
    }

    // fits in int64? (for tests/diagnostics)
    bool fits_int64() const {
        if (limbs_.size() > 2) return false;
        uint64_t m = mag64();
        return neg_ ? m <= (1ULL << 63) : m < (1ULL << 63);
    }
    int64_t as_int64() const {
        uint64_t m = mag64();
        return neg_ ? -static_cast<int64_t>(m) : static_cast<int64_t>(m);
    }

  private:
    std::vector<uint32_t> limbs_; // little-endian, no trailing zeros
    bool neg_ = false;

    uint64_t mag64() const {
        uint64_t m = 0;
        if (limbs_.size() > 1) m = static_cast<uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) m |= limbs_[0];
        return m;
    }
    void push64(uint64_t m) {
        while (m) {
            limbs_.push_back(static_cast<uint32_t>(m));
            m >>= 32;
        }
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); i++) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry +
                           (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // a - b with |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); i++) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

} // namespace zxamp
