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

#include "zxamp/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace zxamp {

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }
    bool eat(std::string_view tok) {
        skip_ws();
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!eat(tok))
            throw std::invalid_argument("ExactScalar: expected '" + std::string(tok) +
                                        "' at offset " + std::to_string(pos));
    }
    std::string integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) pos++;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("ExactScalar: expected integer at offset " +
                                        std::to_string(start));
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

ExactScalar ExactScalar::parse(std::string_view text) {
    Cursor c{text};
    c.expect("2^(");
    std::string p = c.integer();
    c.expect("/2)");
    c.expect("*");
    c.expect("(");
    std::string a = c.integer();
    c.expect("+");
    std::string b = c.integer();
    c.expect("*w");
    c.expect("+");
    std::string cc = c.integer();
    c.expect("*w^2");
    c.expect("+");
    std::string d = c.integer();
    c.expect("*w^3");
    c.expect(")");
    c.skip_ws();
    if (c.pos != text.size())
        throw std::invalid_argument("ExactScalar: trailing characters");

    ExactScalar r;
    r.coeffs_[0] = BigInt::from_string(a);
    r.coeffs_[1] = BigInt::from_string(b);
    r.coeffs_[2] = BigInt::from_string(cc);
    r.coeffs_[3] = BigInt::from_string(d);
    r.half_power_ = std::stoll(p);
    r.canonicalize();
    return r;
}

} // namespace zxamp
