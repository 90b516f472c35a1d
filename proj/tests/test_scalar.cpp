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

#include <doctest.h>

#include <cmath>

#include "zxamp/rng.hpp"
#include "zxamp/scalar.hpp"

using namespace zxamp;

namespace {

ExactScalar random_scalar(Rng& rng, int64_t coeff_bound = 1000, int64_t hp_bound = 40) {
    auto c = [&] {
        return static_cast<int64_t>(rng.bounded(2 * coeff_bound + 1)) - coeff_bound;
    };
    int64_t p = static_cast<int64_t>(rng.bounded(2 * hp_bound + 1)) - hp_bound;
    return ExactScalar::make(c(), c(), c(), c(), p);
}

bool close(std::complex<double> a, std::complex<double> b, double tol) {
    double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
    return std::abs(a - b) <= tol * scale;
}

} // namespace

TEST_CASE("phase powers") {
    CHECK(ExactScalar::from_phase(0) == ExactScalar::one());
    CHECK(ExactScalar::from_phase(2) == ExactScalar::make(0, 0, 1, 0));
    CHECK(ExactScalar::from_phase(4) == ExactScalar::from_int(-1));
    CHECK(ExactScalar::from_phase(1) * ExactScalar::from_phase(7) == ExactScalar::one());
}

TEST_CASE("sqrt2 arithmetic") {
    auto r2 = ExactScalar::sqrt2_power(1);
    CHECK(r2 * r2 == ExactScalar::from_int(2));
    // w - w^3 is sqrt2
    auto alt = ExactScalar::make(0, 1, 0, -1);
    CHECK(alt * alt == ExactScalar::from_int(2));
    CHECK(alt == r2);
    CHECK(close(r2.to_complex(), {std::sqrt(2.0), 0.0}, 1e-15));
}

TEST_CASE("products and sums from the ring") {
    // (1+w)(1+w^3) = w + w^3 (= i sqrt2)
    auto lhs = ExactScalar::make(1, 1, 0, 0) * ExactScalar::make(1, 0, 0, 1);
    CHECK(lhs == ExactScalar::make(0, 1, 0, 1));
    CHECK(close(lhs.to_complex(), {0.0, std::sqrt(2.0)}, 1e-15));

    CHECK((ExactScalar::one() + ExactScalar::from_int(-1)).is_zero());
    CHECK(ExactScalar::make(1, 1, 0, 0) + ExactScalar::make(1, -1, 0, 0) ==
          ExactScalar::from_int(2));
    auto v = (ExactScalar::one() + ExactScalar::from_phase(1)).to_complex();
    CHECK(close(v, {1.70710678118654752, 0.70710678118654752}, 1e-14));
}

TEST_CASE("canonical form") {
    // all-even coefficients renormalise into the half-power
    auto a = ExactScalar::make(2, 0, 0, 0, 0);
    auto b = ExactScalar::make(1, 0, 0, 0, 2);
    CHECK(a == b);
    CHECK(a.half_power() == 2);
    // zero is unique
    auto z = ExactScalar::make(1, 0, 0, 0, 5) - ExactScalar::make(1, 0, 0, 0, 5);
    CHECK(z.is_zero());
    CHECK(z.half_power() == 0);
    CHECK(z == ExactScalar::zero());
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(7);
    for (int i = 0; i < 300; i++) {
        auto x = random_scalar(rng, 50, 10);
        auto y = random_scalar(rng, 50, 10);
        auto z = random_scalar(rng, 50, 10);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
    }
}

TEST_CASE("to_complex is a ring homomorphism within tolerance") {
    Rng rng(11);
    for (int i = 0; i < 300; i++) {
        auto x = random_scalar(rng);
        auto y = random_scalar(rng);
        CHECK(close((x * y).to_complex(), x.to_complex() * y.to_complex(), 1e-12));
        CHECK(close((x + y).to_complex(), x.to_complex() + y.to_complex(), 1e-12));
    }
}

TEST_CASE("conjugation") {
    Rng rng(13);
    for (int i = 0; i < 100; i++) {
        auto x = random_scalar(rng, 50, 10);
        CHECK(close(x.conj().to_complex(), std::conj(x.to_complex()), 1e-12));
        auto norm = (x * x.conj()).to_complex();
        CHECK(norm.imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("textual form round-trips") {
    Rng rng(17);
    for (int i = 0; i < 100; i++) {
        auto x = random_scalar(rng);
        CHECK(ExactScalar::parse(x.to_string()) == x);
    }
    CHECK(ExactScalar::parse("2^(-3/2) * (1 + -2*w + 0*w^2 + 3*w^3)") ==
          ExactScalar::make(1, -2, 0, 3, -3));
    CHECK_THROWS_AS(ExactScalar::parse("garbage"), std::invalid_argument);
}

TEST_CASE("big coefficients stay exact") {
    // (1 + sqrt2)^64 has ~50-digit coefficients; squaring must stay consistent
    auto x = ExactScalar::make(1, 1, 0, -1); // 1 + sqrt2
    ExactScalar p = ExactScalar::one();
    for (int i = 0; i < 64; i++) p = p * x;
    ExactScalar q = ExactScalar::one();
    for (int i = 0; i < 32; i++) q = q * (x * x);
    CHECK(p == q);
    CHECK(!p.is_zero());
    // numeric magnitude check: log2 |(1+sqrt2)^64| = 64 log2(1+sqrt2)
    double got = std::log2(std::abs(p.to_complex()));
    CHECK(got == doctest::Approx(64 * std::log2(1 + std::sqrt(2.0))).epsilon(1e-9));
}
