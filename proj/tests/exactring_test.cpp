// Copyright 2026 The ghzkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "ghzkit/exactring.hpp"
#include "test_support.hpp"

using namespace ghzkit;
using C = std::complex<double>;

namespace {

// Evaluates (a + b w + c w^2 + d w^3) / sqrt2^k directly from the coefficients.
C oracle(const RingScalar &x) {
    C w = std::polar(1.0, M_PI / 4);
    C v = double(x.a()) + double(x.b()) * w + double(x.c()) * w * w + double(x.d()) * w * w * w;
    return v / std::pow(std::sqrt(2.0), double(x.k()));
}

void expect_close(C got, C want, double tol = 1e-9) {
    EXPECT_NEAR(got.real(), want.real(), tol * (1 + std::abs(want)));
    EXPECT_NEAR(got.imag(), want.imag(), tol * (1 + std::abs(want)));
}

}  // namespace

TEST(RingScalar, OmegaPowers) {
    EXPECT_EQ(RingScalar::omega(2) * RingScalar::omega(2), RingScalar(-1));
    EXPECT_EQ(RingScalar::omega(8), RingScalar(1));
    EXPECT_EQ(RingScalar::omega(-1), RingScalar::omega(7));
    EXPECT_EQ(RingScalar::i(), RingScalar::omega(2));
    for (int e = 0; e < 8; e++) {
        expect_close(RingScalar::omega(e).to_complex(), std::polar(1.0, e * M_PI / 4));
        EXPECT_EQ(RingScalar::omega(e).omega_power(), e);
    }
}

TEST(RingScalar, ConjugationExamples) {
    EXPECT_EQ(RingScalar::omega(2).conj(), -RingScalar::omega(2));
    EXPECT_EQ(RingScalar::inv_sqrt2().conj(), RingScalar::inv_sqrt2());
    EXPECT_EQ(RingScalar::omega(1).conj(), -RingScalar::omega(3));
}

TEST(RingScalar, ToComplexExamples) {
    expect_close(RingScalar().to_complex(), C(0, 0), 1e-15);
    expect_close(RingScalar::omega(1).to_complex(), C(0.7071067811865476, 0.7071067811865476), 1e-15);
    expect_close(RingScalar(1, 0, 0, 0, 1).to_complex(), C(0.7071067811865476, 0.0), 1e-15);
}

TEST(RingScalar, SqrtTwoSquares) {
    EXPECT_EQ(RingScalar::sqrt2() * RingScalar::sqrt2(), RingScalar(2));
    EXPECT_EQ(RingScalar::inv_sqrt2() * RingScalar::inv_sqrt2() * RingScalar(2), RingScalar(1));
    EXPECT_EQ(RingScalar::inv_sqrt2(3).k(), 3);
}

TEST(RingScalar, CanonicalFormIsMinimal) {
    // (2 + 2i)/2 = 1 + i
    RingScalar x(2, 0, 2, 0, 2);
    EXPECT_EQ(x.k(), 0);
    EXPECT_EQ(x, RingScalar(1, 0, 1, 0));
    // sqrt2 = w - w^3 is stored at k = 0
    EXPECT_EQ(RingScalar(2, 0, 0, 0, 1), RingScalar(0, 1, 0, -1));
    EXPECT_EQ(RingScalar(0, 0, 0, 0, 5).k(), 0);
}

TEST(RingScalar, OverflowThrows) {
    RingScalar big(std::numeric_limits<int64_t>::max() / 2 + 1);
    EXPECT_THROW(big + big, RingOverflow);
    EXPECT_THROW(big * RingScalar(3), RingOverflow);
}

TEST(RingScalar, Inverse) {
    EXPECT_EQ(*RingScalar::sqrt2().inverse(), RingScalar::inv_sqrt2());
    EXPECT_EQ(*RingScalar::omega(3).inverse(), RingScalar::omega(5));
    EXPECT_FALSE(RingScalar().inverse().has_value());
    EXPECT_FALSE(RingScalar(3).inverse().has_value());
    RingScalar u = RingScalar(1, 1, 0, 0);  // 1 + w has norm 2 + sqrt2, not a power of two
    auto inv = u.inverse();
    if (inv) {
        EXPECT_EQ(*inv * u, RingScalar(1));
    }
}

TEST(RingScalar, RealSignMatchesFloat) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; t++) {
        RingScalar x = testutil::random_scalar(rng);
        RingScalar re = (x + x.conj()) * RingScalar::inv_sqrt2(2);  // Re(x)
        double f = oracle(re).real();
        if (std::abs(f) > 1e-9) {
            EXPECT_EQ(re.real_sign(), f > 0 ? 1 : -1) << re.str();
        }
    }
    EXPECT_EQ(RingScalar().real_sign(), 0);
    // 3 - 2 sqrt2 is positive but small
    RingScalar tiny = RingScalar(3) - RingScalar(2) * RingScalar::sqrt2();
    EXPECT_EQ(tiny.real_sign(), 1);
    EXPECT_EQ((-tiny).real_sign(), -1);
}

TEST(RingScalarProperty, ArithmeticMatchesComplexOracle) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; t++) {
        RingScalar x = testutil::random_scalar(rng), y = testutil::random_scalar(rng);
        expect_close(oracle(x + y), oracle(x) + oracle(y));
        expect_close(oracle(x - y), oracle(x) - oracle(y));
        expect_close(oracle(x * y), oracle(x) * oracle(y));
        expect_close(oracle(x.conj()), std::conj(oracle(x)));
        expect_close(oracle(x.norm_sq()), C(std::norm(oracle(x)), 0));
        expect_close(x.to_complex(), oracle(x));
    }
}

TEST(RingScalarProperty, RingLaws) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; t++) {
        RingScalar x = testutil::random_scalar(rng), y = testutil::random_scalar(rng), z = testutil::random_scalar(rng);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + RingScalar(), x);
        EXPECT_EQ(x * RingScalar(1), x);
        EXPECT_EQ(x - x, RingScalar());
        EXPECT_EQ(x.conj().conj(), x);
        EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    }
}

TEST(RingScalarProperty, CanonicalRepresentationIsUnique) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; t++) {
        RingScalar x = testutil::random_scalar(rng);
        RingScalar again(x.a(), x.b(), x.c(), x.d(), x.k());
        EXPECT_EQ(again.coeffs(), x.coeffs());
        EXPECT_EQ(again.k(), x.k());
        // Scaling numerator and denominator by sqrt2 lands on the same representative.
        RingScalar scaled = x * RingScalar::sqrt2() * RingScalar::inv_sqrt2();
        EXPECT_EQ(scaled.coeffs(), x.coeffs());
        EXPECT_EQ(scaled.k(), x.k());
    }
}

TEST(RingScalarProperty, GaloisIsARingMap) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 100; t++) {
        RingScalar x = testutil::random_scalar(rng), y = testutil::random_scalar(rng);
        EXPECT_EQ((x * y).galois(), x.galois() * y.galois());
        EXPECT_EQ((x + y).galois(), x.galois() + y.galois());
    }
    // w -> w^3
    EXPECT_EQ(RingScalar::omega(1).galois(), RingScalar::omega(3));
}
