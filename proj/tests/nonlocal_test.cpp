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

#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "ghzkit/nonlocal.hpp"

using namespace ghzkit;

namespace {

constexpr double q = std::numbers::pi / 4;

Mat4c kron2(const Mat2c &a, const Mat2c &b) {
    Mat4c out;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
        }
    }
    return out;
}

// exp(i(a XX + b YY + c ZZ)) with the Hermitian Y.
Mat4c canonical_gate(double a, double b, double c) {
    Mat2c x, y, z;
    x << 0, 1, 1, 0;
    y << 0, cplx(0, -1), cplx(0, 1), 0;
    z << 1, 0, 0, -1;
    Mat4c h = a * kron2(x, x) + b * kron2(y, y) + c * kron2(z, z);
    return (cplx(0, 1) * h).exp();
}

Mat4c dress(const Mat4c &u, std::mt19937_64 &rng) {
    return kron2(haar_unitary_2(rng), haar_unitary_2(rng)) * u * kron2(haar_unitary_2(rng), haar_unitary_2(rng));
}

void expect_params(const NonlocalParams &got, double a, double b, double c, double tol = 1e-8) {
    EXPECT_NEAR(got.a, a, tol) << str(got);
    EXPECT_NEAR(got.b, b, tol) << str(got);
    EXPECT_NEAR(got.c, c, tol) << str(got);
}

}  // namespace

TEST(Nonlocal, StandardGates) {
    expect_params(nonlocal_params(DenseMatrix::identity(2)), 0, 0, 0);
    expect_params(nonlocal_params(gates::CNOT()), q, 0, 0);
    expect_params(nonlocal_params(gates::CZ()), q, 0, 0);
    expect_params(nonlocal_params(gates::SWAP()), q, q, q);
    EXPECT_NEAR(entangling_power(DenseMatrix::identity(2)), 0, 1e-12);
    EXPECT_NEAR(entangling_power(gates::SWAP()), 0, 1e-12);
    EXPECT_NEAR(entangling_power(gates::CNOT()), 1, 1e-12);
}

TEST(Nonlocal, RejectsBadInput) {
    EXPECT_THROW(nonlocal_params(gates::H()), std::invalid_argument);
    EXPECT_THROW(nonlocal_params(gates::CNOT() + gates::CZ()), std::invalid_argument);
    EXPECT_THROW(entangling_power_oracle(to_eigen(gates::CNOT()), 0, uint64_t{1}), std::invalid_argument);
}

TEST(Nonlocal, WeylChamberFolding) {
    auto c1 = weyl_canonicalize({-q / 2, 0, 0});
    expect_params(c1, q / 2, 0, 0);
    auto c2 = weyl_canonicalize({0.1, 0.3, 0.2});
    expect_params(c2, 0.3, 0.2, 0.1);
    auto c3 = weyl_canonicalize({q, 0.1, -0.05});
    expect_params(c3, q, 0.1, 0.05);
    auto c4 = weyl_canonicalize({0.3, 0.1, -0.05});
    expect_params(c4, 0.3, 0.1, -0.05);
    auto c5 = weyl_canonicalize({0.3 + 2 * q, 0.1, 0.05});
    expect_params(c5, 0.3, 0.1, 0.05);
    EXPECT_TRUE(weyl_equivalent({q, 0, 0}, {-q, 0, 0}));
    EXPECT_FALSE(weyl_equivalent({q, 0, 0}, {q, q, 0}));
}

TEST(NonlocalProperty, RecoversDressedCanonicalGates) {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int t = 0; t < 100; t++) {
        double a = q * unit(rng);
        double b = a * unit(rng);
        double c = b * (2 * unit(rng) - 1);
        if (a > q - 1e-6) {
            c = std::abs(c);
        }
        Mat4c u = dress(canonical_gate(a, b, c), rng);
        NonlocalParams got = nonlocal_params(u);
        EXPECT_TRUE(weyl_equivalent(got, {a, b, c}, 1e-8)) << str(got) << " vs " << a << " " << b << " " << c;
    }
}

TEST(NonlocalProperty, EntanglingPowerFormulaMatchesSampling) {
    std::mt19937_64 rng(72);
    std::uniform_real_distribution<double> unit(0, 1);
    const long samples = 40000;
    for (int t = 0; t < 5; t++) {
        double a = q * unit(rng), b = a * unit(rng), c = b * unit(rng);
        Mat4c u = dress(canonical_gate(a, b, c), rng);
        double formula = entangling_power(u);
        double sampled = entangling_power_oracle(u, samples, rng);
        EXPECT_NEAR(formula, sampled, 5 / std::sqrt((double)samples));
    }
    EXPECT_NEAR(entangling_power_oracle(gates::CNOT(), 40000, 7), 1.0, 0.03);
}

TEST(NonlocalProperty, LocalUnitariesLeaveParametersFixed) {
    std::mt19937_64 rng(73);
    for (const char *g : {"B", "Q", "R", "CH", "CHT", "BT", "RT"}) {
        Mat4c u = to_eigen(make_gate(g));
        NonlocalParams ref = nonlocal_params(u);
        for (int t = 0; t < 20; t++) {
            EXPECT_TRUE(weyl_equivalent(nonlocal_params(dress(u, rng)), ref, 1e-8)) << g;
        }
    }
}

TEST(NonlocalProperty, HaarSamplersAreUnitary) {
    std::mt19937_64 rng(74);
    for (int t = 0; t < 50; t++) {
        EXPECT_TRUE(is_unitary_numeric(haar_unitary_2(rng)));
        EXPECT_NEAR(haar_qubit_state(rng).norm(), 1.0, 1e-12);
    }
    Eigen::Vector4cd bell(1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0));
    EXPECT_NEAR(linear_entropy(bell), 0.5, 1e-12);
    EXPECT_NEAR(linear_entropy(Eigen::Vector4cd(1, 0, 0, 0)), 0.0, 1e-12);
}
