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

#include <Eigen/Dense>
#include <numbers>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "ghzkit/expression.hpp"
#include "ghzkit/identities.hpp"
#include "ghzkit/nonlocal.hpp"
#include "test_support.hpp"

using namespace ghzkit;
using C = std::complex<double>;

namespace {

// Numeric exp of a Pauli string built from Eigen matrices, independent of the exact closed form.
MatXc pauli_num(const std::string &word) {
    MatXc x(2, 2), y(2, 2), z(2, 2), id = MatXc::Identity(2, 2);
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    y = z * x;
    MatXc acc = MatXc::Identity(1, 1);
    for (char c : word) {
        const MatXc &f = c == 'X' ? x : c == 'Y' ? y : c == 'Z' ? z : id;
        MatXc next(acc.rows() * 2, acc.cols() * 2);
        for (Eigen::Index r = 0; r < acc.rows(); r++) {
            for (Eigen::Index k = 0; k < acc.cols(); k++) {
                next.block(2 * r, 2 * k, 2, 2) = acc(r, k) * f;
            }
        }
        acc = next;
    }
    return acc;
}

bool close(const DenseMatrix &a, const MatXc &b) {
    return (to_eigen(a) - b).norm() < 1e-9;
}

}  // namespace

TEST(Expression, ProductReadsLeftToRight) {
    EXPECT_EQ(evaluate("CNOT12 H1", 2), gates::CNOT() * tensor(gates::H(), DenseMatrix::identity(1)));
    EXPECT_EQ(evaluate("H1 H1", 1), DenseMatrix::identity(1));
    EXPECT_EQ(evaluate("(X1 Z1) (X1 Z1)", 1), scale(DenseMatrix::identity(1), RingScalar(-1)));
    EXPECT_EQ(evaluate("CNOT21", 2), controlled(gates::X(), 2, 1, 2));
    EXPECT_EQ(evaluate("B", 2), gates::B());
}

TEST(Expression, ScalarFactors) {
    DenseMatrix id = DenseMatrix::identity(1);
    EXPECT_EQ(evaluate("-", 1), scale(id, RingScalar(-1)));
    EXPECT_EQ(evaluate("i", 1), scale(id, RingScalar::i()));
    EXPECT_EQ(evaluate("- i", 1), scale(id, -RingScalar::i()));
    EXPECT_EQ(evaluate("w^3", 1), scale(id, RingScalar::omega(3)));
    EXPECT_EQ(evaluate("w^-1 w^1", 1), id);
}

TEST(Expression, ControlledAndTransposition) {
    EXPECT_EQ(evaluate("ctrl[1,2]{X1}", 2), gates::CNOT());
    EXPECT_EQ(evaluate("ctrl[1,2]{Z1}", 2), gates::CZ());
    EXPECT_EQ(evaluate("ctrl[2,1]{ -i }", 2), controlled(scale(DenseMatrix::identity(1), -RingScalar::i()), 2, 1, 2));
    EXPECT_EQ(evaluate("transp[3]", 2), gates::CNOT());
    EXPECT_EQ(evaluate("CH_N", 3), family_gate(Family::CH_N, 3));
}

TEST(Expression, ExponentialMatchesMatrixExp) {
    const double q = std::numbers::pi / 4;
    const C I(0, 1);
    EXPECT_TRUE(close(evaluate("exp[pi/4: YX]", 2), (q * pauli_num("YX")).exp()));
    EXPECT_TRUE(close(evaluate("exp[-i*pi/4: iXY]", 2), (-I * q * I * pauli_num("XY")).exp()));
    EXPECT_TRUE(close(evaluate("exp[-i*pi/4: 2ZI + IZ]", 2),
                      (-I * q * (2.0 * pauli_num("ZI") + pauli_num("IZ"))).exp()));
    EXPECT_TRUE(close(evaluate("exp[i*3pi/4: XX - ZZ]", 2), (I * 3.0 * q * (pauli_num("XX") - pauli_num("ZZ"))).exp()));
    EXPECT_TRUE(close(evaluate("evolve[ZI @ pi/4; XX - ZZ @ 2pi/4]", 2),
                      (-I * 2.0 * q * (pauli_num("XX") - pauli_num("ZZ"))).exp() * (-I * q * pauli_num("ZI")).exp()));
}

TEST(Expression, ExponentialRejectsBadSums) {
    EXPECT_THROW(evaluate("exp[pi/4: XX + ZI]", 2), std::invalid_argument);
    EXPECT_THROW(evaluate("exp[pi/4: XX]", 2), std::invalid_argument);
    EXPECT_THROW(evaluate("exp[pi/4: XXX]", 2), std::invalid_argument);
    EXPECT_THROW(evaluate("evolve[ZI @ i*pi/4]", 2), ExprError);
}

TEST(Expression, ParseErrorsCarryOffsets) {
    try {
        evaluate("CNOT12 FOO1", 2);
        FAIL() << "accepted unknown gate";
    } catch (const ExprError &e) {
        EXPECT_EQ(e.offset, 7u);
    }
    EXPECT_THROW(evaluate("", 1), ExprError);
    EXPECT_THROW(evaluate("(H1", 1), ExprError);
    EXPECT_THROW(evaluate("ctrl[1]{X1}", 2), ExprError);
    EXPECT_THROW(evaluate("H1 $", 1), ExprError);
    EXPECT_THROW(evaluate("CNOT1", 2), std::invalid_argument);
    EXPECT_THROW(evaluate("B", 3), std::invalid_argument);
}

TEST(Expression, QuarterPiTrigTable) {
    for (int e = -8; e <= 8; e++) {
        EXPECT_NEAR(cos_quarter_pi(e).to_complex().real(), std::cos(e * std::numbers::pi / 4), 1e-12);
        EXPECT_NEAR(sin_quarter_pi(e).to_complex().real(), std::sin(e * std::numbers::pi / 4), 1e-12);
    }
}

TEST(Identities, RegistryBehavesAsRecorded) {
    for (const auto &id : identity_registry()) {
        IdentityResult r = verify_identity(id);
        EXPECT_TRUE(r.as_expected) << id.name << " holds=" << r.holds;
    }
    EXPECT_FALSE(verify_identity("b_clifford_circuit_cnot21_counterexample").holds);
    EXPECT_FALSE(verify_identity("r_clifford_circuit_s_counterexample").holds);
    EXPECT_THROW(find_identity("no_such_identity"), std::out_of_range);
}

TEST(Identities, ParityCircuitReproducesTransforms) {
    for (const char *g : {"B", "Q", "R", "BT", "RT", "CZ", "SWAP"}) {
        DenseMatrix u = make_gate(g);
        auto [a, b] = parity_blocks(u);
        EXPECT_EQ(parity_gate_circuit(a, b), u) << g;
    }
}

TEST(Identities, YangBaxter) {
    for (const char *g : {"B", "BINV", "BP", "BPINV", "SWAP"}) {
        EXPECT_TRUE(yang_baxter_holds(make_gate(g))) << g;
    }
    for (const char *g : {"CNOT", "CH", "Q"}) {
        EXPECT_FALSE(yang_baxter_holds(make_gate(g))) << g;
    }
    EXPECT_THROW(yang_baxter_holds(gates::H()), std::invalid_argument);
}
