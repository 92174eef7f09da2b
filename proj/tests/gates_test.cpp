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

#include <random>

#include "ghzkit/gates.hpp"
#include "ghzkit/ghzbell.hpp"
#include "test_support.hpp"

using namespace ghzkit;

namespace {

const RingScalar h = RingScalar::inv_sqrt2();
const RingScalar i = RingScalar::i();
const RingScalar w = RingScalar::omega(1);

DenseMatrix random_block(std::mt19937_64 &rng) {
    return testutil::random_exact_unitary_1(rng, 8);
}

}  // namespace

TEST(Gates, ReferenceTwoQubitMatrices) {
    EXPECT_EQ(make_gate("C_H"), DenseMatrix::from_rows(2, {{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 0, -1}, {1, 0, -1, 0}}, h));
    EXPECT_EQ(make_gate("B"), DenseMatrix::from_rows(2, {{1, 0, 0, 1}, {0, 1, -1, 0}, {0, 1, 1, 0}, {-1, 0, 0, 1}}, h));
    EXPECT_EQ(make_gate("B'"), DenseMatrix::from_rows(2, {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, 1, 0}, {-1, 0, 0, 1}}, h));
    EXPECT_EQ(make_gate("Q"), DenseMatrix::from_rows(2, {{1, 0, 0, i}, {0, i, 1, 0}, {0, i, -1, 0}, {1, 0, 0, -i}}, h));
    EXPECT_EQ(make_gate("R"), DenseMatrix::from_rows(2, {{1, 0, 0, -i}, {0, -i, -1, 0}, {0, -i, 1, 0}, {1, 0, 0, i}}, h));
    EXPECT_EQ(make_gate("C_HT"),
              DenseMatrix::from_rows(2, {{1, 0, w, 0}, {0, 1, 0, w}, {0, 1, 0, -w}, {1, 0, -w, 0}}, h));
}

TEST(Gates, InversesAndAliases) {
    for (const char *g : {"CH", "B", "BP", "Q", "R"}) {
        DenseMatrix u = make_gate(g);
        EXPECT_EQ(make_gate(std::string(g) + "INV") * u, DenseMatrix::identity(2)) << g;
    }
    EXPECT_EQ(make_gate("cx"), gates::CNOT());
    EXPECT_EQ(make_gate("b_n:2"), gates::B());
    EXPECT_THROW(make_gate("NOPE"), std::invalid_argument);
}

TEST(Gates, CatalogEntriesAreUnitaryAndTagsAgreeWithPredicates) {
    for (const auto &[key, e] : gate_catalog()) {
        EXPECT_TRUE(is_unitary(e.matrix)) << key;
        EXPECT_EQ(is_clifford(e.matrix), e.tags.clifford) << key;
        if (e.matrix.qubits() == 2) {
            EXPECT_EQ(is_parity_preserving(e.matrix), e.tags.parity_preserving) << key;
            EXPECT_EQ(is_matchgate(e.matrix), e.tags.matchgate) << key;
            EXPECT_EQ(try_factor_transform(e.matrix).has_value(), e.tags.bell_transform) << key;
        }
    }
}

TEST(Gates, TransformClasses) {
    struct Row {
        const char *gate;
        bool clifford, parity, match;
    };
    const Row rows[] = {{"CHT", false, false, false}, {"CH", true, false, false}, {"R", true, true, false},
                        {"B", true, true, true},      {"BP", true, true, true},   {"Q", true, true, true},
                        {"BT", false, true, true},    {"RT", false, true, false}};
    for (const auto &r : rows) {
        Classification c = classify(make_gate(r.gate));
        EXPECT_TRUE(c.ghz_transform) << r.gate;
        EXPECT_EQ(c.clifford, r.clifford) << r.gate;
        EXPECT_EQ(c.parity_preserving, r.parity) << r.gate;
        EXPECT_EQ(c.matchgate, r.match) << r.gate;
    }
}

TEST(Gates, ReferenceFactorizations) {
    GhzFactorization b = factor_transform(gates::B());
    EXPECT_EQ(b.perm, (std::vector<uint32_t>{2, 1, 3, 0}));
    EXPECT_EQ(b.phase, (std::vector<RingScalar>{1, 1, -1, 1}));
    GhzFactorization q = factor_transform(gates::Q());
    EXPECT_EQ(q.perm, (std::vector<uint32_t>{0, 1, 3, 2}));
    EXPECT_EQ(q.phase, (std::vector<RingScalar>{1, i, 1, i}));
    GhzFactorization r = factor_transform(gates::R());
    EXPECT_EQ(r.perm, prefix_xor_permutation(2));
    EXPECT_EQ(r.phase, (std::vector<RingScalar>{1, -i, -1, -i}));
    EXPECT_TRUE(factor_transform(gates::CH()).phase == std::vector<RingScalar>(4, RingScalar(1)));
}

TEST(GatesProperty, ParityGateProductLaw) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; t++) {
        DenseMatrix a = random_block(rng), b = random_block(rng), c = random_block(rng), d = random_block(rng);
        DenseMatrix g = parity_gate(a, b);
        EXPECT_EQ(g * parity_gate(c, d), parity_gate(a * c, b * d));
        EXPECT_TRUE(is_parity_preserving(g));
        auto [pa, pb] = parity_blocks(g);
        EXPECT_EQ(pa, a);
        EXPECT_EQ(pb, b);
        EXPECT_EQ(is_matchgate(g), determinant(a) == determinant(b));
        EXPECT_TRUE(is_matchgate(parity_gate(a, scale(a, RingScalar(1)))));
    }
    EXPECT_THROW(parity_blocks(gates::CNOT()), std::invalid_argument);
}

TEST(Gates, FamiliesAtTwoQubits) {
    EXPECT_EQ(family_gate(Family::CH_N, 2), gates::CH());
    EXPECT_EQ(family_gate(Family::B_N, 2), gates::B());
    EXPECT_EQ(family_gate(Family::BPRIME_N, 2), gates::Bp());
    EXPECT_EQ(family_gate(Family::RPRIME_N, 2), tensor(gates::Z(), DenseMatrix::identity(1)) * gates::Bp());
    EXPECT_EQ(family_gate(Family::R_N, 2), gates::R());
    EXPECT_THROW(family_gate(Family::B_N, 1), std::out_of_range);
}

TEST(GatesProperty, FamiliesAreCliffordGhzTransforms) {
    for (Family f : {Family::CH_N, Family::B_N, Family::BPRIME_N, Family::RPRIME_N, Family::R_N}) {
        for (int n = 2; n <= 5; n++) {
            DenseMatrix u = family_gate(f, n);
            EXPECT_TRUE(is_unitary(u)) << family_name(f) << n;
            EXPECT_TRUE(is_clifford(u)) << family_name(f) << n;
            auto fac = try_factor_transform(u);
            ASSERT_TRUE(fac.has_value()) << family_name(f) << n;
            EXPECT_EQ(fac->rebuild(), u);
        }
    }
    for (const char *name : {"ch_n", "B_N", "bp_n", "RPRIME_N", "r_n"}) {
        EXPECT_TRUE(parse_family(name).has_value()) << name;
        EXPECT_EQ(parse_family(family_name(*parse_family(name))), parse_family(name));
    }
}

TEST(Gates, PermutationAndPhaseGates) {
    EXPECT_EQ(gates::Toffoli() * StateVector::basis(3, 6), StateVector::basis(3, 7));
    EXPECT_EQ(gates::Fredkin() * StateVector::basis(3, 5), StateVector::basis(3, 6));
    EXPECT_THROW(permutation_gate(1, {0, 0}), std::invalid_argument);
    EXPECT_THROW(phase_gate(1, {1, 2}), std::invalid_argument);
    EXPECT_THROW(transposition_gate(2, 4), std::out_of_range);
    std::mt19937_64 rng(42);
    auto p = testutil::random_permutation(rng, 8);
    DenseMatrix pg = permutation_gate(3, p);
    for (uint32_t j = 0; j < 8; j++) {
        EXPECT_EQ(pg * StateVector::basis(3, j), StateVector::basis(3, p[j]));
    }
}

TEST(Gates, GeneralizedBellBuildsQ) {
    // Q|k,l> = i^l |psi(k, k+l)>; the phase is read off the image label (k, k+l).
    DenseMatrix id = DenseMatrix::identity(1);
    DenseMatrix q = generalized_bell([](int k, int l) { return i_pow(k ^ l); }, [&](int, int) { return id; },
                                     [&](int, int) { return id; },
                                     [](int in) { return (in & 2) | (((in >> 1) ^ in) & 1); });
    EXPECT_EQ(q, gates::Q());
    EXPECT_THROW(generalized_bell([](int, int) { return RingScalar(1); }, [&](int, int) { return id; },
                                  [&](int, int) { return id; }, [](int) { return 0; }),
                 std::invalid_argument);
}

TEST(Gates, GeneralizedBellIdentityLabelsGiveCH) {
    DenseMatrix id = DenseMatrix::identity(1);
    DenseMatrix u = generalized_bell([](int, int) { return RingScalar(1); }, [&](int, int) { return id; },
                                     [&](int, int) { return id; }, [](int in) { return in; });
    EXPECT_EQ(u, gates::CH());
}
