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

#ifndef GHZKIT_TESTS_SUPPORT_HPP
#define GHZKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <complex>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "ghzkit/gates.hpp"

namespace ghzkit {

inline void PrintTo(const DenseMatrix &m, std::ostream *os) {
    *os << "\n" << m.str();
}

inline void PrintTo(const StateVector &v, std::ostream *os) {
    *os << v.str();
}

}  // namespace ghzkit

namespace ghzkit::testutil {

inline RingScalar random_scalar(std::mt19937_64 &rng, int span = 20, int max_k = 6) {
    std::uniform_int_distribution<int64_t> coef(-span, span);
    std::uniform_int_distribution<int64_t> kk(0, max_k);
    return RingScalar(coef(rng), coef(rng), coef(rng), coef(rng), kk(rng));
}

/// Exact single-qubit unitary as a random word in H, S, T, X.
inline DenseMatrix random_exact_unitary_1(std::mt19937_64 &rng, int length = 12) {
    static const DenseMatrix gens[4] = {gates::H(), gates::S(), gates::T(), gates::X()};
    std::uniform_int_distribution<int> pick(0, 3);
    DenseMatrix u = DenseMatrix::identity(1);
    for (int t = 0; t < length; t++) {
        u = gens[pick(rng)] * u;
    }
    return u;
}

/// Random Clifford circuit on n qubits from H, S and CNOT.
inline DenseMatrix random_clifford(std::mt19937_64 &rng, int n, int length = 20) {
    std::uniform_int_distribution<int> kind(0, 2), site(1, n);
    DenseMatrix u = DenseMatrix::identity(n);
    for (int t = 0; t < length; t++) {
        int k = kind(rng), a = site(rng);
        if (k == 0) {
            u = embed(gates::H(), {a}, n) * u;
        } else if (k == 1) {
            u = embed(gates::S(), {a}, n) * u;
        } else if (n > 1) {
            int b = site(rng);
            while (b == a) {
                b = site(rng);
            }
            u = controlled(gates::X(), a, b, n) * u;
        }
    }
    return u;
}

inline std::vector<uint32_t> random_permutation(std::mt19937_64 &rng, uint32_t dim) {
    std::vector<uint32_t> p(dim);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline std::vector<RingScalar> random_phases(std::mt19937_64 &rng, uint32_t dim) {
    std::uniform_int_distribution<int> e(0, 7);
    std::vector<RingScalar> out;
    for (uint32_t t = 0; t < dim; t++) {
        out.push_back(RingScalar::omega(e(rng)));
    }
    return out;
}

}  // namespace ghzkit::testutil

#endif
