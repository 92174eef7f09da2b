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

#ifndef GHZKIT_EXPONENTIAL_HPP
#define GHZKIT_EXPONENTIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ghzkit/matrix.hpp"
#include "ghzkit/pauli.hpp"

namespace ghzkit {

/// mult * word, where word carries its own i^s and must square to -I.
struct PauliTerm {
    int64_t mult = 1;
    PauliWord word;
};

inline RingScalar cos_quarter_pi(int64_t e) {
    static const int sgn[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    int64_t r = ((e % 8) + 8) % 8;
    return (r % 2) ? RingScalar(sgn[r]) * RingScalar::inv_sqrt2() : RingScalar(sgn[r]);
}

inline RingScalar sin_quarter_pi(int64_t e) {
    return cos_quarter_pi(e - 2);
}

/// exp((k pi/4) * sum_t mult_t N_t) for pairwise commuting N_t with N_t^2 = -I.
inline DenseMatrix exp_commuting_pauli_sum(int64_t k, const std::vector<PauliTerm> &terms) {
    if (terms.empty()) {
        throw std::invalid_argument("empty pauli sum");
    }
    int n = terms[0].word.n;
    for (size_t a = 0; a < terms.size(); a++) {
        const PauliWord &w = terms[a].word;
        if (w.n != n) {
            throw std::invalid_argument("pauli sum terms differ in size");
        }
        if (w * w != PauliWord::identity(n).with_phase(2)) {
            throw std::invalid_argument("pauli term does not square to -I; fold a factor of i into it");
        }
        for (size_t b = 0; b < a; b++) {
            if (!commutes(w, terms[b].word)) {
                throw std::invalid_argument("pauli sum terms do not commute");
            }
        }
    }
    DenseMatrix out = DenseMatrix::identity(n);
    for (const auto &t : terms) {
        int64_t e = detail::checked_mul(k, t.mult);
        DenseMatrix f = scale(DenseMatrix::identity(n), cos_quarter_pi(e)) + scale(to_matrix(t.word), sin_quarter_pi(e));
        out = out * f;
    }
    return out;
}

/// Time-ordered evolution under piecewise-constant Hamiltonians: segment j applies exp(-i d_j pi/4 H_j),
/// later segments to the left. Each H_j is a sum of commuting Hermitian words times integers.
struct HamiltonianSegment {
    std::vector<PauliTerm> hamiltonian;  // Hermitian words: each squares to +I
    int64_t quarter_pi_duration = 1;
};

inline DenseMatrix evolve_piecewise(const std::vector<HamiltonianSegment> &segments) {
    if (segments.empty()) {
        throw std::invalid_argument("no evolution segments");
    }
    DenseMatrix u;
    bool first = true;
    for (const auto &seg : segments) {
        std::vector<PauliTerm> folded;
        for (const auto &t : seg.hamiltonian) {
            // -i H with H^2 = I gives N with N^2 = -I.
            folded.push_back({t.mult, t.word * PauliWord::identity(t.word.n).with_phase(3)});
        }
        DenseMatrix step = exp_commuting_pauli_sum(seg.quarter_pi_duration, folded);
        u = first ? step : step * u;
        first = false;
    }
    return u;
}

}  // namespace ghzkit

#endif
