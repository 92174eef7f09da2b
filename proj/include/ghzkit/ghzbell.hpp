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

#ifndef GHZKIT_GHZBELL_HPP
#define GHZKIT_GHZBELL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzkit/gates.hpp"
#include "ghzkit/pauli.hpp"
#include "ghzkit/states.hpp"

namespace ghzkit {

/// Binary value of the label plus one.
inline uint32_t index_J(const GhzLabel &label) {
    return label.bits + 1;
}

/// 2^(n-1) j1 + sum_q 2^(n-q) (j1 + jq mod 2) + 1.
inline uint32_t index_K(const GhzLabel &label) {
    uint32_t k = (uint32_t)label.bit(1) << (label.n - 1);
    for (int q = 2; q <= label.n; q++) {
        k |= (uint32_t)(label.bit(1) ^ label.bit(q)) << (label.n - q);
    }
    return k + 1;
}

/// Piecewise map between the two GHZ labelings.
inline uint32_t j_to_k(uint32_t J, int n) {
    uint32_t half = uint32_t{1} << (n - 1);
    if (J < 1 || J > 2 * half) {
        throw std::out_of_range("J outside [1, 2^n]");
    }
    return J <= half ? J : 2 * half + half + 1 - J;
}

struct StabilizerCheck {
    std::string generator;
    int expected_sign;
    bool ok;
};

/// X1...Xn with eigenvalue (-1)^j1, Z1Z2 with (-1)^j2, Z_{i-1}Z_i with (-1)^(j_{i-1} + j_i).
inline std::vector<StabilizerCheck> stabilizer_checks(const GhzLabel &label) {
    int n = label.n;
    StateVector s = ghz_state(label);
    std::vector<StabilizerCheck> out;
    auto check = [&](const PauliWord &p, int sign) {
        StateVector img = apply(p, s);
        bool ok = img == s.scaled(RingScalar(sign));
        out.push_back({render(p), sign, ok});
    };
    PauliWord xs = PauliWord::identity(n);
    for (int q = 1; q <= n; q++) {
        xs = xs * PauliWord::single(n, q, 'X');
    }
    check(xs, label.bit(1) ? -1 : 1);
    if (n >= 2) {
        check(PauliWord::single(n, 1, 'Z') * PauliWord::single(n, 2, 'Z'), label.bit(2) ? -1 : 1);
    }
    for (int q = 3; q <= n; q++) {
        int par = label.bit(q - 1) ^ label.bit(q);
        check(PauliWord::single(n, q - 1, 'Z') * PauliWord::single(n, q, 'Z'), par ? -1 : 1);
    }
    return out;
}

inline bool verify_stabilizers(const GhzLabel &label) {
    for (const auto &c : stabilizer_checks(label)) {
        if (!c.ok) {
            return false;
        }
    }
    return true;
}

struct NotATransform : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// u = C_H^(n) P E with P|j> = |perm[j]>, E|j> = phase[j]|j>.
struct GhzFactorization {
    int n = 0;
    std::vector<uint32_t> perm;
    std::vector<RingScalar> phase;

    DenseMatrix permutation() const {
        return permutation_gate(n, perm);
    }
    DenseMatrix phases() const {
        return phase_gate(n, phase);
    }
    DenseMatrix rebuild() const {
        return ch_family(n) * permutation() * phases();
    }
};

/// Coefficients of a vector in the GHZ basis, indexed by label bits.
inline std::vector<RingScalar> ghz_coefficients(const std::vector<RingScalar> &col, int n) {
    uint32_t dim = uint32_t{1} << n;
    uint32_t rest_mask = (dim >> 1) - 1;
    std::vector<RingScalar> out(dim);
    RingScalar h = RingScalar::inv_sqrt2();
    for (uint32_t lab = 0; lab < dim; lab++) {
        uint32_t rest = lab & rest_mask;
        uint32_t low = rest;
        uint32_t high = (dim >> 1) | (~rest & rest_mask);
        RingScalar hi = col[high];
        if (lab >> (n - 1)) {
            hi = -hi;
        }
        out[lab] = (col[low] + hi) * h;
    }
    return out;
}

inline std::optional<GhzFactorization> try_factor_transform(const DenseMatrix &u, std::string *why = nullptr) {
    int n = u.qubits();
    auto fail = [&](const std::string &msg) -> std::optional<GhzFactorization> {
        if (why) {
            *why = msg;
        }
        return std::nullopt;
    };
    if (n < 2) {
        return fail("needs at least two qubits");
    }
    uint32_t dim = uint32_t{1} << n;
    GhzFactorization f;
    f.n = n;
    f.perm.assign(dim, 0);
    f.phase.assign(dim, RingScalar());
    std::vector<bool> used(dim, false);
    std::vector<RingScalar> col(dim);
    for (uint32_t j = 0; j < dim; j++) {
        for (uint32_t r = 0; r < dim; r++) {
            col[r] = u(r, j);
        }
        auto coef = ghz_coefficients(col, n);
        int hits = 0;
        for (uint32_t lab = 0; lab < dim; lab++) {
            if (coef[lab].is_zero()) {
                continue;
            }
            hits++;
            f.perm[j] = lab;
            f.phase[j] = coef[lab];
        }
        if (hits != 1) {
            return fail("column " + std::to_string(j) + " is not proportional to a single GHZ state");
        }
        if (!f.phase[j].is_unit_modulus()) {
            return fail("column " + std::to_string(j) + " has a non-unit GHZ coefficient");
        }
        if (used[f.perm[j]]) {
            return fail("two columns map to the same GHZ state");
        }
        used[f.perm[j]] = true;
    }
    return f;
}

inline GhzFactorization factor_transform(const DenseMatrix &u) {
    std::string why;
    auto f = try_factor_transform(u, &why);
    if (!f) {
        throw NotATransform("not a GHZ transform: " + why);
    }
    return *f;
}

struct Classification {
    int qubits = 0;
    bool unitary = false;
    bool clifford = false;
    bool parity_preserving = false;
    bool matchgate = false;
    bool ghz_transform = false;  // bell_transform when qubits == 2
    std::optional<GhzFactorization> factorization;
    std::string reason;  // why factorization failed, if it did
};

inline Classification classify(const DenseMatrix &u) {
    Classification c;
    c.qubits = u.qubits();
    c.unitary = is_unitary(u);
    if (!c.unitary) {
        c.reason = "not unitary";
        return c;
    }
    c.clifford = is_clifford(u);
    if (u.qubits() == 2) {
        c.parity_preserving = is_parity_preserving(u);
        c.matchgate = is_matchgate(u);
    }
    c.factorization = try_factor_transform(u, &c.reason);
    c.ghz_transform = c.factorization.has_value();
    return c;
}

/// Sign s when u Z_i u^dagger = s X1...Xn, else nullopt.
inline std::optional<int> multicopy_x_check(const DenseMatrix &u, int i) {
    int n = u.qubits();
    auto img = conjugate_by(u, PauliWord::single(n, i, 'Z'));
    if (!img) {
        return std::nullopt;
    }
    uint32_t all = (uint32_t{1} << n) - 1;
    if (img->x != all || img->z != 0) {
        return std::nullopt;
    }
    if (img->s == 0) {
        return 1;
    }
    if (img->s == 2) {
        return -1;
    }
    return std::nullopt;
}

}  // namespace ghzkit

#endif
