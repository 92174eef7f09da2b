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

#ifndef GHZKIT_TELEPORT_HPP
#define GHZKIT_TELEPORT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzkit/ghzbell.hpp"

namespace ghzkit {

/// Bell-basis correction X^l Z^k.
inline PauliWord bell_correction_word(int k, int l) {
    return PauliWord(1, (uint32_t)l, (uint32_t)k, 0);
}

/// phase * word as a 2x2 operator.
struct CorrectionOp {
    RingScalar phase = RingScalar(1);
    PauliWord word = PauliWord::identity(1);

    DenseMatrix matrix() const {
        return scale(to_matrix(word), phase);
    }
};

/// Corrections for teleportation through the operator (b^-1 x I)(I x b).
/// Entries are indexed by the packed label 2k + l.
struct CorrectionTable {
    std::array<int, 4> image{};            // b|kl> is proportional to |psi(image)>
    std::array<RingScalar, 4> phase{};     // ... with this phase
    std::array<CorrectionOp, 4> V{};
    std::array<CorrectionOp, 4> U{};
};

inline void require_bell_transform(const DenseMatrix &b) {
    if (b.qubits() != 2) {
        throw NotATransform("Bell transform must act on two qubits");
    }
    std::string why;
    if (!try_factor_transform(b, &why)) {
        throw NotATransform("not a Bell transform: " + why);
    }
}

inline CorrectionTable derive_corrections(const DenseMatrix &b) {
    require_bell_transform(b);
    CorrectionTable t;
    for (int in = 0; in < 4; in++) {
        StateVector col = b * StateVector::basis(2, (uint32_t)in);
        bool found = false;
        for (int img = 0; img < 4 && !found; img++) {
            if (auto ph = equal_up_to_phase(col, bell_state(img >> 1, img & 1))) {
                t.image[in] = img;
                t.phase[in] = *ph;
                found = true;
            }
        }
        if (!found) {
            throw NotATransform("column " + std::to_string(in) + " is not a Bell state");
        }
    }
    for (int in = 0; in < 4; in++) {
        PauliWord w = bell_correction_word(t.image[in] >> 1, t.image[in] & 1);
        t.V[in] = {t.phase[in], w};
        t.U[in] = {t.phase[in].conj(), w};
    }
    return t;
}

/// (b^-1 x I)(I x b) on three qubits.
inline DenseMatrix teleportation_operator(const DenseMatrix &b) {
    require_bell_transform(b);
    DenseMatrix id = DenseMatrix::identity(1);
    return tensor(dagger(b), id) * tensor(id, b);
}

/// (I x b^-1)(b x I) on three qubits.
inline DenseMatrix teleportation_operator_mirrored(const DenseMatrix &b) {
    require_bell_transform(b);
    DenseMatrix id = DenseMatrix::identity(1);
    return tensor(id, dagger(b)) * tensor(b, id);
}

struct TeleportEqCheck {
    bool forward = false;   // operator acting on |alpha>|kl>
    bool mirrored = false;  // mirrored operator acting on |kl>|alpha>
};

/// Checks both teleportation identities for one (k, l) on the basis inputs |0>, |1>.
inline TeleportEqCheck verify_teleport_eq(const DenseMatrix &b, int k, int l) {
    CorrectionTable t = derive_corrections(b);
    DenseMatrix fwd = teleportation_operator(b);
    DenseMatrix mir = teleportation_operator_mirrored(b);
    int kl = 2 * k + l;
    RingScalar half = RingScalar::inv_sqrt2(2);
    TeleportEqCheck res{true, true};
    for (uint32_t a = 0; a < 2; a++) {
        StateVector alpha = StateVector::basis(1, a);
        StateVector lhs = fwd * tensor(alpha, StateVector::basis(2, (uint32_t)kl));
        StateVector rhs(3);
        StateVector lhs_m = mir * tensor(StateVector::basis(2, (uint32_t)kl), alpha);
        StateVector rhs_m(3);
        for (int ij = 0; ij < 4; ij++) {
            DenseMatrix vu = t.V[kl].matrix() * t.U[ij].matrix();
            rhs = rhs + tensor(StateVector::basis(2, (uint32_t)ij), vu * alpha).scaled(half);
            DenseMatrix vut = transpose(t.V[kl].matrix()) * transpose(t.U[ij].matrix());
            rhs_m = rhs_m + tensor(vut * alpha, StateVector::basis(2, (uint32_t)ij)).scaled(half);
        }
        res.forward = res.forward && lhs == rhs;
        res.mirrored = res.mirrored && lhs_m == rhs_m;
    }
    return res;
}

enum class CliffordLevel { Pauli = 1, Clifford = 2, Beyond = 3 };

inline CliffordLevel clifford_level(const DenseMatrix &u) {
    if (phased_pauli_from_matrix(u)) {
        return CliffordLevel::Pauli;
    }
    return is_clifford(u) ? CliffordLevel::Clifford : CliffordLevel::Beyond;
}

struct SingleGateEntry {
    int k, l, i, j;
    DenseMatrix S;     // u V_kl u^dagger
    DenseMatrix R;     // u U_ij u^dagger
    DenseMatrix SR;    // u V_kl U_ij u^dagger
    CliffordLevel level;
};

inline std::vector<SingleGateEntry> single_gate_table(const DenseMatrix &b, const DenseMatrix &u) {
    if (u.qubits() != 1) {
        throw std::invalid_argument("gate teleportation needs a single-qubit gate");
    }
    CorrectionTable t = derive_corrections(b);
    DenseMatrix ud = dagger(u);
    std::vector<SingleGateEntry> out;
    for (int kl = 0; kl < 4; kl++) {
        for (int ij = 0; ij < 4; ij++) {
            DenseMatrix S = u * t.V[kl].matrix() * ud;
            DenseMatrix R = u * t.U[ij].matrix() * ud;
            DenseMatrix SR = S * R;
            out.push_back({kl >> 1, kl & 1, ij >> 1, ij & 1, S, R, SR, clifford_level(SR)});
        }
    }
    return out;
}

struct NonProductCorrection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Splits a two-qubit operator into q x p, or nullopt when it is not a ring-factorizable product.
inline std::optional<std::pair<DenseMatrix, DenseMatrix>> split_tensor_product(const DenseMatrix &op) {
    if (op.qubits() != 2) {
        throw std::invalid_argument("split needs a two-qubit operator");
    }
    // R[(q1 q2), (p1 p2)] = op[2 q1 + p1][2 q2 + p2].
    auto R = [&](int row, int col) -> const RingScalar & {
        int q1 = row >> 1, q2 = row & 1, p1 = col >> 1, p2 = col & 1;
        return op((size_t)(2 * q1 + p1), (size_t)(2 * q2 + p2));
    };
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            auto inv = R(r, c).inverse();
            if (R(r, c).is_zero() || !inv) {
                continue;
            }
            DenseMatrix q(1), p(1);
            for (int t = 0; t < 4; t++) {
                q((size_t)(t >> 1), (size_t)(t & 1)) = R(t, c);
                p((size_t)(t >> 1), (size_t)(t & 1)) = R(r, t) * *inv;
            }
            if (tensor(q, p) != op) {
                return std::nullopt;
            }
            return std::make_pair(q, p);
        }
    }
    return std::nullopt;
}

struct TwoGateEntry {
    int k1, l1, i1, j1, k2, l2, i2, j2;
    DenseMatrix Q, P;
    std::optional<PhasedPauli> product_pauli;  // Q x P as phase * word, when Pauli
};

/// CU (V_{k1l1} U_{i1j1} x V^T_{k2l2} U^T_{i2j2}) CU^dagger for all 256 index tuples.
inline DenseMatrix two_gate_correction(const CorrectionTable &t, const DenseMatrix &cu, int k1, int l1, int i1,
                                       int j1, int k2, int l2, int i2, int j2) {
    DenseMatrix left = t.V[2 * k1 + l1].matrix() * t.U[2 * i1 + j1].matrix();
    DenseMatrix right = transpose(t.V[2 * k2 + l2].matrix()) * transpose(t.U[2 * i2 + j2].matrix());
    return cu * tensor(left, right) * dagger(cu);
}

inline std::vector<TwoGateEntry> two_gate_table(const DenseMatrix &b, const DenseMatrix &cu) {
    if (cu.qubits() != 2) {
        throw std::invalid_argument("gate teleportation needs a two-qubit gate");
    }
    CorrectionTable t = derive_corrections(b);
    std::vector<TwoGateEntry> out;
    out.reserve(256);
    for (int m = 0; m < 256; m++) {
        int k1 = (m >> 7) & 1, l1 = (m >> 6) & 1, i1 = (m >> 5) & 1, j1 = (m >> 4) & 1;
        int k2 = (m >> 3) & 1, l2 = (m >> 2) & 1, i2 = (m >> 1) & 1, j2 = m & 1;
        DenseMatrix op = two_gate_correction(t, cu, k1, l1, i1, j1, k2, l2, i2, j2);
        auto qp = split_tensor_product(op);
        if (!qp) {
            throw NonProductCorrection("correction is not a product of single-qubit operators");
        }
        out.push_back({k1, l1, i1, j1, k2, l2, i2, j2, qp->first, qp->second, phased_pauli_from_matrix(op)});
    }
    return out;
}

/// Six-qubit check that the two-gate corrections complete the teleported CU for one resource label.
inline bool verify_two_gate_teleport(const DenseMatrix &b, const DenseMatrix &cu, int k1, int l1, int k2, int l2) {
    CorrectionTable t = derive_corrections(b);
    DenseMatrix bd = dagger(b);
    StateVector resource = tensor(b * StateVector::basis(2, (uint32_t)(2 * k1 + l1)),
                                  b * StateVector::basis(2, (uint32_t)(2 * k2 + l2)));
    resource = apply_on(cu, {2, 3}, resource);
    RingScalar quarter = RingScalar::inv_sqrt2(4);
    for (uint32_t ab = 0; ab < 4; ab++) {
        StateVector alpha = StateVector::basis(1, ab >> 1);
        StateVector beta = StateVector::basis(1, ab & 1);
        StateVector lhs = tensor(tensor(alpha, resource), beta);
        lhs = apply_on(bd, {1, 2}, lhs);
        lhs = apply_on(bd, {5, 6}, lhs);
        StateVector cuab = cu * StateVector::basis(2, ab);
        StateVector rhs(6);
        for (int m = 0; m < 16; m++) {
            int i1 = (m >> 3) & 1, j1 = (m >> 2) & 1, i2 = (m >> 1) & 1, j2 = m & 1;
            DenseMatrix qp = two_gate_correction(t, cu, k1, l1, i1, j1, k2, l2, i2, j2);
            StateVector mid = qp * cuab;
            StateVector term = tensor(tensor(StateVector::basis(2, (uint32_t)(2 * i1 + j1)), mid),
                                      StateVector::basis(2, (uint32_t)(2 * i2 + j2)));
            rhs = rhs + term.scaled(quarter);
        }
        if (lhs != rhs) {
            return false;
        }
    }
    return true;
}

struct SimulationRun {
    int i = 0, j = 0;
    RingScalar probability;
    StateVector received;   // Bob's qubit after measurement, before correction
    StateVector corrected;  // after U_ij^dagger V_kl^dagger
    std::optional<RingScalar> phase;  // corrected == phase * psi
};

/// Samples an outcome from an exact ring-valued distribution using the top 53 bits of one draw.
inline int sample_exact(const std::vector<RingScalar> &probs, uint64_t draw) {
    const int64_t bits = 53;
    RingScalar threshold(int64_t(draw >> (64 - bits)));
    RingScalar scale_up(int64_t{1} << bits);
    RingScalar cum;
    for (size_t t = 0; t < probs.size(); t++) {
        cum += probs[t];
        // draw / 2^53 < cum  <=>  cum * 2^53 - draw > 0
        if ((cum * scale_up - threshold).real_sign() > 0) {
            return (int)t;
        }
    }
    throw std::logic_error("probabilities do not sum to one");
}

/// Teleports psi through b with resource label (k, l); the caller owns the generator.
template <typename Rng>
SimulationRun simulate(const DenseMatrix &b, const StateVector &psi, int k, int l, Rng &rng) {
    if (psi.qubits() != 1) {
        throw std::invalid_argument("teleported state must be one qubit");
    }
    if (inner(psi, psi) != RingScalar(1)) {
        throw std::invalid_argument("teleported state must be normalized");
    }
    CorrectionTable t = derive_corrections(b);
    StateVector state = tensor(psi, b * StateVector::basis(2, (uint32_t)(2 * k + l)));
    state = apply_on(dagger(b), {1, 2}, state);
    std::vector<RingScalar> probs(4);
    std::vector<StateVector> branch(4, StateVector(1));
    for (int ij = 0; ij < 4; ij++) {
        branch[ij][0] = state[(size_t)(ij << 1)];
        branch[ij][1] = state[(size_t)(ij << 1 | 1)];
        probs[ij] = inner(branch[ij], branch[ij]);
    }
    int outcome = sample_exact(probs, (uint64_t)rng());
    SimulationRun run;
    run.i = outcome >> 1;
    run.j = outcome & 1;
    run.probability = probs[outcome];
    // Renormalize: each branch has weight 2^-m for the protocol, so scale by sqrt2^m.
    RingScalar p = probs[outcome];
    int m = -1;
    for (int e = 0; e <= 62; e++) {
        if (p * RingScalar(int64_t{1} << e) == RingScalar(1)) {
            m = e;
            break;
        }
    }
    if (m < 0) {
        throw std::runtime_error("outcome probability is not a power of one half");
    }
    StateVector received = branch[outcome];
    for (int e = 0; e < m; e++) {
        received = received.scaled(RingScalar::sqrt2());
    }
    run.received = received;
    DenseMatrix fix = dagger(t.U[outcome].matrix()) * dagger(t.V[2 * k + l].matrix());
    run.corrected = fix * received;
    run.phase = equal_up_to_phase(run.corrected, psi);
    return run;
}

}  // namespace ghzkit

#endif
