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

#ifndef GHZKIT_IDENTITIES_HPP
#define GHZKIT_IDENTITIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzkit/expression.hpp"

namespace ghzkit {

enum class PhaseMode { Exact, AnyPhase };

struct Identity {
    std::string name;
    int qubits;
    std::string lhs;
    std::string rhs;
    RingScalar stated_phase = RingScalar(1);  // lhs == stated_phase * rhs
    PhaseMode mode = PhaseMode::Exact;
    bool expect_holds = true;
    std::string note;
};

struct IdentityResult {
    std::string name;
    bool holds = false;  // lhs == stated_phase * rhs (or any phase, per mode)
    std::optional<RingScalar> phase_found;
    bool as_expected = false;
};

inline const std::vector<Identity> &identity_registry() {
    static const std::vector<Identity> reg = {
        {"ch_from_cnot_and_hadamard", 2, "CH", "CNOT12 H1"},
        {"ch_ladder_three_qubits", 3, "CH_N", "CNOT13 CNOT12 H1"},
        {"ch_ladder_four_qubits", 4, "CH_N", "CNOT14 CNOT13 CNOT12 H1"},
        {"cz_from_hadamard_conjugated_cnot", 2, "CZ21", "H1 CNOT21 H1"},
        {"cz_is_symmetric", 2, "CZ12", "CZ21"},
        {"b_clifford_circuit", 2, "B", "CNOT12 H1 X1 CNOT21 CZ12 CNOT12", RingScalar(1), PhaseMode::Exact, true,
         "last factor CNOT12; the CNOT21 spelling does not hold"},
        {"b_clifford_circuit_cnot21_counterexample", 2, "B", "CNOT12 H1 X1 CNOT21 CZ12 CNOT21", RingScalar(1), PhaseMode::AnyPhase,
         false, "counterexample: CNOT21 as the last factor"},
        {"q_clifford_circuit", 2, "Q", "CNOT12 H1 CNOT12 S2"},
        {"r_clifford_circuit", 2, "R", "CNOT12 H1 Sdg1 Sdg2 CNOT12", RingScalar(1), PhaseMode::Exact, true,
         "S daggers; the S S spelling does not hold"},
        {"r_clifford_circuit_s_counterexample", 2, "R", "CNOT12 H1 S1 S2 CNOT12", RingScalar(1), PhaseMode::AnyPhase, false,
         "counterexample: S in place of S dagger"},
        {"b_parity_circuit", 2, "B", "CNOT12 ctrl[2,1]{ - Y1 } exp[pi/4: YI] CNOT12"},
        {"q_parity_circuit", 2, "Q", "CNOT12 ctrl[2,1]{ i H1 S1 Z1 Sdg1 H1 } H1 S1 CNOT12"},
        {"r_parity_circuit", 2, "R", "CNOT12 ctrl[2,1]{ -i } H1 S1 Z1 CNOT12"},
        {"b_cz_sandwich", 2, "B", "CNOT12 CZ21 Z1 H1 CZ21 CNOT12"},
        {"b_cnot_cz_circuit", 2, "B", "CNOT12 Z1 H1 CNOT21 CZ21 CNOT12"},
        {"b_cnot21_sandwich", 2, "B", "CNOT21 Z2 H2 CNOT21"},
        {"q_cnot_sandwich", 2, "Q", "CNOT12 H1 S1 S2 CZ21 CNOT12"},
        {"r_cnot_sandwich", 2, "R", "CNOT12 H1 Sdg1 Sdg2 CNOT12"},
        {"s_dagger_is_sz", 1, "Sdg", "S Z"},
        {"x_from_hadamard_and_s", 1, "X1", "H1 S1 S1 H1"},
        {"first_transposition", 2, "transp[1]", "X2 CNOT12"},
        {"middle_transposition_is_swap", 2, "transp[2]", "SWAP12"},
        {"swap_from_three_cnots", 2, "SWAP12", "CNOT12 CNOT21 CNOT12"},
        {"last_transposition_is_cnot", 2, "transp[3]", "CNOT12"},
        {"fredkin_transposition", 3, "Fredkin", "transp[6]"},
        {"toffoli_transposition", 3, "Toffoli", "transp[7]"},
        {"q_from_bprime_inverse", 2, "Q", "Bpinv Z1 S2"},
        {"q_inverse_from_bprime_inverse", 2, "Qinv", "Sdg2 Bpinv Z1"},
        {"r_from_bprime_inverse", 2, "R", "exp[i*pi/4: ZZ] Bpinv S1", RingScalar::omega(-1)},
        {"r_inverse_from_bprime_inverse", 2, "Rinv", "S1 Bpinv exp[i*pi/4: ZZ] Z2", RingScalar(1), PhaseMode::AnyPhase,
         true, "holds up to the global phase w^-1"},
        {"bprime_exponential", 2, "Bp", "exp[pi/4: YX]"},
        {"b_exponential", 2, "B", "exp[-i*pi/4: iXY]"},
        {"b_inverse_exponential", 2, "Binv", "- exp[-i*3pi/4: iXY]"},
        {"b_hamiltonian_evolution", 2, "B", "evolve[iXY @ pi/4]"},
        {"q_exponential", 2, "Q", "exp[-pi/4: YX] exp[-i*pi/4: 2ZI + IZ]", RingScalar::omega(3)},
        {"q_hamiltonian_evolution", 2, "Q", "evolve[2ZI + IZ @ pi/4; -iYX @ pi/4]", RingScalar::omega(3)},
        {"q_exponential_alt", 2, "Q", "exp[-i*pi/4: -2XX + YY] exp[-pi/4: YX]", RingScalar::omega(-1)},
        {"q_hamiltonian_evolution_alt", 2, "Q", "evolve[-iYX @ pi/4; -2XX + YY @ pi/4]", RingScalar::omega(-1)},
        {"r_exponential", 2, "R", "exp[-i*pi/4: -iYX - ZZ] exp[-i*pi/4: ZI]"},
        {"r_hamiltonian_evolution", 2, "R", "evolve[ZI @ pi/4; -iYX - ZZ @ pi/4]"},
        {"r_exponential_alt", 2, "R", "exp[-i*pi/4: XX - ZZ] exp[-pi/4: YX]"},
        {"r_hamiltonian_evolution_alt", 2, "R", "evolve[-iYX @ pi/4; XX - ZZ @ pi/4]"},
        {"ch_t_phase_definition", 2, "CHT", "CH T1"},
        {"b_t_phase_definition", 2, "BT", "B T1"},
        {"r_t_phase_definition", 2, "RT", "R T1"},
        {"w_is_t_conjugated_x", 1, "W", "T X Tdg"},
    };
    return reg;
}

inline const Identity &find_identity(const std::string &name) {
    for (const auto &id : identity_registry()) {
        if (id.name == name) {
            return id;
        }
    }
    throw std::out_of_range("no identity named '" + name + "'");
}

inline IdentityResult verify_identity(const Identity &id) {
    DenseMatrix lhs = evaluate(id.lhs, id.qubits);
    DenseMatrix rhs = evaluate(id.rhs, id.qubits);
    IdentityResult res;
    res.name = id.name;
    res.phase_found = equal_up_to_phase(lhs, rhs);
    if (id.mode == PhaseMode::AnyPhase) {
        res.holds = res.phase_found.has_value();
    } else {
        res.holds = res.phase_found.has_value() && *res.phase_found == id.stated_phase;
    }
    res.as_expected = res.holds == id.expect_holds;
    return res;
}

inline IdentityResult verify_identity(const std::string &name) {
    return verify_identity(find_identity(name));
}

/// CNOT12 CU21 (a x I) CNOT12 with CU21 = I x |0><0| + b a^dagger x |1><1|.
inline DenseMatrix parity_gate_circuit(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix cnot = gates::CNOT();
    DenseMatrix p0 = DenseMatrix::from_rows(1, {{1, 0}, {0, 0}});
    DenseMatrix p1 = DenseMatrix::from_rows(1, {{0, 0}, {0, 1}});
    DenseMatrix cu = tensor(DenseMatrix::identity(1), p0) + tensor(b * dagger(a), p1);
    return cnot * cu * tensor(a, DenseMatrix::identity(1)) * cnot;
}

/// (u x I)(I x u)(u x I) == (I x u)(u x I)(I x u) on three qubits.
inline bool yang_baxter_holds(const DenseMatrix &u) {
    if (u.qubits() != 2) {
        throw std::invalid_argument("Yang-Baxter check needs a two-qubit gate");
    }
    DenseMatrix a = embed(u, {1, 2}, 3);
    DenseMatrix b = embed(u, {2, 3}, 3);
    return a * b * a == b * a * b;
}

}  // namespace ghzkit

#endif
