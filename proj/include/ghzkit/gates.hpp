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

#ifndef GHZKIT_GATES_HPP
#define GHZKIT_GATES_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzkit/matrix.hpp"
#include "ghzkit/pauli.hpp"
#include "ghzkit/states.hpp"

namespace ghzkit {

struct GateTags {
    bool clifford = false;
    bool parity_preserving = false;
    bool matchgate = false;
    bool bell_transform = false;
    bool yang_baxter = false;
};

struct GateEntry {
    std::string name;
    DenseMatrix matrix;
    GateTags tags;
};

namespace detail {

inline RingScalar r2() {
    return RingScalar::inv_sqrt2();
}

inline const RingScalar I_ = RingScalar::i();

}  // namespace detail

/// Embeds the 2x2 blocks A on span{|00>,|11>} and B on span{|01>,|10>}.
inline DenseMatrix parity_gate(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.qubits() != 1 || b.qubits() != 1) {
        throw std::invalid_argument("parity_gate blocks must be 2x2");
    }
    DenseMatrix g(2);
    g(0, 0) = a(0, 0);
    g(0, 3) = a(0, 1);
    g(3, 0) = a(1, 0);
    g(3, 3) = a(1, 1);
    g(1, 1) = b(0, 0);
    g(1, 2) = b(0, 1);
    g(2, 1) = b(1, 0);
    g(2, 2) = b(1, 1);
    return g;
}

inline bool is_parity_preserving(const DenseMatrix &g) {
    if (g.qubits() != 2) {
        return false;
    }
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            bool same = (std::popcount(r) & 1) == (std::popcount(c) & 1);
            if (!same && !g(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

inline std::pair<DenseMatrix, DenseMatrix> parity_blocks(const DenseMatrix &g) {
    if (!is_parity_preserving(g)) {
        throw std::invalid_argument("gate is not parity preserving");
    }
    DenseMatrix a(1), b(1);
    a(0, 0) = g(0, 0);
    a(0, 1) = g(0, 3);
    a(1, 0) = g(3, 0);
    a(1, 1) = g(3, 3);
    b(0, 0) = g(1, 1);
    b(0, 1) = g(1, 2);
    b(1, 0) = g(2, 1);
    b(1, 1) = g(2, 2);
    return {a, b};
}

inline bool is_matchgate(const DenseMatrix &g) {
    if (!is_parity_preserving(g)) {
        return false;
    }
    auto [a, b] = parity_blocks(g);
    return determinant(a) == determinant(b);
}

/// P|j> = |perm[j]>.
inline DenseMatrix permutation_gate(int n, const std::vector<uint32_t> &perm) {
    DenseMatrix m(n);
    if (perm.size() != m.dim()) {
        throw std::invalid_argument("permutation length must be 2^n");
    }
    std::vector<bool> seen(m.dim(), false);
    for (uint32_t j = 0; j < m.dim(); j++) {
        if (perm[j] >= m.dim() || seen[perm[j]]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[perm[j]] = true;
        m(perm[j], j) = RingScalar(1);
    }
    return m;
}

inline DenseMatrix phase_gate(int n, const std::vector<RingScalar> &phases) {
    DenseMatrix m(n);
    if (phases.size() != m.dim()) {
        throw std::invalid_argument("phase list length must be 2^n");
    }
    for (uint32_t j = 0; j < m.dim(); j++) {
        if (!phases[j].is_unit_modulus()) {
            throw std::invalid_argument("phase entry is not unit modulus");
        }
        m(j, j) = phases[j];
    }
    return m;
}

/// Swaps the basis states with 1-based labels J and J+1.
inline DenseMatrix transposition_gate(int n, uint32_t J) {
    check_qubit_count(n);
    uint32_t dim = uint32_t{1} << n;
    if (J < 1 || J >= dim) {
        throw std::out_of_range("transposition label outside [1, 2^n - 1]");
    }
    std::vector<uint32_t> perm(dim);
    for (uint32_t j = 0; j < dim; j++) {
        perm[j] = j;
    }
    std::swap(perm[J - 1], perm[J]);
    return permutation_gate(n, perm);
}

/// Single-qubit u controlled on site c, acting on site t, in an n-qubit register.
inline DenseMatrix controlled(const DenseMatrix &u, int c, int t, int n) {
    if (u.qubits() != 1) {
        throw std::invalid_argument("controlled target must be single qubit");
    }
    if (c == t) {
        throw std::invalid_argument("control and target coincide");
    }
    DenseMatrix cu(2);
    cu(0, 0) = RingScalar(1);
    cu(1, 1) = RingScalar(1);
    cu(2, 2) = u(0, 0);
    cu(2, 3) = u(0, 1);
    cu(3, 2) = u(1, 0);
    cu(3, 3) = u(1, 1);
    return embed(cu, {c, t}, n);
}

namespace gates {

inline DenseMatrix X() {
    return DenseMatrix::from_rows(1, {{0, 1}, {1, 0}});
}
/// Real Y = ZX.
inline DenseMatrix Y() {
    return DenseMatrix::from_rows(1, {{0, 1}, {-1, 0}});
}
inline DenseMatrix Z() {
    return DenseMatrix::from_rows(1, {{1, 0}, {0, -1}});
}
inline DenseMatrix H() {
    return DenseMatrix::from_rows(1, {{1, 1}, {1, -1}}, detail::r2());
}
inline DenseMatrix S() {
    return DenseMatrix::from_rows(1, {{1, 0}, {0, RingScalar::i()}});
}
inline DenseMatrix T() {
    return DenseMatrix::from_rows(1, {{1, 0}, {0, RingScalar::omega(1)}});
}
/// T X T^dagger.
inline DenseMatrix W() {
    return DenseMatrix::from_rows(1, {{0, RingScalar::omega(-1)}, {RingScalar::omega(1), 0}});
}
inline DenseMatrix CNOT() {
    return DenseMatrix::from_rows(2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}
inline DenseMatrix CZ() {
    return DenseMatrix::from_rows(2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
}
inline DenseMatrix SWAP() {
    return DenseMatrix::from_rows(2, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}
inline DenseMatrix CH() {
    return DenseMatrix::from_rows(2, {{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 0, -1}, {1, 0, -1, 0}}, detail::r2());
}
inline DenseMatrix B() {
    return DenseMatrix::from_rows(2, {{1, 0, 0, 1}, {0, 1, -1, 0}, {0, 1, 1, 0}, {-1, 0, 0, 1}}, detail::r2());
}
inline DenseMatrix Bp() {
    return DenseMatrix::from_rows(2, {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, 1, 0}, {-1, 0, 0, 1}}, detail::r2());
}
inline DenseMatrix Q() {
    RingScalar i = RingScalar::i();
    return DenseMatrix::from_rows(2, {{1, 0, 0, i}, {0, i, 1, 0}, {0, i, -1, 0}, {1, 0, 0, -i}}, detail::r2());
}
inline DenseMatrix R() {
    RingScalar i = RingScalar::i();
    return DenseMatrix::from_rows(2, {{1, 0, 0, -i}, {0, -i, -1, 0}, {0, -i, 1, 0}, {1, 0, 0, i}}, detail::r2());
}
inline DenseMatrix Toffoli() {
    return transposition_gate(3, 7);
}
inline DenseMatrix Fredkin() {
    return transposition_gate(3, 6);
}

}  // namespace gates

inline std::string upper(std::string s) {
    for (auto &ch : s) {
        ch = (char)std::toupper((unsigned char)ch);
    }
    return s;
}

/// Fixed-size catalog gates, keyed by upper-case canonical name.
inline const std::map<std::string, GateEntry> &gate_catalog() {
    static const std::map<std::string, GateEntry> catalog = [] {
        using namespace gates;
        std::map<std::string, GateEntry> m;
        auto add = [&](const std::string &name, DenseMatrix mat, GateTags tags) {
            m[upper(name)] = GateEntry{name, std::move(mat), tags};
        };
        DenseMatrix T1 = tensor(T(), DenseMatrix::identity(1));
        GateTags clif{true, false, false, false, false};
        GateTags pp_clif{true, true, false, false, false};
        GateTags match_clif{true, true, true, false, false};
        add("X", X(), clif);
        add("Y", Y(), clif);
        add("Z", Z(), clif);
        add("H", H(), clif);
        add("S", S(), clif);
        add("Sdg", dagger(S()), clif);
        add("T", T(), {});
        add("Tdg", dagger(T()), {});
        add("W", W(), clif);
        add("CNOT", CNOT(), clif);
        add("CZ", CZ(), pp_clif);
        add("SWAP", SWAP(), pp_clif);
        add("CH", CH(), {true, false, false, true, false});
        add("CHinv", dagger(CH()), clif);
        add("B", B(), {true, true, true, true, true});
        add("Binv", dagger(B()), {true, true, true, true, true});
        add("Bp", Bp(), {true, true, true, true, true});
        add("Bpinv", dagger(Bp()), {true, true, true, true, true});
        add("Q", Q(), {true, true, true, true, false});
        add("Qinv", dagger(Q()), match_clif);
        add("R", R(), {true, true, false, true, false});
        add("Rinv", dagger(R()), pp_clif);
        add("CHT", CH() * T1, {false, false, false, true, false});
        add("BT", B() * T1, {false, true, true, true, false});
        add("RT", R() * T1, {false, true, false, true, false});
        add("Toffoli", Toffoli(), {});
        add("Fredkin", Fredkin(), {});
        return m;
    }();
    return catalog;
}

enum class Family { CH_N, B_N, BPRIME_N, RPRIME_N, R_N };

inline std::optional<Family> parse_family(const std::string &name) {
    std::string u = upper(name);
    if (u == "CH_N" || u == "C_H_N") {
        return Family::CH_N;
    }
    if (u == "B_N") {
        return Family::B_N;
    }
    if (u == "BPRIME_N" || u == "BP_N") {
        return Family::BPRIME_N;
    }
    if (u == "RPRIME_N" || u == "RP_N") {
        return Family::RPRIME_N;
    }
    if (u == "R_N") {
        return Family::R_N;
    }
    return std::nullopt;
}

inline std::string family_name(Family f) {
    switch (f) {
        case Family::CH_N:
            return "CH_N";
        case Family::B_N:
            return "B_N";
        case Family::BPRIME_N:
            return "BPRIME_N";
        case Family::RPRIME_N:
            return "RPRIME_N";
        case Family::R_N:
            return "R_N";
    }
    return "?";
}

/// CNOT_{1n} ... CNOT_{12} H_1.
inline DenseMatrix ch_family(int n) {
    if (n < 1) {
        throw std::out_of_range("family size must be at least 1");
    }
    DenseMatrix u = embed(gates::H(), {1}, n);
    for (int q = 2; q <= n; q++) {
        u = controlled(gates::X(), 1, q, n) * u;
    }
    return u;
}

/// Permutation |j1, j2, ..., jn> -> |j1, j1+j2, ..., j1+jn> shared by the R and Q factorizations.
inline std::vector<uint32_t> prefix_xor_permutation(int n) {
    uint32_t dim = uint32_t{1} << n;
    uint32_t rest_mask = (uint32_t{1} << (n - 1)) - 1;
    std::vector<uint32_t> perm(dim);
    for (uint32_t j = 0; j < dim; j++) {
        uint32_t j1 = j >> (n - 1);
        perm[j] = j1 ? (j ^ rest_mask) : j;
    }
    return perm;
}

/// Default phase function for the R family: the two-qubit R preset at n = 2, all ones otherwise.
inline std::vector<RingScalar> default_r_phases(int n) {
    if (n == 2) {
        RingScalar i = RingScalar::i();
        return {1, -i, -1, -i};
    }
    return std::vector<RingScalar>(size_t{1} << n, RingScalar(1));
}

inline DenseMatrix family_gate(Family f, int n, const std::vector<RingScalar> *r_phases = nullptr) {
    if (n < 2 || n > MAX_QUBITS) {
        throw std::out_of_range("family size outside [2, 12]");
    }
    DenseMatrix id = DenseMatrix::identity(n);
    auto x_string = [&](int from, int to) {
        PauliWord p = PauliWord::identity(n);
        for (int q = from; q <= to; q++) {
            p = p * PauliWord::single(n, q, 'X');
        }
        return p;
    };
    switch (f) {
        case Family::CH_N:
            return ch_family(n);
        case Family::B_N: {
            PauliWord p = x_string(1, n - 1) * PauliWord::single(n, n, 'Y');
            return scale(id + to_matrix(p), RingScalar::inv_sqrt2());
        }
        case Family::BPRIME_N: {
            PauliWord p = PauliWord::single(n, 1, 'Y') * x_string(2, n);
            return scale(id + to_matrix(p), RingScalar::inv_sqrt2());
        }
        case Family::RPRIME_N:
            return embed(gates::Z(), {1}, n) * family_gate(Family::BPRIME_N, n);
        case Family::R_N: {
            std::vector<RingScalar> ph = r_phases ? *r_phases : default_r_phases(n);
            return ch_family(n) * permutation_gate(n, prefix_xor_permutation(n)) * phase_gate(n, ph);
        }
    }
    throw std::invalid_argument("unknown family");
}

/// Resolves a catalog name or "FAMILY:n" spelling, case-insensitively.
inline DenseMatrix make_gate(const std::string &name) {
    static const std::map<std::string, std::string> aliases = {
        {"C_H", "CH"},       {"C_H^-1", "CHINV"}, {"CH^-1", "CHINV"}, {"B^-1", "BINV"},
        {"B'", "BP"},        {"BPRIME", "BP"},    {"B'^-1", "BPINV"}, {"BPRIME^-1", "BPINV"},
        {"Q^-1", "QINV"},    {"R^-1", "RINV"},    {"C_HT", "CHT"},    {"B_T", "BT"},
        {"R_T", "RT"},       {"S^-1", "SDG"},     {"T^-1", "TDG"},    {"CX", "CNOT"},
        {"CCX", "TOFFOLI"},  {"CSWAP", "FREDKIN"}};
    std::string u = upper(name);
    if (auto it = aliases.find(u); it != aliases.end()) {
        u = it->second;
    }
    const auto &cat = gate_catalog();
    if (auto it = cat.find(u); it != cat.end()) {
        return it->second.matrix;
    }
    if (auto colon = u.find(':'); colon != std::string::npos) {
        if (auto fam = parse_family(u.substr(0, colon))) {
            return family_gate(*fam, std::stoi(u.substr(colon + 1)));
        }
    }
    throw std::invalid_argument("unknown gate '" + name + "'");
}

/// sum over (k',l') of phase(k,l) (S1(k,l) x S2(k,l)) |psi(k,l)><k'l'| with (k,l) = perm(k',l').
/// Labels are packed as 2k + l.
inline DenseMatrix generalized_bell(const std::function<RingScalar(int, int)> &phase,
                                    const std::function<DenseMatrix(int, int)> &s1,
                                    const std::function<DenseMatrix(int, int)> &s2,
                                    const std::function<int(int)> &perm) {
    DenseMatrix out(2);
    std::vector<bool> seen(4, false);
    for (int in = 0; in < 4; in++) {
        int img = perm(in);
        if (img < 0 || img > 3 || seen[img]) {
            throw std::invalid_argument("label map is not a bijection");
        }
        seen[img] = true;
        int k = img >> 1, l = img & 1;
        StateVector col = tensor(s1(k, l), s2(k, l)) * bell_state(k, l);
        RingScalar ph = phase(k, l);
        for (int r = 0; r < 4; r++) {
            out(r, in) = ph * col[r];
        }
    }
    return out;
}

}  // namespace ghzkit

#endif
