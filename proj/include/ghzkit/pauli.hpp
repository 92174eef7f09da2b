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

#ifndef GHZKIT_PAULI_HPP
#define GHZKIT_PAULI_HPP

#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ghzkit/matrix.hpp"

namespace ghzkit {

/// i^s X^x Z^z on n qubits. Masks use basis-index bit order, so X^x sends |j> to |j ^ x>.
/// Y here is the real matrix ZX = [[0,1],[-1,0]], so a site with both bits set is X Z = -Y.
struct PauliWord {
    int n = 0;
    uint32_t x = 0;
    uint32_t z = 0;
    uint8_t s = 0;

    PauliWord() = default;
    PauliWord(int n_, uint32_t x_, uint32_t z_, int s_ = 0) : n(n_), x(x_), z(z_), s((uint8_t)(((s_ % 4) + 4) % 4)) {
        check_qubit_count(n_);
        uint32_t lim = n_ == 32 ? ~0u : ((uint32_t{1} << n_) - 1);
        if ((x_ & ~lim) || (z_ & ~lim)) {
            throw std::out_of_range("pauli mask wider than register");
        }
    }

    static PauliWord identity(int n) {
        return PauliWord(n, 0, 0, 0);
    }
    /// Single-site factor: c in {'I','X','Y','Z'}, Y meaning ZX.
    static PauliWord single(int n, int q, char c) {
        if (q < 1 || q > n) {
            throw std::out_of_range("pauli site out of range");
        }
        uint32_t b = qubit_bit(n, q);
        switch (c) {
            case 'I':
                return PauliWord(n, 0, 0, 0);
            case 'X':
                return PauliWord(n, b, 0, 0);
            case 'Z':
                return PauliWord(n, 0, b, 0);
            case 'Y':
                return PauliWord(n, b, b, 2);
        }
        throw std::invalid_argument(std::string("unknown pauli letter ") + c);
    }

    bool operator==(const PauliWord &o) const {
        return n == o.n && x == o.x && z == o.z && s == o.s;
    }
    bool operator!=(const PauliWord &o) const {
        return !(*this == o);
    }

    int y_count() const {
        return std::popcount(x & z);
    }
    bool is_identity_up_to_phase() const {
        return x == 0 && z == 0;
    }
    PauliWord with_phase(int s_) const {
        return PauliWord(n, x, z, s_);
    }
};

inline PauliWord pauli_mul(const PauliWord &a, const PauliWord &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("pauli size mismatch");
    }
    int s = a.s + b.s + 2 * std::popcount(a.z & b.x);
    return PauliWord(a.n, a.x ^ b.x, a.z ^ b.z, s);
}

inline PauliWord operator*(const PauliWord &a, const PauliWord &b) {
    return pauli_mul(a, b);
}

inline bool commutes(const PauliWord &a, const PauliWord &b) {
    return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

inline RingScalar phase_of(const PauliWord &p) {
    return i_pow(p.s);
}

inline DenseMatrix to_matrix(const PauliWord &p) {
    DenseMatrix m(p.n);
    RingScalar ph = i_pow(p.s);
    for (uint32_t j = 0; j < m.dim(); j++) {
        m(j ^ p.x, j) = (std::popcount(p.z & j) & 1) ? -ph : ph;
    }
    return m;
}

inline StateVector apply(const PauliWord &p, const StateVector &v) {
    StateVector out(v.qubits());
    RingScalar ph = i_pow(p.s);
    for (uint32_t j = 0; j < v.dim(); j++) {
        if (!v[j].is_zero()) {
            out[j ^ p.x] = (std::popcount(p.z & j) & 1) ? -(ph * v[j]) : ph * v[j];
        }
    }
    return out;
}

/// Exact recognition of i^s X^x Z^z; nullopt if m is not of that form.
inline std::optional<PauliWord> pauli_from_matrix(const DenseMatrix &m) {
    int n = m.qubits();
    uint32_t x = 0;
    bool found = false;
    for (uint32_t r = 0; r < m.dim(); r++) {
        if (!m(r, 0).is_zero()) {
            x = r;
            found = true;
            break;
        }
    }
    if (!found) {
        return std::nullopt;
    }
    int s = -1;
    for (int e = 0; e < 4; e++) {
        if (m(x, 0) == i_pow(e)) {
            s = e;
        }
    }
    if (s < 0) {
        return std::nullopt;
    }
    uint32_t z = 0;
    for (int q = 1; q <= n; q++) {
        uint32_t b = qubit_bit(n, q);
        const RingScalar &v = m(b ^ x, b);
        if (v == -i_pow(s)) {
            z |= b;
        } else if (v != i_pow(s)) {
            return std::nullopt;
        }
    }
    PauliWord p(n, x, z, s);
    if (to_matrix(p) != m) {
        return std::nullopt;
    }
    return p;
}

/// Recognizes lambda * P with P a phase-free word (s = 0) and |lambda| = 1.
struct PhasedPauli {
    RingScalar phase;
    PauliWord word;
};

inline std::optional<PhasedPauli> phased_pauli_from_matrix(const DenseMatrix &m) {
    int n = m.qubits();
    for (uint32_t r = 0; r < m.dim(); r++) {
        if (m(r, 0).is_zero()) {
            continue;
        }
        uint32_t z = 0;
        RingScalar lambda = m(r, 0);
        if (!lambda.is_unit_modulus()) {
            return std::nullopt;
        }
        for (int q = 1; q <= n; q++) {
            uint32_t b = qubit_bit(n, q);
            const RingScalar &v = m(b ^ r, b);
            if (v == -lambda) {
                z |= b;
            } else if (v != lambda) {
                return std::nullopt;
            }
        }
        PauliWord p(n, r, z, 0);
        if (scale(to_matrix(p), lambda) != m) {
            return std::nullopt;
        }
        return PhasedPauli{lambda, p};
    }
    return std::nullopt;
}

/// u p u^dagger when the result is a Pauli word.
inline std::optional<PauliWord> conjugate_by(const DenseMatrix &u, const PauliWord &p) {
    return pauli_from_matrix(u * to_matrix(p) * dagger(u));
}

inline bool is_clifford(const DenseMatrix &u) {
    int n = u.qubits();
    DenseMatrix ud = dagger(u);
    for (int q = 1; q <= n; q++) {
        for (char c : {'X', 'Z'}) {
            if (!pauli_from_matrix(u * to_matrix(PauliWord::single(n, q, c)) * ud)) {
                return false;
            }
        }
    }
    return true;
}

/// Textual form: phase prefix from {"", "-", "i", "-i"} then sites like "X1Y2", or "1" for identity.
inline std::string render(const PauliWord &p) {
    int shown = (p.s + 2 * p.y_count()) % 4;
    static const char *prefix[4] = {"", "i", "-", "-i"};
    std::string out = prefix[shown];
    bool any = false;
    for (int q = 1; q <= p.n; q++) {
        uint32_t b = qubit_bit(p.n, q);
        bool hx = p.x & b;
        bool hz = p.z & b;
        if (!hx && !hz) {
            continue;
        }
        out += hx && hz ? 'Y' : (hx ? 'X' : 'Z');
        out += std::to_string(q);
        any = true;
    }
    if (!any) {
        out += "1";
    }
    return out;
}

/// Inverse of render. Repeated sites multiply left to right.
inline PauliWord parse_pauli(std::string_view text, int n) {
    size_t pos = 0;
    int s = 0;
    if (pos < text.size() && text[pos] == '-') {
        s += 2;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        s += 1;
        pos++;
    }
    PauliWord acc = PauliWord::identity(n).with_phase(s);
    if (text.substr(pos) == "1") {
        return acc;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("empty pauli word");
    }
    while (pos < text.size()) {
        char c = text[pos++];
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("bad pauli letter in '" + std::string(text) + "'");
        }
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            pos++;
        }
        if (start == pos) {
            throw std::invalid_argument("missing site index in '" + std::string(text) + "'");
        }
        int q = std::stoi(std::string(text.substr(start, pos - start)));
        acc = acc * PauliWord::single(n, q, c);
    }
    return acc;
}

inline bool looks_like_pauli(std::string_view text) {
    size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') {
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        pos++;
    }
    if (text.substr(pos) == "1") {
        return true;
    }
    if (pos == text.size()) {
        return false;
    }
    while (pos < text.size()) {
        char c = text[pos++];
        if (c != 'X' && c != 'Y' && c != 'Z') {
            return false;
        }
        size_t start = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            pos++;
        }
        if (start == pos) {
            return false;
        }
    }
    return true;
}

struct ConjugationRow {
    PauliWord input;
    std::optional<PauliWord> pauli;  // set when the image is a Pauli word
    DenseMatrix image;
};

/// Images of X_i and Z_i for every site under u.
inline std::vector<ConjugationRow> conjugation_table(const DenseMatrix &u) {
    int n = u.qubits();
    DenseMatrix ud = dagger(u);
    std::vector<ConjugationRow> rows;
    for (char c : {'X', 'Z'}) {
        for (int q = 1; q <= n; q++) {
            PauliWord p = PauliWord::single(n, q, c);
            DenseMatrix img = u * to_matrix(p) * ud;
            rows.push_back({p, pauli_from_matrix(img), img});
        }
    }
    return rows;
}

}  // namespace ghzkit

#endif
