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

#ifndef GHZKIT_MATRIX_HPP
#define GHZKIT_MATRIX_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzkit/exactring.hpp"

namespace ghzkit {

constexpr int MAX_QUBITS = 12;

inline void check_qubit_count(int n) {
    if (n < 0 || n > MAX_QUBITS) {
        throw std::out_of_range("qubit count " + std::to_string(n) + " outside [0, 12]");
    }
}

/// Basis index bit holding qubit q (1-based). Qubit 1 is the most significant.
inline uint32_t qubit_bit(int n, int q) {
    return uint32_t{1} << (n - q);
}

/// Square 2^n x 2^n matrix over the exact ring, row-major.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n) {
        check_qubit_count(n);
        data_.assign(size_t{1} << (2 * n), RingScalar());
    }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (size_t r = 0; r < m.dim(); r++) {
            m(r, r) = RingScalar(1);
        }
        return m;
    }

    /// Builds from integer ring entries scaled by 1/sqrt2^k.
    static DenseMatrix from_rows(int n, std::initializer_list<std::initializer_list<RingScalar>> rows,
                                 const RingScalar &scale = RingScalar(1)) {
        DenseMatrix m(n);
        if (rows.size() != m.dim()) {
            throw std::invalid_argument("row count does not match 2^n");
        }
        size_t r = 0;
        for (const auto &row : rows) {
            if (row.size() != m.dim()) {
                throw std::invalid_argument("column count does not match 2^n");
            }
            size_t c = 0;
            for (const auto &v : row) {
                m(r, c++) = v * scale;
            }
            r++;
        }
        return m;
    }

    int qubits() const {
        return n_;
    }
    size_t dim() const {
        return size_t{1} << n_;
    }
    RingScalar &operator()(size_t r, size_t c) {
        return data_[r * dim() + c];
    }
    const RingScalar &operator()(size_t r, size_t c) const {
        return data_[r * dim() + c];
    }
    const std::vector<RingScalar> &data() const {
        return data_;
    }

    friend bool operator==(const DenseMatrix &a, const DenseMatrix &b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }
    friend bool operator!=(const DenseMatrix &a, const DenseMatrix &b) {
        return !(a == b);
    }

    std::string str() const {
        std::ostringstream out;
        for (size_t r = 0; r < dim(); r++) {
            for (size_t c = 0; c < dim(); c++) {
                out << (c ? " " : "") << (*this)(r, c);
            }
            out << "\n";
        }
        return out.str();
    }

   private:
    int n_ = 0;
    std::vector<RingScalar> data_;
};

class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(int n) : n_(n) {
        check_qubit_count(n);
        amp_.assign(size_t{1} << n, RingScalar());
    }
    StateVector(int n, std::vector<RingScalar> amps) : n_(n), amp_(std::move(amps)) {
        check_qubit_count(n);
        if (amp_.size() != (size_t{1} << n)) {
            throw std::invalid_argument("amplitude count does not match 2^n");
        }
    }
    static StateVector basis(int n, uint32_t index) {
        StateVector s(n);
        if (index >= s.dim()) {
            throw std::out_of_range("basis index out of range");
        }
        s[index] = RingScalar(1);
        return s;
    }

    int qubits() const {
        return n_;
    }
    size_t dim() const {
        return amp_.size();
    }
    RingScalar &operator[](size_t i) {
        return amp_[i];
    }
    const RingScalar &operator[](size_t i) const {
        return amp_[i];
    }
    const std::vector<RingScalar> &amplitudes() const {
        return amp_;
    }

    friend bool operator==(const StateVector &a, const StateVector &b) {
        return a.n_ == b.n_ && a.amp_ == b.amp_;
    }
    friend bool operator!=(const StateVector &a, const StateVector &b) {
        return !(a == b);
    }

    StateVector scaled(const RingScalar &f) const {
        StateVector out = *this;
        for (auto &v : out.amp_) {
            v *= f;
        }
        return out;
    }

    friend StateVector operator+(const StateVector &a, const StateVector &b) {
        if (a.n_ != b.n_) {
            throw std::invalid_argument("state size mismatch");
        }
        StateVector out = a;
        for (size_t i = 0; i < out.dim(); i++) {
            out.amp_[i] += b.amp_[i];
        }
        return out;
    }

    std::string str() const {
        std::ostringstream out;
        for (size_t i = 0; i < dim(); i++) {
            out << (i ? " " : "") << amp_[i];
        }
        return out.str();
    }

   private:
    int n_ = 0;
    std::vector<RingScalar> amp_;
};

inline DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("matmul size mismatch");
    }
    DenseMatrix out(a.qubits());
    size_t d = a.dim();
    for (size_t r = 0; r < d; r++) {
        for (size_t t = 0; t < d; t++) {
            const RingScalar &x = a(r, t);
            if (x.is_zero()) {
                continue;
            }
            for (size_t c = 0; c < d; c++) {
                const RingScalar &y = b(t, c);
                if (!y.is_zero()) {
                    out(r, c) += x * y;
                }
            }
        }
    }
    return out;
}

inline DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    return matmul(a, b);
}

inline DenseMatrix scale(const DenseMatrix &m, const RingScalar &f) {
    DenseMatrix out(m.qubits());
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out(r, c) = m(r, c) * f;
        }
    }
    return out;
}

inline DenseMatrix operator+(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("add size mismatch");
    }
    DenseMatrix out(a.qubits());
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            out(r, c) = a(r, c) + b(r, c);
        }
    }
    return out;
}

inline DenseMatrix operator-(const DenseMatrix &a, const DenseMatrix &b) {
    return a + scale(b, RingScalar(-1));
}

inline DenseMatrix dagger(const DenseMatrix &m) {
    DenseMatrix out(m.qubits());
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out(c, r) = m(r, c).conj();
        }
    }
    return out;
}

inline DenseMatrix transpose(const DenseMatrix &m) {
    DenseMatrix out(m.qubits());
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out(c, r) = m(r, c);
        }
    }
    return out;
}

inline DenseMatrix tensor(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.qubits() + b.qubits());
    size_t db = b.dim();
    for (size_t r1 = 0; r1 < a.dim(); r1++) {
        for (size_t c1 = 0; c1 < a.dim(); c1++) {
            const RingScalar &x = a(r1, c1);
            if (x.is_zero()) {
                continue;
            }
            for (size_t r2 = 0; r2 < db; r2++) {
                for (size_t c2 = 0; c2 < db; c2++) {
                    out(r1 * db + r2, c1 * db + c2) = x * b(r2, c2);
                }
            }
        }
    }
    return out;
}

inline StateVector tensor(const StateVector &a, const StateVector &b) {
    StateVector out(a.qubits() + b.qubits());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

inline StateVector apply(const DenseMatrix &m, const StateVector &s) {
    if (m.qubits() != s.qubits()) {
        throw std::invalid_argument("apply size mismatch");
    }
    StateVector out(s.qubits());
    for (size_t r = 0; r < m.dim(); r++) {
        RingScalar acc;
        for (size_t c = 0; c < m.dim(); c++) {
            if (!m(r, c).is_zero() && !s[c].is_zero()) {
                acc += m(r, c) * s[c];
            }
        }
        out[r] = acc;
    }
    return out;
}

inline StateVector operator*(const DenseMatrix &m, const StateVector &s) {
    return apply(m, s);
}

/// Applies a k-qubit matrix to the listed sites (1-based, in the matrix's own qubit order).
inline StateVector apply_on(const DenseMatrix &m, const std::vector<int> &sites, const StateVector &s) {
    int n = s.qubits();
    int k = m.qubits();
    if ((int)sites.size() != k) {
        throw std::invalid_argument("site count does not match operator size");
    }
    uint32_t mask = 0;
    for (int q : sites) {
        if (q < 1 || q > n) {
            throw std::out_of_range("site " + std::to_string(q) + " outside register");
        }
        if (mask & qubit_bit(n, q)) {
            throw std::invalid_argument("repeated site");
        }
        mask |= qubit_bit(n, q);
    }
    auto local_to_global = [&](uint32_t base, uint32_t local) {
        uint32_t g = base;
        for (int t = 0; t < k; t++) {
            if (local & (uint32_t{1} << (k - 1 - t))) {
                g |= qubit_bit(n, sites[t]);
            }
        }
        return g;
    };
    StateVector out(n);
    size_t dk = m.dim();
    for (uint32_t base = 0; base < s.dim(); base++) {
        if (base & mask) {
            continue;
        }
        for (uint32_t r = 0; r < dk; r++) {
            RingScalar acc;
            for (uint32_t c = 0; c < dk; c++) {
                const RingScalar &x = m(r, c);
                if (x.is_zero()) {
                    continue;
                }
                const RingScalar &y = s[local_to_global(base, c)];
                if (!y.is_zero()) {
                    acc += x * y;
                }
            }
            out[local_to_global(base, r)] = acc;
        }
    }
    return out;
}

/// Embeds a k-qubit operator on the given sites of an n-qubit register.
inline DenseMatrix embed(const DenseMatrix &m, const std::vector<int> &sites, int n) {
    DenseMatrix out(n);
    for (uint32_t c = 0; c < out.dim(); c++) {
        StateVector col = apply_on(m, sites, StateVector::basis(n, c));
        for (uint32_t r = 0; r < out.dim(); r++) {
            out(r, c) = col[r];
        }
    }
    return out;
}

inline RingScalar inner(const StateVector &a, const StateVector &b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("inner product size mismatch");
    }
    RingScalar acc;
    for (size_t i = 0; i < a.dim(); i++) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            acc += a[i].conj() * b[i];
        }
    }
    return acc;
}

inline bool is_unitary(const DenseMatrix &m) {
    return matmul(dagger(m), m) == DenseMatrix::identity(m.qubits());
}

namespace detail {

// Unit-modulus ring elements are the powers of w.
inline std::optional<RingScalar> phase_between(const std::vector<RingScalar> &a, const std::vector<RingScalar> &b) {
    if (a.size() != b.size()) {
        return std::nullopt;
    }
    size_t pivot = b.size();
    for (size_t t = 0; t < b.size(); t++) {
        if (!b[t].is_zero()) {
            pivot = t;
            break;
        }
    }
    if (pivot == b.size()) {
        return std::nullopt;
    }
    for (int e = 0; e < 8; e++) {
        RingScalar lambda = RingScalar::omega(e);
        if (a[pivot] != lambda * b[pivot]) {
            continue;
        }
        for (size_t t = 0; t < a.size(); t++) {
            if (a[t] != lambda * b[t]) {
                return std::nullopt;
            }
        }
        return lambda;
    }
    return std::nullopt;
}

}  // namespace detail

/// Returns lambda with |lambda| = 1 and a == lambda * b, if one exists.
inline std::optional<RingScalar> equal_up_to_phase(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.qubits() != b.qubits()) {
        return std::nullopt;
    }
    return detail::phase_between(a.data(), b.data());
}

inline std::optional<RingScalar> equal_up_to_phase(const StateVector &a, const StateVector &b) {
    if (a.qubits() != b.qubits()) {
        return std::nullopt;
    }
    return detail::phase_between(a.amplitudes(), b.amplitudes());
}

inline RingScalar determinant(const DenseMatrix &m) {
    // Laplace expansion; only used for 2x2 blocks and 4x4 gates.
    size_t d = m.dim();
    std::vector<size_t> cols(d);
    for (size_t t = 0; t < d; t++) {
        cols[t] = t;
    }
    std::function<RingScalar(size_t, std::vector<size_t> &)> rec = [&](size_t row, std::vector<size_t> &left) {
        if (left.empty()) {
            return RingScalar(1);
        }
        RingScalar acc;
        for (size_t t = 0; t < left.size(); t++) {
            size_t c = left[t];
            if (m(row, c).is_zero()) {
                continue;
            }
            std::vector<size_t> rest;
            for (size_t u = 0; u < left.size(); u++) {
                if (u != t) {
                    rest.push_back(left[u]);
                }
            }
            RingScalar term = m(row, c) * rec(row + 1, rest);
            acc += (t % 2) ? -term : term;
        }
        return acc;
    };
    return rec(0, cols);
}

}  // namespace ghzkit

#endif
