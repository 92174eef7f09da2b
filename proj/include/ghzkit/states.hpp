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

#ifndef GHZKIT_STATES_HPP
#define GHZKIT_STATES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "ghzkit/matrix.hpp"

namespace ghzkit {

/// Bits (j1, ..., jn) packed with j1 as the most significant bit.
struct GhzLabel {
    int n = 0;
    uint32_t bits = 0;

    GhzLabel() = default;
    GhzLabel(int n_, uint32_t bits_) : n(n_), bits(bits_) {
        if (n_ < 1 || n_ > MAX_QUBITS) {
            throw std::out_of_range("label size outside [1, 12]");
        }
        if (bits_ >> n_) {
            throw std::out_of_range("label bits wider than n");
        }
    }
    int bit(int q) const {
        return (bits >> (n - q)) & 1;
    }
    std::string str() const {
        std::string s;
        for (int q = 1; q <= n; q++) {
            s += char('0' + bit(q));
        }
        return s;
    }
};

/// (|0 j2..jn> + (-1)^j1 |1 ~j2..~jn>) / sqrt2.
inline StateVector ghz_state(const GhzLabel &label) {
    int n = label.n;
    StateVector s(n);
    uint32_t rest = label.bits & ((uint32_t{1} << (n - 1)) - 1);
    uint32_t low = rest;
    uint32_t high = (uint32_t{1} << (n - 1)) | (~rest & ((uint32_t{1} << (n - 1)) - 1));
    RingScalar h = RingScalar::inv_sqrt2();
    s[low] = h;
    s[high] = label.bit(1) ? -h : h;
    return s;
}

inline StateVector bell_state(int k, int l) {
    if ((k | l) & ~1) {
        throw std::out_of_range("bell label bits must be 0 or 1");
    }
    return ghz_state(GhzLabel(2, (uint32_t)(k << 1 | l)));
}

}  // namespace ghzkit

#endif
