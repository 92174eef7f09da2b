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

#ifndef GHZKIT_EXACTRING_HPP
#define GHZKIT_EXACTRING_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ghzkit {

struct RingOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw RingOverflow("ring coefficient overflow in addition");
    }
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw RingOverflow("ring coefficient overflow in subtraction");
    }
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw RingOverflow("ring coefficient overflow in multiplication");
    }
    return r;
}

inline int64_t checked_neg(int64_t a) {
    return checked_sub(0, a);
}

inline bool is_even(int64_t v) {
    return (v & 1) == 0;
}

}  // namespace detail

/// Element (a + b w + c w^2 + d w^3) / sqrt(2)^k of Z[w, 1/sqrt2], w = exp(i pi/4).
/// Always held in canonical form: k is minimal and zero has k = 0.
class RingScalar {
   public:
    RingScalar() = default;
    RingScalar(int64_t v) : c_{v, 0, 0, 0}, k_(0) {  // NOLINT(google-explicit-constructor)
    }
    RingScalar(int64_t a, int64_t b, int64_t c, int64_t d, int64_t k = 0) : c_{a, b, c, d}, k_(k) {
        if (k < 0) {
            throw std::invalid_argument("sqrt2 exponent must be non-negative");
        }
        canonicalize();
    }

    static RingScalar zero() {
        return RingScalar();
    }
    static RingScalar one() {
        return RingScalar(1);
    }
    static RingScalar i() {
        return RingScalar(0, 0, 1, 0);
    }
    /// w^e for any integer e.
    static RingScalar omega(int64_t e) {
        int64_t r = ((e % 8) + 8) % 8;
        std::array<int64_t, 4> c{0, 0, 0, 0};
        c[r % 4] = r >= 4 ? -1 : 1;
        return RingScalar(c[0], c[1], c[2], c[3]);
    }
    static RingScalar sqrt2() {
        return RingScalar(0, 1, 0, -1);
    }
    static RingScalar inv_sqrt2(int64_t power = 1) {
        return RingScalar(1, 0, 0, 0, power);
    }

    int64_t a() const {
        return c_[0];
    }
    int64_t b() const {
        return c_[1];
    }
    int64_t c() const {
        return c_[2];
    }
    int64_t d() const {
        return c_[3];
    }
    int64_t k() const {
        return k_;
    }
    const std::array<int64_t, 4> &coeffs() const {
        return c_;
    }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }

    bool is_real() const {
        // imag part is (c + (b + d)/sqrt2) / sqrt2^k.
        return c_[2] == 0 && c_[1] == -c_[3];
    }

    RingScalar conj() const {
        return raw(c_[0], detail::checked_neg(c_[3]), detail::checked_neg(c_[2]), detail::checked_neg(c_[1]), k_);
    }

    /// Galois automorphism w -> w^3; sends sqrt2 to -sqrt2.
    RingScalar galois() const {
        // w -> w^3, w^2 -> w^6 = -w^2, w^3 -> w^9 = w.
        RingScalar r = raw(c_[0], c_[3], detail::checked_neg(c_[2]), c_[1], 0);
        if (k_ & 1) {
            r = -r;
        }
        RingScalar out = r;
        out.k_ = k_;
        out.canonicalize();
        return out;
    }

    RingScalar norm_sq() const {
        return *this * conj();
    }

    bool is_unit_modulus() const {
        return norm_sq() == RingScalar(1);
    }

    /// Multiplicative inverse when it lies in the ring.
    std::optional<RingScalar> inverse() const {
        if (is_zero()) {
            return std::nullopt;
        }
        RingScalar n1 = norm_sq();
        RingScalar n1g = n1.galois();
        RingScalar n2 = n1 * n1g;  // rational: (p / sqrt2^k) with p integer, k even after reduction
        if (n2.c_[1] != 0 || n2.c_[2] != 0 || n2.c_[3] != 0) {
            throw std::logic_error("full norm is not rational");
        }
        int64_t p = n2.c_[0];
        int64_t sign = p < 0 ? -1 : 1;
        int64_t mag = p < 0 ? -p : p;
        if ((mag & (mag - 1)) != 0) {
            return std::nullopt;
        }
        int64_t e = 0;
        while ((int64_t{1} << e) < mag) {
            e++;
        }
        // 1/n2 = sign * sqrt2^k / 2^e = sign * sqrt2^(k) / sqrt2^(2e).
        RingScalar inv_n2(sign, 0, 0, 0, 2 * e);
        for (int64_t t = 0; t < n2.k_; t++) {
            inv_n2 = inv_n2 * sqrt2();
        }
        return conj() * n1g * inv_n2;
    }

    std::complex<double> to_complex() const {
        const double h = std::sqrt(0.5);
        double re = (double)c_[0] + h * ((double)c_[1] - (double)c_[3]);
        double im = (double)c_[2] + h * ((double)c_[1] + (double)c_[3]);
        double scale = std::pow(std::sqrt(2.0), -(double)k_);
        return {re * scale, im * scale};
    }

    /// Exact sign of a real element: -1, 0 or +1.
    int real_sign() const {
        if (!is_real()) {
            throw std::invalid_argument("real_sign of a non-real ring element");
        }
        // value * sqrt2^(k+1) = a sqrt2 + (b - d).
        int64_t a = c_[0];
        int64_t e = detail::checked_sub(c_[1], c_[3]);
        auto sgn = [](int64_t v) { return (v > 0) - (v < 0); };
        if (a == 0) {
            return sgn(e);
        }
        if (e == 0 || sgn(a) == sgn(e)) {
            return sgn(a);
        }
        // Opposite signs: compare 2 a^2 against e^2.
        __int128 lhs = (__int128)2 * a * a;
        __int128 rhs = (__int128)e * e;
        if (lhs == rhs) {
            return 0;
        }
        return lhs > rhs ? sgn(a) : sgn(e);
    }

    RingScalar operator-() const {
        return raw(detail::checked_neg(c_[0]), detail::checked_neg(c_[1]), detail::checked_neg(c_[2]),
                   detail::checked_neg(c_[3]), k_);
    }

    friend RingScalar operator+(const RingScalar &x, const RingScalar &y) {
        if (x.is_zero()) {
            return y;
        }
        if (y.is_zero()) {
            return x;
        }
        std::array<int64_t, 4> p = x.c_;
        std::array<int64_t, 4> q = y.c_;
        int64_t k = x.k_;
        for (int64_t t = x.k_; t < y.k_; t++) {
            p = times_sqrt2(p);
        }
        for (int64_t t = y.k_; t < x.k_; t++) {
            q = times_sqrt2(q);
        }
        if (y.k_ > k) {
            k = y.k_;
        }
        RingScalar r;
        for (int t = 0; t < 4; t++) {
            r.c_[t] = detail::checked_add(p[t], q[t]);
        }
        r.k_ = k;
        r.canonicalize();
        return r;
    }

    friend RingScalar operator-(const RingScalar &x, const RingScalar &y) {
        return x + (-y);
    }

    friend RingScalar operator*(const RingScalar &x, const RingScalar &y) {
        if (x.is_zero() || y.is_zero()) {
            return RingScalar();
        }
        std::array<int64_t, 4> r{0, 0, 0, 0};
        for (int s = 0; s < 4; s++) {
            if (x.c_[s] == 0) {
                continue;
            }
            for (int t = 0; t < 4; t++) {
                if (y.c_[t] == 0) {
                    continue;
                }
                int64_t v = detail::checked_mul(x.c_[s], y.c_[t]);
                int e = s + t;
                if (e >= 4) {
                    r[e - 4] = detail::checked_sub(r[e - 4], v);
                } else {
                    r[e] = detail::checked_add(r[e], v);
                }
            }
        }
        RingScalar out;
        out.c_ = r;
        out.k_ = detail::checked_add(x.k_, y.k_);
        out.canonicalize();
        return out;
    }

    RingScalar &operator+=(const RingScalar &o) {
        return *this = *this + o;
    }
    RingScalar &operator-=(const RingScalar &o) {
        return *this = *this - o;
    }
    RingScalar &operator*=(const RingScalar &o) {
        return *this = *this * o;
    }

    friend bool operator==(const RingScalar &x, const RingScalar &y) {
        return x.k_ == y.k_ && x.c_ == y.c_;
    }
    friend bool operator!=(const RingScalar &x, const RingScalar &y) {
        return !(x == y);
    }

    /// Power of w if this is one, else nullopt.
    std::optional<int> omega_power() const {
        for (int e = 0; e < 8; e++) {
            if (*this == omega(e)) {
                return e;
            }
        }
        return std::nullopt;
    }

    std::string str() const {
        if (auto e = omega_power()) {
            static const char *names[8] = {"1", "w", "i", "w^3", "-1", "-w", "-i", "-w^3"};
            return names[*e];
        }
        std::ostringstream out;
        out << "(" << c_[0] << "," << c_[1] << "," << c_[2] << "," << c_[3] << ")";
        if (k_ != 0) {
            out << "/r2^" << k_;
        }
        return out.str();
    }

   private:
    std::array<int64_t, 4> c_{0, 0, 0, 0};
    int64_t k_ = 0;

    static RingScalar raw(int64_t a, int64_t b, int64_t c, int64_t d, int64_t k) {
        RingScalar r;
        r.c_ = {a, b, c, d};
        r.k_ = k;
        return r;
    }

    static std::array<int64_t, 4> times_sqrt2(const std::array<int64_t, 4> &v) {
        using namespace detail;
        return {checked_sub(v[1], v[3]), checked_add(v[0], v[2]), checked_add(v[1], v[3]), checked_sub(v[2], v[0])};
    }

    void canonicalize() {
        if (is_zero()) {
            k_ = 0;
            return;
        }
        while (k_ > 0 && detail::is_even(c_[0] - c_[2]) && detail::is_even(c_[1] - c_[3])) {
            auto v = times_sqrt2(c_);
            c_ = {v[0] / 2, v[1] / 2, v[2] / 2, v[3] / 2};
            k_--;
        }
    }
};

inline std::ostream &operator<<(std::ostream &out, const RingScalar &v) {
    return out << v.str();
}

/// i^s for s taken mod 4.
inline RingScalar i_pow(int64_t s) {
    return RingScalar::omega(2 * (((s % 4) + 4) % 4));
}

}  // namespace ghzkit

#endif
