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

#ifndef GHZKIT_NONLOCAL_HPP
#define GHZKIT_NONLOCAL_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "ghzkit/gates.hpp"
#include "ghzkit/pauli.hpp"

namespace ghzkit {

using cplx = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using MatXc = Eigen::MatrixXcd;

inline MatXc to_eigen(const DenseMatrix &m) {
    MatXc out(m.dim(), m.dim());
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out((Eigen::Index)r, (Eigen::Index)c) = m(r, c).to_complex();
        }
    }
    return out;
}

inline bool is_unitary_numeric(const MatXc &u, double tol = 1e-9) {
    if (u.rows() != u.cols()) {
        return false;
    }
    return (u.adjoint() * u - MatXc::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < tol;
}

struct NonlocalParams {
    double a = 0, b = 0, c = 0;
};

/// Folds (a, b, c) into pi/4 >= a >= b >= |c|, with c >= 0 when a = pi/4.
inline NonlocalParams weyl_canonicalize(NonlocalParams p, double tol = 1e-9) {
    const double quarter = std::numbers::pi / 4, half = std::numbers::pi / 2;
    std::array<double, 3> v = {p.a, p.b, p.c};
    int flips = 0;
    for (double &x : v) {
        x = std::fmod(x, half);
        if (x < 0) {
            x += half;
        }
        if (x > half - tol) {
            x = 0;
        }
        if (x > quarter + tol) {
            x = half - x;
            flips++;
        }
        x = std::clamp(x, 0.0, quarter);
    }
    std::sort(v.begin(), v.end(), std::greater<double>());
    if (flips % 2 && v[2] > tol) {
        v[2] = -v[2];
        if (v[0] > quarter - tol) {
            v[2] = -v[2];
        }
    }
    return {v[0], v[1], v[2]};
}

inline bool weyl_equivalent(const NonlocalParams &p, const NonlocalParams &q, double tol = 1e-9) {
    NonlocalParams x = weyl_canonicalize(p, tol), y = weyl_canonicalize(q, tol);
    return std::abs(x.a - y.a) < tol && std::abs(x.b - y.b) < tol && std::abs(x.c - y.c) < tol;
}

inline Mat4c magic_basis() {
    return to_eigen(gates::Q());
}

/// Canonical (a, b, c) with u locally equivalent to exp(i(a XX + b YY + c ZZ)).
inline NonlocalParams nonlocal_params(const Mat4c &u, double tol = 1e-9) {
    if (!is_unitary_numeric(u, tol)) {
        throw std::invalid_argument("nonlocal_params needs a unitary matrix");
    }
    cplx det = u.determinant();
    Mat4c su = u * std::pow(det, -0.25);
    Mat4c q = magic_basis();
    Mat4c M = q.adjoint() * su * q;
    Mat4c m = M.transpose() * M;
    Eigen::ComplexEigenSolver<Mat4c> es(m, false);
    std::array<double, 4> theta;
    for (int t = 0; t < 4; t++) {
        theta[t] = std::arg(es.eigenvalues()[t]);
    }
    std::sort(theta.begin(), theta.end());
    // Eigenphases of m are 2x those of exp(i(aXX+bYY+cZZ)) on the Bell basis:
    // a-b+c, -a+b+c, a+b-c, -a-b-c.
    double l1 = theta[0] / 2, l2 = theta[1] / 2, l3 = theta[2] / 2;
    NonlocalParams p{(l1 + l3) / 2, (l2 + l3) / 2, (l1 + l2) / 2};
    return weyl_canonicalize(p, tol);
}

inline NonlocalParams nonlocal_params(const DenseMatrix &u, double tol = 1e-9) {
    if (u.qubits() != 2) {
        throw std::invalid_argument("nonlocal_params needs a two-qubit gate");
    }
    return nonlocal_params(Mat4c(to_eigen(u)), tol);
}

inline double entangling_power(const NonlocalParams &p) {
    double ca = std::cos(2 * p.a), cb = std::cos(2 * p.b), cc = std::cos(2 * p.c);
    double sa = std::sin(2 * p.a), sb = std::sin(2 * p.b), sc = std::sin(2 * p.c);
    return 1 - ca * ca * cb * cb * cc * cc - sa * sa * sb * sb * sc * sc;
}

inline double entangling_power(const Mat4c &u) {
    return entangling_power(nonlocal_params(u));
}

inline double entangling_power(const DenseMatrix &u) {
    return entangling_power(nonlocal_params(u));
}

template <typename Rng>
Eigen::Vector2cd haar_qubit_state(Rng &rng) {
    std::normal_distribution<double> g;
    Eigen::Vector2cd v(cplx(g(rng), g(rng)), cplx(g(rng), g(rng)));
    return v / v.norm();
}

template <typename Rng>
Mat2c haar_unitary_2(Rng &rng) {
    std::normal_distribution<double> g;
    Mat2c z;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            z(r, c) = cplx(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Mat2c> qr(z);
    Mat2c qm = qr.householderQ();
    Mat2c rm = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int t = 0; t < 2; t++) {
        qm.col(t) *= rm(t, t) / std::abs(rm(t, t));
    }
    return qm;
}

/// 1 - Tr(rho_A^2) of a two-qubit pure state.
inline double linear_entropy(const Eigen::Vector4cd &psi) {
    Mat2c a;
    a << psi(0), psi(1), psi(2), psi(3);
    Mat2c rho = a * a.adjoint();
    return 1 - (rho * rho).trace().real();
}

/// Mean linear entropy over Haar-random product inputs, scaled by 9/2 so CNOT gives 1.
template <typename Rng>
double entangling_power_oracle(const Mat4c &u, long samples, Rng &rng) {
    if (samples < 1) {
        throw std::invalid_argument("oracle needs at least one sample");
    }
    double sum = 0;
    for (long s = 0; s < samples; s++) {
        Eigen::Vector2cd p1 = haar_qubit_state(rng), p2 = haar_qubit_state(rng);
        Eigen::Vector4cd in;
        in << p1(0) * p2(0), p1(0) * p2(1), p1(1) * p2(0), p1(1) * p2(1);
        sum += linear_entropy(u * in);
    }
    return 4.5 * sum / (double)samples;
}

inline double entangling_power_oracle(const Mat4c &u, long samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return entangling_power_oracle(u, samples, rng);
}

inline double entangling_power_oracle(const DenseMatrix &u, long samples, uint64_t seed) {
    return entangling_power_oracle(Mat4c(to_eigen(u)), samples, seed);
}

inline std::string str(const NonlocalParams &p) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "(%.12f, %.12f, %.12f)", p.a, p.b, p.c);
    return buf;
}

// Float Pauli/Clifford recognition for matrices read as complex entries.

/// True when m is i^s X^x Z^z for some masks; outputs the masks and the phase.
inline bool pauli_numeric(const MatXc &m, int n, uint32_t *x_out, uint32_t *z_out, cplx *phase_out,
                          double tol = 1e-9) {
    uint32_t dim = uint32_t{1} << n;
    uint32_t x = 0;
    while (x < dim && std::abs(m(x, 0)) < tol) {
        x++;
    }
    if (x == dim) {
        return false;
    }
    cplx ph = m(x, 0);
    bool quarter_turn = std::abs(ph.imag()) < tol || std::abs(ph.real()) < tol;
    if (std::abs(std::abs(ph) - 1) > tol || !quarter_turn) {
        return false;
    }
    // X^x Z^z |c> = (-1)^|z & c| |c ^ x>, so z is read off the single-bit columns.
    uint32_t z = 0;
    for (uint32_t b = 1; b < dim; b <<= 1) {
        if (std::abs(m(b ^ x, b) + ph) < tol) {
            z |= b;
        }
    }
    for (uint32_t c = 0; c < dim; c++) {
        for (uint32_t r = 0; r < dim; r++) {
            cplx want = r == (c ^ x) ? (std::popcount(z & c) % 2 ? -ph : ph) : cplx(0);
            if (std::abs(m(r, c) - want) > tol) {
                return false;
            }
        }
    }
    if (x_out) {
        *x_out = x;
    }
    if (z_out) {
        *z_out = z;
    }
    if (phase_out) {
        *phase_out = ph;
    }
    return true;
}

inline bool is_clifford_numeric(const MatXc &u, int n, double tol = 1e-9) {
    MatXc ud = u.adjoint();
    for (char c : {'X', 'Z'}) {
        for (int q = 1; q <= n; q++) {
            MatXc p = to_eigen(to_matrix(PauliWord::single(n, q, c)));
            if (!pauli_numeric(u * p * ud, n, nullptr, nullptr, nullptr, tol)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace ghzkit

#endif
