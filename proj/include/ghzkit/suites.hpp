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

#ifndef GHZKIT_SUITES_HPP
#define GHZKIT_SUITES_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ghzkit/golden.hpp"
#include "ghzkit/identities.hpp"
#include "ghzkit/nonlocal.hpp"

namespace ghzkit {

/// Catalog name of a gate given any accepted spelling.
inline std::string canonical_gate_name(const std::string &name) {
    DenseMatrix m = make_gate(name);
    std::string u = upper(name);
    if (gate_catalog().count(u)) {
        return u;
    }
    for (const auto &[key, entry] : gate_catalog()) {
        if (entry.matrix.qubits() == m.qubits() && entry.matrix == m) {
            return key;
        }
    }
    return u;
}

/// Catalog Bell transforms: the forward gates, the T-phase variants, and the inverses that are transforms.
inline std::vector<std::string> catalog_bell_transforms() {
    std::vector<std::string> out;
    for (const auto &[key, entry] : gate_catalog()) {
        if (entry.tags.bell_transform) {
            out.push_back(key);
        }
    }
    return out;
}

/// Upper tail of chi-squared with three degrees of freedom.
inline double chi2_sf_3(double x) {
    if (x <= 0) {
        return 1.0;
    }
    return std::erfc(std::sqrt(x / 2)) + std::sqrt(2 * x / std::numbers::pi) * std::exp(-x / 2);
}

inline double chi2_uniform(const std::array<long, 4> &counts) {
    long total = 0;
    for (long c : counts) {
        total += c;
    }
    double e = total / 4.0, x = 0;
    for (long c : counts) {
        x += (c - e) * (c - e) / e;
    }
    return x;
}

inline VerificationReport suite_tables(const std::filesystem::path &dir, const GoldenFilter &f = {}) {
    VerificationReport r = check_conjugation_tables(dir, f);
    r.suite = "tables";
    return r;
}


/// Teleportation identities for one transform, plus optional single- and two-gate tables.
inline VerificationReport suite_teleport(const std::filesystem::path &dir, const std::string &bell,
                                         const std::string &u = "", const std::string &cu = "") {
    VerificationReport r{"teleport", {}};
    std::string name = canonical_gate_name(bell);
    DenseMatrix b = make_gate(bell);
    for (int kl = 0; kl < 4; kl++) {
        auto c = verify_teleport_eq(b, kl >> 1, kl & 1);
        std::string tag = name + " " + bits_label({{"k", kl >> 1}, {"l", kl & 1}});
        r.add("forward " + tag, c.forward, "exact operator identity", c.forward ? "holds" : "differs");
        r.add("mirrored " + tag, c.mirrored, "exact operator identity", c.mirrored ? "holds" : "differs");
    }
    r.merge(check_correction_tables(dir, {name, "", 0}));
    if (!u.empty()) {
        r.merge(check_single_gate_tables(dir, {name, canonical_gate_name(u), 0}));
        auto entries = single_gate_table(b, make_gate(u));
        int counts[4] = {0, 0, 0, 0};
        for (const auto &e : entries) {
            counts[(int)e.level]++;
        }
        r.add(name + " " + upper(u) + " levels", true, "",
              std::to_string(counts[1]) + " Pauli, " + std::to_string(counts[2]) + " Clifford, " +
                  std::to_string(counts[3]) + " beyond");
    }
    if (!cu.empty()) {
        DenseMatrix g = make_gate(cu);
        r.merge(check_two_gate_tables(dir, {name, canonical_gate_name(cu), 0}));
        bool all = true;
        for (int a = 0; a < 4 && all; a++) {
            for (int c = 0; c < 4 && all; c++) {
                all = verify_two_gate_teleport(b, g, a >> 1, a & 1, c >> 1, c & 1);
            }
        }
        r.add(name + " " + upper(cu) + " six-qubit identity", all, "holds for all 16 resource labels",
              all ? "holds" : "differs");
    }
    return r;
}

inline StateVector plus_state() {
    RingScalar h = RingScalar::inv_sqrt2();
    return StateVector(1, {h, h});
}

/// Seeded teleportation runs on |0>, |1>, |+>; kl < 0 cycles the resource label.
inline VerificationReport suite_simulate(const std::string &bell, long runs, uint64_t seed, int kl = -1) {
    VerificationReport r{"simulate", {}};
    std::string name = canonical_gate_name(bell);
    DenseMatrix b = make_gate(bell);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, StateVector>> inputs = {
        {"|0>", StateVector::basis(1, 0)}, {"|1>", StateVector::basis(1, 1)}, {"|+>", plus_state()}};
    for (const auto &[label, psi] : inputs) {
        std::array<long, 4> counts{};
        long bad = 0;
        for (long t = 0; t < runs; t++) {
            int use = kl >= 0 ? kl : (int)(t % 4);
            SimulationRun run = simulate(b, psi, use >> 1, use & 1, rng);
            counts[2 * run.i + run.j]++;
            bad += !run.phase.has_value();
        }
        r.add(name + " psi=" + label + " recovered", bad == 0, std::to_string(runs) + " runs",
              std::to_string(runs - bad) + " recovered");
        double x = chi2_uniform(counts);
        double p = chi2_sf_3(x);
        char buf[160];
        std::snprintf(buf, sizeof buf, "counts %ld %ld %ld %ld, chi2 %.3f, p %.4f", counts[0], counts[1], counts[2],
                      counts[3], x, p);
        r.add(name + " psi=" + label + " uniform", p > 0.001, "p > 0.001", buf);
    }
    return r;
}

inline VerificationReport suite_identities(const std::string &only = "") {
    VerificationReport r{"identities", {}};
    for (const auto &id : identity_registry()) {
        if (!only.empty() && id.name != only) {
            continue;
        }
        IdentityResult res = verify_identity(id);
        std::string want = id.expect_holds ? (id.mode == PhaseMode::Exact ? "holds with phase " + id.stated_phase.str()
                                                                          : "holds up to phase")
                                           : "fails";
        std::string got = res.phase_found ? "phase " + res.phase_found->str() : "not proportional";
        r.add(id.name, res.as_expected, want, got);
    }
    if (!only.empty() && r.checks.empty()) {
        throw std::out_of_range("no identity named '" + only + "'");
    }
    if (only.empty()) {
        for (const char *g : {"B", "Q", "R", "BT", "RT"}) {
            DenseMatrix u = make_gate(g);
            auto [a, b] = parity_blocks(u);
            bool ok = parity_gate_circuit(a, b) == u;
            r.add(std::string("parity_circuit ") + g, ok, "CNOT12 CU21 (A x I) CNOT12 equals the gate",
                  ok ? "equal" : "differs");
        }
        for (auto [g, want] : std::vector<std::pair<const char *, bool>>{
                 {"B", true}, {"BINV", true}, {"BP", true}, {"BPINV", true}, {"CNOT", false}}) {
            bool got = yang_baxter_holds(make_gate(g));
            r.add(std::string("yang_baxter ") + g, got == want, want ? "holds" : "fails", got ? "holds" : "fails");
        }
    }
    return r;
}

inline VerificationReport suite_ybe(const std::string &gate) {
    VerificationReport r{"ybe", {}};
    bool got = yang_baxter_holds(make_gate(gate));
    bool want = gate_catalog().count(canonical_gate_name(gate))
                    ? gate_catalog().at(canonical_gate_name(gate)).tags.yang_baxter
                    : got;
    r.add(canonical_gate_name(gate), got == want, want ? "holds" : "fails", got ? "holds" : "fails");
    return r;
}

/// Stabilizers, J/K labels, family factorizations and multi-copy X signs.
inline VerificationReport suite_ghz(int max_stabilizer_n = 8) {
    VerificationReport r{"ghz", {}};
    for (int n = 1; n <= max_stabilizer_n; n++) {
        long bad = 0, jk_bad = 0;
        for (uint32_t bits = 0; bits < (uint32_t{1} << n); bits++) {
            GhzLabel lab(n, bits);
            bad += !verify_stabilizers(lab);
            jk_bad += j_to_k(index_J(lab), n) != index_K(lab);
        }
        r.add("stabilizers n=" + std::to_string(n), bad == 0, "all labels", std::to_string(bad) + " failing labels");
        r.add("j_to_k n=" + std::to_string(n), jk_bad == 0, "matches index_K",
              std::to_string(jk_bad) + " mismatches");
    }
    // Displayed orderings: column J of the GHZ basis is Phi_K.
    std::vector<std::pair<int, std::vector<uint32_t>>> shown = {{2, {1, 2, 4, 3}}, {3, {1, 2, 3, 4, 8, 7, 6, 5}}};
    for (const auto &[n, ks] : shown) {
        bool ok = true;
        for (uint32_t J = 1; J <= ks.size(); J++) {
            ok = ok && j_to_k(J, n) == ks[J - 1];
        }
        r.add("displayed ordering n=" + std::to_string(n), ok, "listed K sequence", ok ? "matches" : "differs");
    }
    for (int n = 2; n <= 4; n++) {
        uint32_t dim = uint32_t{1} << n, rest = (dim >> 1) - 1;
        auto bit = [&](uint32_t j, int q) { return (j >> (n - q)) & 1; };
        auto fb = factor_transform(family_gate(Family::B_N, n));
        auto fbp = factor_transform(family_gate(Family::BPRIME_N, n));
        bool ok_b = true, ok_bp = true;
        for (uint32_t j = 0; j < dim; j++) {
            uint32_t j1 = bit(j, 1), jn = bit(j, n);
            uint32_t tail = j1 ? (j ^ rest) & rest : j & rest;  // j1 + jq for q >= 2
            uint32_t pb = ((jn ^ 1) << (n - 1)) | tail;
            uint32_t pbp = ((j1 ^ 1) << (n - 1)) | tail;
            RingScalar eb = (j1 & (jn ^ 1)) ? RingScalar(-1) : RingScalar(1);
            ok_b = ok_b && fb.perm[j] == pb && fb.phase[j] == eb;
            ok_bp = ok_bp && fbp.perm[j] == pbp && fbp.phase[j] == RingScalar(1);
        }
        r.add("B_N factorization n=" + std::to_string(n), ok_b, "perm (jn+1, j1+j2, ..), phase (-1)^(j1(jn+1))",
              ok_b ? "matches" : "differs");
        r.add("BPRIME_N factorization n=" + std::to_string(n), ok_bp, "perm (j1+1, j1+j2, ..), phase 1",
              ok_bp ? "matches" : "differs");
    }
    for (int n = 2; n <= 5; n++) {
        struct Case {
            const char *name;
            DenseMatrix u;
            int site, sign;
        };
        std::vector<Case> cases = {{"CH_N", family_gate(Family::CH_N, n), 1, 1},
                                   {"B_N", family_gate(Family::B_N, n), n, -1},
                                   {"BPRIME_N", family_gate(Family::BPRIME_N, n), 1, -1},
                                   {"R_N", family_gate(Family::R_N, n), 1, 1}};
        for (auto &c : cases) {
            auto s = multicopy_x_check(c.u, c.site);
            r.add(std::string("multicopy ") + c.name + " n=" + std::to_string(n) + " Z" + std::to_string(c.site),
                  s && *s == c.sign, std::to_string(c.sign), s ? std::to_string(*s) : "not X...X");
        }
    }
    for (const auto &name : catalog_bell_transforms()) {
        const DenseMatrix &u = gate_catalog().at(name).matrix;
        auto f = factor_transform(u);
        r.add("rebuild " + name, f.rebuild() == u, "C_H P E equals the gate", f.rebuild() == u ? "equal" : "differs");
    }
    return r;
}

inline std::string class_text(const Classification &c) {
    std::string s = c.clifford ? "Clifford" : "non-Clifford";
    if (c.qubits == 2) {
        s += c.matchgate ? ", matchgate" : (c.parity_preserving ? ", parity-preserving" : ", non-parity-preserving");
    }
    s += c.ghz_transform ? (c.qubits == 2 ? ", Bell transform" : ", GHZ transform") : "";
    return s;
}

/// Classifier output against the catalog tags.
inline VerificationReport suite_classification() {
    VerificationReport r{"classification", {}};
    for (const auto &[key, e] : gate_catalog()) {
        Classification c = classify(e.matrix);
        bool pp = e.matrix.qubits() == 2 ? c.parity_preserving : false;
        bool mg = e.matrix.qubits() == 2 ? c.matchgate : false;
        bool ok = c.clifford == e.tags.clifford && pp == e.tags.parity_preserving && mg == e.tags.matchgate &&
                  c.ghz_transform == e.tags.bell_transform;
        Classification want;
        want.qubits = c.qubits;
        want.clifford = e.tags.clifford;
        want.parity_preserving = e.tags.parity_preserving;
        want.matchgate = e.tags.matchgate;
        want.ghz_transform = e.tags.bell_transform;
        r.add(key, ok, class_text(want), class_text(c));
    }
    return r;
}

/// Non-local parameters and entangling power of the two-qubit catalog.
inline VerificationReport suite_entangle(long oracle_samples = 20000, uint64_t seed = 1) {
    VerificationReport r{"entangle", {}};
    const double q = std::numbers::pi / 4;
    std::vector<std::pair<std::string, NonlocalParams>> expected = {
        {"CH", {q, 0, 0}},   {"B", {q, 0, 0}}, {"Q", {q, 0, 0}},  {"BPINV", {q, 0, 0}},
        {"R", {q, 0, q}},    {"RINV", {q, 0, q}}};
    for (const auto &[g, want] : expected) {
        NonlocalParams got = nonlocal_params(make_gate(g));
        r.add("params " + g, weyl_equivalent(got, want), str(weyl_canonicalize(want)), str(got));
    }
    for (const char *g : {"CH", "B", "Q", "R", "CHINV", "BINV", "QINV", "RINV"}) {
        double ep = entangling_power(make_gate(g));
        r.add(std::string("e_p ") + g, std::abs(ep - 1) < 1e-9, "1 within 1e-9", std::to_string(ep));
    }
    double tol = 5 / std::sqrt((double)oracle_samples);
    for (const auto &[key, e] : gate_catalog()) {
        if (e.matrix.qubits() != 2) {
            continue;
        }
        double ep = entangling_power(e.matrix);
        double mc = entangling_power_oracle(e.matrix, oracle_samples, seed);
        r.add("oracle " + key, std::abs(ep - mc) < tol, std::to_string(ep) + " +- " + std::to_string(tol),
              std::to_string(mc));
    }
    return r;
}

/// Every suite with default settings, ordered by suite name.
inline std::vector<VerificationReport> all_suites(const std::filesystem::path &dir, long sim_runs = 1000,
                                                  uint64_t seed = 1) {
    std::vector<VerificationReport> out;
    out.push_back(suite_classification());
    VerificationReport c = check_correction_tables(dir);
    out.push_back(c);
    out.push_back(suite_entangle(20000, seed));
    out.push_back(suite_ghz());
    out.push_back(suite_identities());
    VerificationReport sim{"simulate", {}};
    for (const auto &name : catalog_bell_transforms()) {
        sim.merge(suite_simulate(name, sim_runs, seed));
    }
    out.push_back(sim);
    out.push_back(check_single_gate_tables(dir));
    out.push_back(suite_tables(dir));
    VerificationReport tel{"teleport", {}};
    for (const auto &name : catalog_bell_transforms()) {
        for (int kl = 0; kl < 4; kl++) {
            auto eq = verify_teleport_eq(make_gate(name), kl >> 1, kl & 1);
            std::string tag = name + " " + bits_label({{"k", kl >> 1}, {"l", kl & 1}});
            tel.add("forward " + tag, eq.forward, "exact operator identity", eq.forward ? "holds" : "differs");
            tel.add("mirrored " + tag, eq.mirrored, "exact operator identity", eq.mirrored ? "holds" : "differs");
        }
    }
    out.push_back(tel);
    out.push_back(check_two_gate_tables(dir));
    return out;
}

}  // namespace ghzkit

#endif
