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

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghzkit/matrixio.hpp"
#include "ghzkit/suites.hpp"

namespace {

using namespace ghzkit;

constexpr int EXIT_FAILED_CHECKS = 1;
constexpr int EXIT_BAD_INPUT = 2;

struct GateArg {
    std::string label;
    std::optional<DenseMatrix> exact;
    std::optional<MatXc> numeric;
};

std::string vocabulary() {
    std::string s = "known gates:";
    for (const auto &[key, e] : gate_catalog()) {
        s += " " + e.name;
    }
    s += "\nfamilies (NAME:n):";
    for (Family f : {Family::CH_N, Family::B_N, Family::BPRIME_N, Family::RPRIME_N, Family::R_N}) {
        s += " " + family_name(f);
    }
    return s;
}

DenseMatrix named_gate(const std::string &name) {
    try {
        return make_gate(name);
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(std::string(e.what()) + "\n" + vocabulary());
    }
}

/// A gate name or a matrix file path.
GateArg resolve_gate(const std::string &arg) {
    GateArg g;
    g.label = arg;
    if (std::filesystem::is_regular_file(arg)) {
        MatrixFile f = parse_matrix_file(arg);
        for (const auto &w : f.warnings) {
            std::cerr << "warning: " << arg << ": " << w << "\n";
        }
        g.exact = f.exact;
        g.numeric = f.numeric;
        return g;
    }
    g.exact = named_gate(arg);
    return g;
}

int emit(const std::vector<VerificationReport> &reports, const std::string &format, bool verbose) {
    bool ok = true;
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : reports) {
            arr.push_back(r.to_json());
            ok = ok && r.ok();
        }
        std::cout << (reports.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    } else {
        for (const auto &r : reports) {
            std::cout << r.to_text(verbose);
            ok = ok && r.ok();
        }
    }
    return ok ? 0 : EXIT_FAILED_CHECKS;
}

std::string label_bits(uint32_t v, int n) {
    std::string s;
    for (int q = n - 1; q >= 0; q--) {
        s += char('0' + ((v >> q) & 1));
    }
    return s;
}

int run_classify(const GateArg &g) {
    if (g.numeric) {
        const MatXc &m = *g.numeric;
        int n = 0;
        while ((1 << n) < m.rows()) {
            n++;
        }
        std::cout << g.label << " (floating point entries)\n";
        std::cout << "  unitary: " << (is_unitary_numeric(m) ? "yes" : "no") << "\n";
        std::cout << "  pauli: " << (pauli_numeric(m, n, nullptr, nullptr, nullptr) ? "yes" : "no") << "\n";
        std::cout << "  clifford: " << (is_clifford_numeric(m, n) ? "yes" : "no") << "\n";
        if (n == 2 && is_unitary_numeric(m)) {
            NonlocalParams p = nonlocal_params(Mat4c(m));
            std::cout << "  nonlocal: " << str(p) << "\n";
            std::cout << "  entangling power: " << entangling_power(p) << "\n";
        }
        return 0;
    }
    const DenseMatrix &u = *g.exact;
    Classification c = classify(u);
    std::cout << g.label << "\n";
    if (!c.unitary) {
        std::cout << "  not unitary\n";
        return EXIT_FAILED_CHECKS;
    }
    std::cout << "  class: " << class_text(c) << "\n";
    if (u.qubits() == 2) {
        std::cout << "  yang-baxter: " << (yang_baxter_holds(u) ? "yes" : "no") << "\n";
    }
    if (!c.factorization) {
        std::cout << "  factorization: NotATransform (" << c.reason << ")\n";
        return 0;
    }
    const auto &f = *c.factorization;
    bool identity_perm = true;
    for (uint32_t j = 0; j < f.perm.size(); j++) {
        identity_perm = identity_perm && f.perm[j] == j;
    }
    std::cout << "  factorization: u = C_H P E\n";
    std::cout << "  P:" << (identity_perm ? " identity" : "") << "\n";
    if (!identity_perm) {
        for (uint32_t j = 0; j < f.perm.size(); j++) {
            std::cout << "    " << label_bits(j, f.n) << " -> " << label_bits(f.perm[j], f.n) << "\n";
        }
    }
    std::cout << "  E:";
    for (const auto &ph : f.phase) {
        std::cout << " " << ph.str();
    }
    std::cout << "\n";
    return 0;
}

int run_entangle(const GateArg &g, std::optional<long> samples, std::optional<uint64_t> seed) {
    MatXc m = g.exact ? to_eigen(*g.exact) : *g.numeric;
    if (m.rows() != 4) {
        throw std::invalid_argument("entangle needs a two-qubit gate");
    }
    NonlocalParams p = nonlocal_params(Mat4c(m));
    double ep = entangling_power(p);
    std::cout << g.label << "\n  nonlocal: " << str(p) << "\n";
    std::printf("  entangling power: %.12f\n", ep);
    if (samples) {
        double mc = entangling_power_oracle(Mat4c(m), *samples, *seed);
        double tol = 5 / std::sqrt((double)*samples);
        bool ok = std::abs(mc - ep) < tol;
        std::printf("  oracle (%ld samples, seed %llu): %.6f  [%s, tolerance %.6f]\n", *samples,
                    (unsigned long long)*seed, mc, ok ? "pass" : "fail", tol);
        return ok ? 0 : EXIT_FAILED_CHECKS;
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"ghzkit: exact gate algebra for GHZ and Bell transforms"};
    app.require_subcommand(1);
    std::string data_dir = default_data_dir().string();
    std::string format = "text";
    bool verbose = false;
    app.add_option("--data-dir", data_dir, "directory holding the golden tables");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("-v,--verbose", verbose, "list passing checks too");

    auto *tables = app.add_subcommand("tables", "check conjugation tables");
    std::string family;
    int fam_n = 0;
    tables->add_option("--family", family, "family or gate section, e.g. B_N or TOFFOLI");
    tables->add_option("--n", fam_n, "family size")->check(CLI::Range(2, 12));

    auto *classify_cmd = app.add_subcommand("classify", "classify a gate and factor it as C_H P E");
    std::string classify_arg;
    classify_cmd->add_option("gate", classify_arg, "gate name or matrix file")->required();

    auto *teleport = app.add_subcommand("teleport", "teleportation identities, gate tables and simulation");
    std::string bell, u_gate, cu_gate;
    std::optional<long> sim_runs;
    std::optional<uint64_t> sim_seed;
    std::optional<std::string> kl_arg;
    teleport->add_option("--bell", bell, "Bell transform")->required();
    teleport->add_option("--u", u_gate, "single-qubit gate to teleport");
    teleport->add_option("--cu", cu_gate, "two-qubit gate to teleport");
    auto *sim_opt = teleport->add_option("--simulate", sim_runs, "number of runs per input state")
                        ->check(CLI::PositiveNumber);
    auto *seed_opt = teleport->add_option("--seed", sim_seed, "random seed");
    sim_opt->needs(seed_opt);
    teleport->add_option("--kl", kl_arg, "resource label, two bits such as 10")
        ->check(CLI::IsMember({"00", "01", "10", "11"}));

    auto *entangle = app.add_subcommand("entangle", "non-local parameters and entangling power");
    std::string ent_arg;
    std::optional<long> oracle_samples;
    std::optional<uint64_t> oracle_seed;
    entangle->add_option("gate", ent_arg, "gate name or matrix file")->required();
    auto *oracle_opt =
        entangle->add_option("--oracle", oracle_samples, "Monte-Carlo samples")->check(CLI::PositiveNumber);
    auto *oseed_opt = entangle->add_option("--seed", oracle_seed, "random seed");
    oracle_opt->needs(oseed_opt);

    auto *ybe = app.add_subcommand("ybe", "Yang-Baxter relation check");
    std::string ybe_gate;
    ybe->add_option("gate", ybe_gate, "two-qubit gate")->required();

    auto *identities = app.add_subcommand("identities", "decomposition and exponential identities");
    std::string id_name;
    identities->add_option("--name", id_name, "run a single identity");

    auto *report = app.add_subcommand("report", "run every suite");
    long report_runs = 1000;
    uint64_t report_seed = 1;
    report->add_option("--runs", report_runs, "simulation runs per input state")->check(CLI::PositiveNumber);
    report->add_option("--seed", report_seed, "random seed");

    auto *export_cmd = app.add_subcommand("export", "write a gate in the matrix file format");
    std::string export_gate;
    export_cmd->add_option("gate", export_gate, "gate name")->required();

    auto *list = app.add_subcommand("list", "list gate names and identities");

    CLI11_PARSE(app, argc, argv);

    try {
        std::filesystem::path dir = data_dir;
        if (*tables) {
            return emit({suite_tables(dir, {family, "", fam_n})}, format, verbose);
        }
        if (*classify_cmd) {
            return run_classify(resolve_gate(classify_arg));
        }
        if (*teleport) {
            named_gate(bell);
            std::vector<VerificationReport> reps;
            reps.push_back(suite_teleport(dir, bell, u_gate, cu_gate));
            if (sim_runs) {
                int kl = kl_arg ? std::stoi(*kl_arg, nullptr, 2) : -1;
                reps.push_back(suite_simulate(bell, *sim_runs, *sim_seed, kl));
            }
            return emit(reps, format, verbose);
        }
        if (*entangle) {
            return run_entangle(resolve_gate(ent_arg), oracle_samples, oracle_seed);
        }
        if (*ybe) {
            named_gate(ybe_gate);
            return emit({suite_ybe(ybe_gate)}, format, verbose);
        }
        if (*identities) {
            return emit({suite_identities(id_name)}, format, verbose);
        }
        if (*report) {
            return emit(all_suites(dir, report_runs, report_seed), format, verbose);
        }
        if (*export_cmd) {
            std::cout << export_matrix(named_gate(export_gate));
            return 0;
        }
        if (*list) {
            std::cout << vocabulary() << "\nidentities:";
            for (const auto &id : identity_registry()) {
                std::cout << " " << id.name;
            }
            std::cout << "\n";
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    }
    return EXIT_BAD_INPUT;
}
