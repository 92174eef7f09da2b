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

#ifndef GHZKIT_GOLDEN_HPP
#define GHZKIT_GOLDEN_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzkit/expression.hpp"
#include "ghzkit/formula.hpp"
#include "ghzkit/report.hpp"
#include "ghzkit/teleport.hpp"

namespace ghzkit {

inline std::filesystem::path default_data_dir() {
    if (const char *env = std::getenv("GHZKIT_DATA_DIR")) {
        return env;
    }
#ifdef GHZKIT_DATA_DIR
    return GHZKIT_DATA_DIR;
#else
    return "data";
#endif
}

struct TableLine {
    int line_no;
    std::vector<std::string> fields;  // the leading columns
    std::string rest;                 // everything after them, trimmed
};

/// Reads a whitespace-separated table, splitting off `columns` leading fields. '#' starts a comment.
inline std::vector<TableLine> read_table(const std::filesystem::path &path, int columns) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<TableLine> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        TableLine t{no, {}, {}};
        std::string f;
        while ((int)t.fields.size() < columns && ss >> f) {
            t.fields.push_back(f);
        }
        if (t.fields.empty()) {
            continue;
        }
        if ((int)t.fields.size() < columns) {
            throw std::runtime_error(path.string() + ":" + std::to_string(no) + ": too few columns");
        }
        std::getline(ss, t.rest);
        auto b = t.rest.find_first_not_of(" \t");
        auto e = t.rest.find_last_not_of(" \t\r");
        t.rest = b == std::string::npos ? "" : t.rest.substr(b, e - b + 1);
        out.push_back(std::move(t));
    }
    return out;
}

inline std::vector<std::string> split_commas(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        out.push_back(part);
    }
    return out;
}

inline std::string bits_label(std::initializer_list<std::pair<const char *, int>> vars) {
    std::string s;
    for (auto &[name, v] : vars) {
        s += std::string(s.empty() ? "" : ",") + name + "=" + std::to_string(v);
    }
    return s;
}

/// Restricts golden checks; empty fields match everything.
struct GoldenFilter {
    std::string transform;  // also matches conjugation section names
    std::string gate;
    int n = 0;  // family size for conjugation sections

    static bool match(const std::string &want, const std::string &have) {
        return want.empty() || upper(want) == upper(have);
    }
};

/// Conjugation tables: Pauli images per gate, keyed by "[NAME]" or "[FAMILY n]" sections.
inline VerificationReport check_conjugation_tables(const std::filesystem::path &data_dir,
                                                   const GoldenFilter &filter = {}) {
    VerificationReport rep{"conjugation", {}};
    auto path = data_dir / "conjugation.tbl";
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string line, section;
    DenseMatrix u(1);
    int n = 0;
    int no = 0;
    bool active = false;
    while (std::getline(in, line)) {
        no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) {
            continue;
        }
        if (first.front() == '[') {
            auto close = line.find(']');
            section = line.substr(line.find('[') + 1, close - line.find('[') - 1);
            std::istringstream hs(section);
            std::string name;
            int fam_n = 0;
            hs >> name;
            bool has_n = (bool)(hs >> fam_n);
            active = GoldenFilter::match(filter.transform, name) && (filter.n == 0 || fam_n == filter.n);
            if (!active) {
                continue;
            }
            if (has_n) {
                auto fam = parse_family(name);
                if (!fam) {
                    throw std::runtime_error(path.string() + ":" + std::to_string(no) + ": unknown family " + name);
                }
                u = family_gate(*fam, fam_n);
            } else {
                u = make_gate(name);
            }
            n = u.qubits();
            continue;
        }
        std::string arrow;
        ss >> arrow;
        std::string out;
        std::getline(ss, out);
        out.erase(0, out.find_first_not_of(" \t"));
        out.erase(out.find_last_not_of(" \t\r") + 1);
        if (arrow != "->" || section.empty()) {
            throw std::runtime_error(path.string() + ":" + std::to_string(no) + ": malformed row");
        }
        if (!active) {
            continue;
        }
        PauliWord p = parse_pauli(first, n);
        DenseMatrix img = u * to_matrix(p) * dagger(u);
        std::string id = section + " " + first;
        if (looks_like_pauli(out)) {
            auto w = pauli_from_matrix(img);
            rep.add(id, w && render(*w) == out, out, w ? render(*w) : "non-Pauli image");
        } else {
            rep.add(id, img == evaluate(out, n), out, img.str());
        }
    }
    return rep;
}

/// V_kl and U_ij against the closed forms in corrections.tbl.
inline VerificationReport check_correction_tables(const std::filesystem::path &data_dir,
                                                  const GoldenFilter &filter = {}) {
    VerificationReport rep{"corrections", {}};
    for (const auto &row : read_table(data_dir / "teleport" / "corrections.tbl", 2)) {
        const std::string &tname = row.fields[0];
        if (!GoldenFilter::match(filter.transform, tname)) {
            continue;
        }
        bool is_u = row.fields[1] == "U";
        CorrectionTable t = derive_corrections(make_gate(tname));
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                FormulaEnv env;
                env.bits = is_u ? std::map<std::string, int>{{"i", a}, {"j", b}}
                                : std::map<std::string, int>{{"k", a}, {"l", b}};
                DenseMatrix want = evaluate_formula(row.rest, env);
                DenseMatrix got = is_u ? t.U[2 * a + b].matrix() : t.V[2 * a + b].matrix();
                std::string id = tname + " " + row.fields[1] + (is_u ? " i=" : " k=") + std::to_string(a) +
                                 (is_u ? ",j=" : ",l=") + std::to_string(b);
                rep.add(id, want == got, want.str(), got.str());
            }
        }
    }
    return rep;
}

/// u U_ij u^dagger and u V_kl u^dagger against single_gate.tbl.
inline VerificationReport check_single_gate_tables(const std::filesystem::path &data_dir,
                                                   const GoldenFilter &filter = {}) {
    VerificationReport rep{"single_gate", {}};
    for (const auto &row : read_table(data_dir / "teleport" / "single_gate.tbl", 3)) {
        const std::string &tname = row.fields[0];
        const std::string &gname = row.fields[1];
        if (!GoldenFilter::match(filter.transform, tname) || !GoldenFilter::match(filter.gate, gname)) {
            continue;
        }
        bool is_r = row.fields[2] == "R";
        auto entries = single_gate_table(make_gate(tname), make_gate(gname));
        for (const auto &e : entries) {
            FormulaEnv env;
            env.bits = {{"i", e.i}, {"j", e.j}, {"k", e.k}, {"l", e.l}};
            DenseMatrix want = evaluate_formula(row.rest, env);
            const DenseMatrix &got = is_r ? e.R : e.S;
            std::string id = tname + " " + gname + " " + row.fields[2] + " " +
                             (is_r ? bits_label({{"i", e.i}, {"j", e.j}}) : bits_label({{"k", e.k}, {"l", e.l}}));
            // R depends only on (i, j) and S only on (k, l); each distinct entry is checked once.
            if ((is_r && (e.k | e.l)) || (!is_r && (e.i | e.j))) {
                continue;
            }
            rep.add(id, want == got, want.str(), got.str());
        }
    }
    return rep;
}

/// Q x P against two_gate.tbl for all 256 index tuples, per transform and gate.
inline VerificationReport check_two_gate_tables(const std::filesystem::path &data_dir,
                                                const GoldenFilter &filter = {}) {
    VerificationReport rep{"two_gate", {}};
    auto dir = data_dir / "teleport";
    std::map<std::string, std::map<std::string, std::string>> idx, ph;
    for (const auto &row : read_table(dir / "indices.tbl", 2)) {
        idx[row.fields[0]][row.fields[1]] = row.rest;
    }
    for (const auto &row : read_table(dir / "phases.tbl", 2)) {
        ph[row.fields[0]][row.fields[1]] = row.rest;
    }
    // (transform, gate) -> {Q formula, P formula}
    std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> forms;
    std::vector<std::pair<std::string, std::string>> order;
    for (const auto &row : read_table(dir / "two_gate.tbl", 3)) {
        for (const auto &tname : split_commas(row.fields[0])) {
            if (!GoldenFilter::match(filter.transform, tname) || !GoldenFilter::match(filter.gate, row.fields[1])) {
                continue;
            }
            auto key = std::make_pair(tname, row.fields[1]);
            if (!forms.count(key)) {
                order.push_back(key);
            }
            (row.fields[2] == "Q" ? forms[key].first : forms[key].second) = row.rest;
        }
    }
    for (const auto &key : order) {
        const auto &[tname, gname] = key;
        const auto &[qf, pf] = forms[key];
        if (!idx.count(tname) || !ph.count(tname) || qf.empty() || pf.empty()) {
            rep.add(tname + " " + gname, false, "complete table entry", "missing indices, phases or factor");
            continue;
        }
        CorrectionTable t = derive_corrections(make_gate(tname));
        DenseMatrix cu = make_gate(gname);
        size_t bad = 0;
        std::string first_bad_want, first_bad_got;
        for (int m = 0; m < 256; m++) {
            FormulaEnv env;
            const char *names[8] = {"k1", "l1", "i1", "j1", "k2", "l2", "i2", "j2"};
            int v[8];
            for (int b = 0; b < 8; b++) {
                v[b] = (m >> (7 - b)) & 1;
                env.bits[names[b]] = v[b];
            }
            for (const auto &[name, sum] : idx.at(tname)) {
                env.bits[name] = evaluate_bits(sum, env);
            }
            for (const auto &[name, f] : ph.at(tname)) {
                env.symbols.emplace(name, evaluate_formula(f, env));
            }
            DenseMatrix want = tensor(evaluate_formula(qf, env), evaluate_formula(pf, env));
            DenseMatrix got = two_gate_correction(t, cu, v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]);
            if (want != got) {
                if (bad++ == 0) {
                    std::string lab;
                    for (int b = 0; b < 8; b++) {
                        lab += std::string(b ? "," : "") + names[b] + "=" + std::to_string(v[b]);
                    }
                    first_bad_want = lab + " " + want.str();
                    first_bad_got = got.str();
                }
            }
        }
        rep.add(tname + " " + gname, bad == 0, bad ? first_bad_want : "256 entries",
                bad ? std::to_string(bad) + " mismatches; first: " + first_bad_got : "256 entries");
    }
    return rep;
}

}  // namespace ghzkit

#endif
