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

#ifndef GHZKIT_MATRIXIO_HPP
#define GHZKIT_MATRIXIO_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ghzkit/nonlocal.hpp"

namespace ghzkit {

// File format:
//   {"qubits": n, "entries": [[a, b, c, d, k], ...]}     exact, (a + b w + c w^2 + d w^3) / sqrt2^k
//   {"qubits": n, "complex": [[re, im], ...]}            floating point, row-major

struct MatrixParseError : std::runtime_error {
    MatrixParseError(const std::string &msg, size_t line, size_t column)
        : std::runtime_error(line ? std::to_string(line) + ":" + std::to_string(column) + ": " + msg : msg),
          line(line),
          column(column) {
    }
    size_t line, column;
};

struct MatrixFile {
    int qubits = 0;
    std::optional<DenseMatrix> exact;
    std::optional<MatXc> numeric;  // set for "complex" files
    std::vector<std::string> warnings;

    MatXc as_complex() const {
        return exact ? to_eigen(*exact) : *numeric;
    }
};

inline MatrixFile parse_matrix_text(const std::string &text) {
    auto where = [&](size_t byte) {
        size_t line = 1, col = 1;
        for (size_t t = 0; t < byte && t < text.size(); t++) {
            if (text[t] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        return std::make_pair(line, col);
    };
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        auto [l, c] = where(e.byte ? e.byte - 1 : 0);
        throw MatrixParseError(e.what(), l, c);
    }
    auto fail = [](const std::string &msg) -> MatrixParseError { return MatrixParseError(msg, 0, 0); };
    if (!j.is_object() || !j.contains("qubits") || !j["qubits"].is_number_integer()) {
        throw fail("expected an object with integer \"qubits\"");
    }
    MatrixFile f;
    f.qubits = j["qubits"].get<int>();
    if (f.qubits < 1 || f.qubits > MAX_QUBITS) {
        throw fail("qubits outside [1, " + std::to_string(MAX_QUBITS) + "]");
    }
    size_t dim = size_t{1} << f.qubits;
    bool has_exact = j.contains("entries"), has_complex = j.contains("complex");
    if (has_exact == has_complex) {
        throw fail("expected exactly one of \"entries\" or \"complex\"");
    }
    const auto &arr = has_exact ? j["entries"] : j["complex"];
    if (!arr.is_array() || arr.size() != dim * dim) {
        throw fail("expected " + std::to_string(dim * dim) + " entries");
    }
    if (has_exact) {
        DenseMatrix m(f.qubits);
        for (size_t t = 0; t < arr.size(); t++) {
            const auto &e = arr[t];
            if (!e.is_array() || e.size() != 5) {
                throw fail("entry " + std::to_string(t) + ": expected [a, b, c, d, k]");
            }
            int64_t v[5];
            for (int s = 0; s < 5; s++) {
                if (!e[s].is_number_integer()) {
                    throw fail("entry " + std::to_string(t) + ": components must be integers");
                }
                v[s] = e[s].get<int64_t>();
            }
            if (v[4] < 0) {
                throw fail("entry " + std::to_string(t) + ": negative sqrt2 exponent");
            }
            m(t / dim, t % dim) = RingScalar(v[0], v[1], v[2], v[3], v[4]);
        }
        if (!is_unitary(m)) {
            f.warnings.push_back("matrix is not unitary");
        }
        f.exact = std::move(m);
    } else {
        MatXc m(dim, dim);
        for (size_t t = 0; t < arr.size(); t++) {
            const auto &e = arr[t];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw fail("entry " + std::to_string(t) + ": expected [re, im]");
            }
            m((Eigen::Index)(t / dim), (Eigen::Index)(t % dim)) = cplx(e[0].get<double>(), e[1].get<double>());
        }
        if (!is_unitary_numeric(m)) {
            f.warnings.push_back("matrix is not unitary within 1e-9");
        }
        f.numeric = std::move(m);
    }
    return f;
}

inline MatrixFile parse_matrix_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix_text(ss.str());
}

inline std::string export_matrix(const DenseMatrix &m) {
    std::ostringstream out;
    out << "{\"qubits\": " << m.qubits() << ", \"entries\": [\n";
    for (size_t r = 0; r < m.dim(); r++) {
        out << "  ";
        for (size_t c = 0; c < m.dim(); c++) {
            const RingScalar &v = m(r, c);
            out << "[" << v.a() << ", " << v.b() << ", " << v.c() << ", " << v.d() << ", " << v.k() << "]";
            if (r + 1 < m.dim() || c + 1 < m.dim()) {
                out << ", ";
            }
        }
        out << "\n";
    }
    out << "]}\n";
    return out.str();
}

}  // namespace ghzkit

#endif
