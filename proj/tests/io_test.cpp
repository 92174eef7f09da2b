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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "ghzkit/formula.hpp"
#include "ghzkit/matrixio.hpp"
#include "ghzkit/suites.hpp"
#include "test_support.hpp"

using namespace ghzkit;

namespace {

std::filesystem::path temp_file(const std::string &name, const std::string &body) {
    auto p = std::filesystem::temp_directory_path() / ("ghzkit_io_" + name);
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST(MatrixFileProperty, ExportParseRoundTrip) {
    std::mt19937_64 rng(81);
    for (int t = 0; t < 30; t++) {
        DenseMatrix u = t % 2 ? testutil::random_clifford(rng, 2) : testutil::random_exact_unitary_1(rng);
        MatrixFile f = parse_matrix_text(export_matrix(u));
        ASSERT_TRUE(f.exact.has_value());
        EXPECT_EQ(*f.exact, u);
        EXPECT_EQ(f.qubits, u.qubits());
        EXPECT_TRUE(f.warnings.empty());
    }
}

TEST(MatrixFile, ReadsFromDisk) {
    auto p = temp_file("rt.json", export_matrix(make_gate("RT")));
    EXPECT_EQ(*parse_matrix_file(p).exact, make_gate("RT"));
    std::filesystem::remove(p);
    EXPECT_THROW(parse_matrix_file("/nonexistent/ghzkit.json"), std::runtime_error);
}

TEST(MatrixFile, MalformedTupleNamesEntry) {
    std::string text = R"({"qubits": 1, "entries": [[1,0,0,0,0], [0,0,0,0], [0,0,0,0,0], [1,0,0,0,0]]})";
    try {
        parse_matrix_text(text);
        FAIL() << "accepted a short tuple";
    } catch (const MatrixParseError &e) {
        EXPECT_STREQ(e.what(), "entry 1: expected [a, b, c, d, k]");
        EXPECT_EQ(e.line, 0u);
    }
    EXPECT_THROW(parse_matrix_text(R"({"qubits": 1, "entries": [[1,0,0,0,0]]})"), MatrixParseError);
    EXPECT_THROW(parse_matrix_text(R"({"qubits": 0, "entries": []})"), MatrixParseError);
    EXPECT_THROW(parse_matrix_text(R"({"qubits": 1})"), MatrixParseError);
    EXPECT_THROW(parse_matrix_text(R"({"qubits": 1, "entries": [[1,0,0,0,-1],[0,0,0,0,0],[0,0,0,0,0],[1,0,0,0,0]]})"),
                 MatrixParseError);
    EXPECT_THROW(parse_matrix_text(R"({"qubits": 1, "entries": [[1.5,0,0,0,0],[0,0,0,0,0],[0,0,0,0,0],[1,0,0,0,0]]})"),
                 MatrixParseError);
}

TEST(MatrixFile, SyntaxErrorsCarryLineAndColumn) {
    try {
        parse_matrix_text("{\n  \"qubits\": 1,\n  \"entries\": [,]\n}");
        FAIL() << "accepted invalid JSON";
    } catch (const MatrixParseError &e) {
        EXPECT_EQ(e.line, 3u);
        EXPECT_EQ(e.column, 15u);
        EXPECT_EQ(std::string(e.what()).rfind("3:15: ", 0), 0u) << e.what();
    }
}

TEST(MatrixFile, ComplexEntriesAndWarnings) {
    double r = 1 / std::sqrt(2.0);
    std::string h = "{\"qubits\": 1, \"complex\": [[" + std::to_string(r) + ",0],[" + std::to_string(r) + ",0],[" +
                    std::to_string(r) + ",0],[" + std::to_string(-r) + ",0]]}";
    MatrixFile f = parse_matrix_text(h);
    ASSERT_TRUE(f.numeric.has_value());
    EXPECT_FALSE(f.exact.has_value());
    EXPECT_NEAR((f.as_complex() - to_eigen(gates::H())).norm(), 0, 1e-6);
    EXPECT_EQ(f.warnings.size(), 1u);  // six printed digits miss the 1e-9 unitarity bound
    MatrixFile bad = parse_matrix_text(R"({"qubits": 1, "entries": [[1,0,0,0,0],[1,0,0,0,0],[0,0,0,0,0],[1,0,0,0,0]]})");
    ASSERT_EQ(bad.warnings.size(), 1u);
    EXPECT_EQ(bad.warnings[0], "matrix is not unitary");
    EXPECT_THROW(parse_matrix_text(R"({"qubits": 1, "complex": [[1,0],[0,0],[0,0],[1]]})"), MatrixParseError);
    EXPECT_THROW(parse_matrix_text(R"({"qubits": 1, "complex": [], "entries": []})"), MatrixParseError);
}

TEST(Formula, AtomsAndExponents) {
    FormulaEnv env;
    env.bits = {{"i", 1}, {"j", 0}, {"k1", 1}};
    EXPECT_EQ(evaluate_formula("X^i Z^j", env), gates::X());
    EXPECT_EQ(evaluate_formula("X^{i+k1}", env), DenseMatrix::identity(1));
    EXPECT_EQ(evaluate_formula("Z^{i*k1}", env), gates::Z());
    EXPECT_EQ(evaluate_formula("(-1)^{i+j} Y", env), scale(gates::Y(), RingScalar(-1)));
    EXPECT_EQ(evaluate_formula("(sqrt-1)^i (-sqrt-1)^i", env), DenseMatrix::identity(1));
    EXPECT_EQ(evaluate_formula("W^1 W^0", env), gates::W());
    EXPECT_EQ(evaluate_formula("", env), DenseMatrix::identity(1));
    EXPECT_EQ(evaluate_bits("i+(j+1)*k1", env), 0);
    env.symbols["H"] = gates::H();
    EXPECT_EQ(evaluate_formula("H X H", env), gates::Z());
}

TEST(Formula, Errors) {
    FormulaEnv env;
    env.bits = {{"i", 1}};
    EXPECT_THROW(evaluate_formula("X^q", env), FormulaError);
    EXPECT_THROW(evaluate_formula("FOO", env), FormulaError);
    EXPECT_THROW(evaluate_formula("X^{i+", env), FormulaError);
    EXPECT_THROW(evaluate_formula("X^2", env), FormulaError);
    EXPECT_THROW(evaluate_formula("?", env), FormulaError);
}

TEST(Tables, ReaderSplitsColumnsAndSkipsComments) {
    auto p = temp_file("table.tbl", "# header\nB  00  X1 Z2 # note\n\nQ 11\n");
    auto rows = read_table(p, 2);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].line_no, 2);
    EXPECT_EQ(rows[0].fields, (std::vector<std::string>{"B", "00"}));
    EXPECT_EQ(rows[0].rest, "X1 Z2");
    EXPECT_EQ(rows[1].rest, "");
    EXPECT_THROW(read_table(p, 4), std::runtime_error);
    std::filesystem::remove(p);
    EXPECT_EQ(split_commas("a,b,,c"), (std::vector<std::string>{"a", "b", "", "c"}));
    EXPECT_EQ(bits_label({{"k", 1}, {"l", 0}}), "k=1,l=0");
    EXPECT_TRUE(GoldenFilter::match("", "B"));
    EXPECT_TRUE(GoldenFilter::match("b", "B"));
    EXPECT_FALSE(GoldenFilter::match("Q", "B"));
}

TEST(Report, JsonSchemaAndSummary) {
    VerificationReport r{"demo", {}};
    r.add("one", true, "x", "x");
    r.add("two", false, "1", "2");
    nlohmann::json j = r.to_json();
    EXPECT_EQ(j["suite"], "demo");
    ASSERT_EQ(j["checks"].size(), 2u);
    EXPECT_EQ(j["checks"][1]["id"], "two");
    EXPECT_EQ(j["checks"][1]["status"], "fail");
    EXPECT_EQ(j["checks"][1]["expected"], "1");
    EXPECT_EQ(j["checks"][1]["actual"], "2");
    EXPECT_EQ(j["summary"]["pass"], 1);
    EXPECT_EQ(j["summary"]["fail"], 1);
    EXPECT_FALSE(r.ok());
    std::string text = r.to_text();
    EXPECT_NE(text.find("[fail] two"), std::string::npos);
    EXPECT_EQ(text.find("[pass] one"), std::string::npos);
    EXPECT_NE(r.to_text(true).find("[pass] one"), std::string::npos);
    EXPECT_NE(text.find("1 passed, 1 failed"), std::string::npos);
    VerificationReport outer{"all", {}};
    outer.merge(r);
    EXPECT_EQ(outer.checks[0].id, "demo/one");
}

TEST(Report, SuitesAreDeterministic) {
    EXPECT_EQ(suite_identities("").to_json().dump(), suite_identities("").to_json().dump());
    auto a = suite_simulate("B", 200, 5), b = suite_simulate("B", 200, 5);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
    EXPECT_TRUE(suite_tables(default_data_dir()).ok());
}
