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

#ifndef GHZKIT_EXPRESSION_HPP
#define GHZKIT_EXPRESSION_HPP

// Operator expressions, read left to right as a matrix product:
//
//   CNOT12 H1 S1            gates on 1-based sites (one digit per site)
//   B  or  CH_N             no sites: the gate spans the whole register
//   -  i  -i  w^3  w^-1     scalar factors
//   exp[-i*pi/4: 2ZI + IZ]  exp((coef) * sum), terms squaring to -I after folding
//   evolve[2ZI + IZ @ pi/4; -iYX @ pi/4]   time-ordered piecewise evolution
//   ctrl[2,1]{ -Y1 }        single-qubit body controlled on site 2, target 1
//   transp[3]               swap of basis labels 3 and 4
//   ( ... )                 grouping

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzkit/exponential.hpp"
#include "ghzkit/gates.hpp"

namespace ghzkit {

struct ExprError : std::invalid_argument {
    size_t offset;
    ExprError(const std::string &msg, size_t off)
        : std::invalid_argument(msg + " at offset " + std::to_string(off)), offset(off) {
    }
};

struct ExprNode {
    enum class Kind { Scalar, Gate, Family, Exp, Evolve, Ctrl, Transp, Product };
    Kind kind = Kind::Product;
    RingScalar scalar;
    std::string name;
    std::vector<int> sites;
    int64_t k = 0;
    std::vector<std::pair<int64_t, std::string>> terms;  // multiplier, phase-prefixed pauli string
    std::vector<std::pair<std::vector<std::pair<int64_t, std::string>>, int64_t>> segments;
    std::vector<std::shared_ptr<ExprNode>> children;
};

namespace detail {

class ExprParser {
   public:
    explicit ExprParser(const std::string &text) : s_(text) {
    }

    std::shared_ptr<ExprNode> parse_all() {
        auto node = parse_product();
        skip_ws();
        if (pos_ != s_.size()) {
            throw ExprError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        }
        return node;
    }

   private:
    const std::string &s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) {
            pos_++;
        }
    }
    bool peek(const std::string &lit) {
        skip_ws();
        return s_.compare(pos_, lit.size(), lit) == 0;
    }
    void expect(const std::string &lit) {
        if (!peek(lit)) {
            throw ExprError("expected '" + lit + "'", pos_);
        }
        pos_ += lit.size();
    }
    int64_t parse_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            pos_++;
        }
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            pos_++;
        }
        if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) {
            throw ExprError("expected integer", start);
        }
        return std::stoll(s_.substr(start, pos_ - start));
    }

    std::shared_ptr<ExprNode> parse_product() {
        auto prod = std::make_shared<ExprNode>();
        prod->kind = ExprNode::Kind::Product;
        while (true) {
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] == ')' || s_[pos_] == '}') {
                break;
            }
            prod->children.push_back(parse_factor());
        }
        if (prod->children.empty()) {
            throw ExprError("empty expression", pos_);
        }
        return prod;
    }

    static bool is_name_char(char c) {
        return std::isalpha((unsigned char)c) || c == '_';
    }

    std::shared_ptr<ExprNode> scalar(const RingScalar &v) {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::Scalar;
        node->scalar = v;
        return node;
    }

    std::shared_ptr<ExprNode> parse_factor() {
        skip_ws();
        size_t start = pos_;
        char c = s_[pos_];
        if (c == '(') {
            pos_++;
            auto inner = parse_product();
            expect(")");
            return inner;
        }
        if (c == '-') {
            pos_++;
            return scalar(RingScalar(-1));
        }
        if (c == '1' ) {
            pos_++;
            return scalar(RingScalar(1));
        }
        if (c == 'i' && (pos_ + 1 >= s_.size() || !is_name_char(s_[pos_ + 1]))) {
            pos_++;
            return scalar(RingScalar::i());
        }
        if (s_.compare(pos_, 2, "w^") == 0) {
            pos_ += 2;
            return scalar(RingScalar::omega(parse_int()));
        }
        if (s_.compare(pos_, 4, "exp[") == 0) {
            pos_ += 4;
            return parse_exp();
        }
        if (s_.compare(pos_, 7, "evolve[") == 0) {
            pos_ += 7;
            return parse_evolve();
        }
        if (s_.compare(pos_, 5, "ctrl[") == 0) {
            pos_ += 5;
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::Ctrl;
            node->sites.push_back((int)parse_int());
            expect(",");
            node->sites.push_back((int)parse_int());
            expect("]");
            expect("{");
            node->children.push_back(parse_product());
            expect("}");
            return node;
        }
        if (s_.compare(pos_, 7, "transp[") == 0) {
            pos_ += 7;
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::Transp;
            node->k = parse_int();
            expect("]");
            return node;
        }
        if (is_name_char(c)) {
            while (pos_ < s_.size() && is_name_char(s_[pos_])) {
                pos_++;
            }
            std::string name = upper(s_.substr(start, pos_ - start));
            auto node = std::make_shared<ExprNode>();
            if (parse_family(name)) {
                node->kind = ExprNode::Kind::Family;
                node->name = name;
                return node;
            }
            if (!gate_catalog().count(name)) {
                throw ExprError("unknown gate '" + name + "'", start);
            }
            node->kind = ExprNode::Kind::Gate;
            node->name = name;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                node->sites.push_back(s_[pos_] - '0');
                pos_++;
            }
            return node;
        }
        throw ExprError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    // Parses [-][i*][int]pi/4 into (phase exponent of i, multiplier).
    std::pair<int, int64_t> parse_angle() {
        int s = 0;
        if (peek("-")) {
            pos_++;
            s += 2;
        }
        if (peek("i*")) {
            pos_ += 2;
            s += 1;
        }
        int64_t k = 1;
        skip_ws();
        if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
            k = parse_int();
        }
        expect("pi/4");
        return {s, k};
    }

    std::vector<std::pair<int64_t, std::string>> parse_sum(char stop1, char stop2) {
        std::vector<std::pair<int64_t, std::string>> terms;
        int sign = 1;
        bool first = true;
        while (true) {
            skip_ws();
            if (!first || peek("-") || peek("+")) {
                if (peek("+")) {
                    pos_++;
                    sign = 1;
                } else if (peek("-")) {
                    pos_++;
                    sign = -1;
                } else if (!first) {
                    throw ExprError("expected '+' or '-'", pos_);
                }
            }
            first = false;
            skip_ws();
            int64_t mult = 1;
            if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                mult = parse_int();
            }
            skip_ws();
            std::string word;
            if (pos_ < s_.size() && s_[pos_] == 'i') {
                word += 'i';
                pos_++;
            }
            size_t wstart = pos_;
            while (pos_ < s_.size() && std::string("IXYZ").find(s_[pos_]) != std::string::npos) {
                word += s_[pos_++];
            }
            if (pos_ == wstart) {
                throw ExprError("expected pauli string", pos_);
            }
            terms.push_back({sign * mult, word});
            skip_ws();
            if (pos_ >= s_.size()) {
                throw ExprError("unterminated pauli sum", pos_);
            }
            if (s_[pos_] == stop1 || s_[pos_] == stop2) {
                break;
            }
        }
        return terms;
    }

    std::shared_ptr<ExprNode> parse_exp() {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::Exp;
        auto [s, k] = parse_angle();
        node->k = k;
        node->scalar = i_pow(s);
        expect(":");
        node->terms = parse_sum(']', ']');
        expect("]");
        return node;
    }

    std::shared_ptr<ExprNode> parse_evolve() {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::Evolve;
        while (true) {
            auto terms = parse_sum('@', '@');
            expect("@");
            auto [s, k] = parse_angle();
            if (s != 0) {
                throw ExprError("segment duration must be positive and real", pos_);
            }
            node->segments.push_back({terms, k});
            if (peek(";")) {
                pos_++;
                continue;
            }
            expect("]");
            break;
        }
        return node;
    }
};

/// Pauli string over IXYZ (Y = ZX) with optional leading i.
inline PauliWord pauli_from_string(const std::string &word, int n) {
    size_t pos = 0;
    int s = 0;
    if (!word.empty() && word[0] == 'i') {
        s = 1;
        pos = 1;
    }
    if ((int)(word.size() - pos) != n) {
        throw std::invalid_argument("pauli string '" + word + "' does not span " + std::to_string(n) + " qubits");
    }
    PauliWord p = PauliWord::identity(n).with_phase(s);
    for (int q = 1; q <= n; q++) {
        p = p * PauliWord::single(n, q, word[pos + q - 1]);
    }
    return p;
}

}  // namespace detail

inline std::shared_ptr<ExprNode> parse_expression(const std::string &text) {
    return detail::ExprParser(text).parse_all();
}

inline DenseMatrix evaluate(const ExprNode &node, int n) {
    using K = ExprNode::Kind;
    switch (node.kind) {
        case K::Scalar:
            return scale(DenseMatrix::identity(n), node.scalar);
        case K::Product: {
            DenseMatrix acc = DenseMatrix::identity(n);
            for (const auto &c : node.children) {
                acc = acc * evaluate(*c, n);
            }
            return acc;
        }
        case K::Gate: {
            const DenseMatrix &g = gate_catalog().at(node.name).matrix;
            if (node.sites.empty()) {
                if (g.qubits() != n) {
                    throw std::invalid_argument("gate " + node.name + " spans " + std::to_string(g.qubits()) +
                                                " qubits, register has " + std::to_string(n));
                }
                return g;
            }
            if ((int)node.sites.size() != g.qubits()) {
                throw std::invalid_argument("gate " + node.name + " needs " + std::to_string(g.qubits()) + " sites");
            }
            return embed(g, node.sites, n);
        }
        case K::Family:
            return family_gate(*parse_family(node.name), n);
        case K::Transp:
            return transposition_gate(n, (uint32_t)node.k);
        case K::Ctrl: {
            DenseMatrix body = evaluate(*node.children[0], 1);
            return controlled(body, node.sites[0], node.sites[1], n);
        }
        case K::Exp: {
            std::vector<PauliTerm> terms;
            int s = 0;
            for (int e = 0; e < 4; e++) {
                if (node.scalar == i_pow(e)) {
                    s = e;
                }
            }
            for (const auto &[mult, word] : node.terms) {
                PauliWord p = detail::pauli_from_string(word, n);
                terms.push_back({mult, p * PauliWord::identity(n).with_phase(s)});
            }
            return exp_commuting_pauli_sum(node.k, terms);
        }
        case K::Evolve: {
            std::vector<HamiltonianSegment> segs;
            for (const auto &[terms, dur] : node.segments) {
                HamiltonianSegment seg;
                seg.quarter_pi_duration = dur;
                for (const auto &[mult, word] : terms) {
                    seg.hamiltonian.push_back({mult, detail::pauli_from_string(word, n)});
                }
                segs.push_back(seg);
            }
            return evolve_piecewise(segs);
        }
    }
    throw std::logic_error("bad expression node");
}

inline DenseMatrix evaluate(const std::string &text, int n) {
    return evaluate(*parse_expression(text), n);
}

}  // namespace ghzkit

#endif
