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

#ifndef GHZKIT_FORMULA_HPP
#define GHZKIT_FORMULA_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "ghzkit/gates.hpp"

namespace ghzkit {

// Single-qubit operator formulas such as "(-sqrt-1)^j X^{i+j} Z^i".
//
//   formula  := factor*
//   factor   := atom ['^' exponent]
//   atom     := X | Y | Z | W | (-1) | (sqrt-1) | (-sqrt-1) | SYMBOL
//   exponent := var | 0 | 1 | '{' sum '}'
//   sum      := prod ('+' prod)*     mod 2
//   prod     := prim ('*' prim)*     logical and
//   prim     := var | 0 | 1 | '(' sum ')'
//
// var is a lowercase letter with an optional digit. SYMBOL is an uppercase name bound
// in FormulaEnv::symbols (it may not be one of X, Y, Z, W).

struct FormulaError : std::invalid_argument {
    FormulaError(const std::string &msg, size_t offset)
        : std::invalid_argument(msg + " at offset " + std::to_string(offset)), offset(offset) {
    }
    size_t offset;
};

struct FormulaEnv {
    std::map<std::string, int> bits;
    std::map<std::string, DenseMatrix> symbols;
};

namespace detail {

class FormulaParser {
   public:
    FormulaParser(const std::string &text, const FormulaEnv &env) : s_(text), env_(env) {
    }

    DenseMatrix run() {
        DenseMatrix acc = DenseMatrix::identity(1);
        skip();
        while (pos_ < s_.size()) {
            acc = acc * factor();
            skip();
        }
        return acc;
    }

   private:
    const std::string &s_;
    const FormulaEnv &env_;
    size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) {
            pos_++;
        }
    }
    bool eat(const std::string &tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string &msg) {
        throw FormulaError(msg, pos_);
    }

    DenseMatrix factor() {
        DenseMatrix base(1);
        bool is_symbol = false;
        if (eat("(-1)")) {
            base = scale(DenseMatrix::identity(1), RingScalar(-1));
        } else if (eat("(sqrt-1)")) {
            base = scale(DenseMatrix::identity(1), RingScalar::i());
        } else if (eat("(-sqrt-1)")) {
            base = scale(DenseMatrix::identity(1), -RingScalar::i());
        } else if (pos_ < s_.size() && std::isupper((unsigned char)s_[pos_])) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum((unsigned char)s_[pos_])) {
                pos_++;
            }
            std::string name = s_.substr(start, pos_ - start);
            if (name == "X") {
                base = gates::X();
            } else if (name == "Y") {
                base = gates::Y();
            } else if (name == "Z") {
                base = gates::Z();
            } else if (name == "W") {
                base = gates::W();
            } else {
                auto it = env_.symbols.find(name);
                if (it == env_.symbols.end()) {
                    pos_ = start;
                    fail("unbound symbol '" + name + "'");
                }
                base = it->second;
                is_symbol = true;
            }
        } else {
            fail("expected an operator");
        }
        if (!eat("^")) {
            return base;
        }
        if (is_symbol) {
            fail("symbols take no exponent");
        }
        int e;
        if (eat("{")) {
            e = sum();
            if (!eat("}")) {
                fail("expected '}'");
            }
        } else {
            e = prim();
        }
        return e ? base : DenseMatrix::identity(1);
    }

    int sum() {
        int v = prod();
        while (eat("+")) {
            v ^= prod();
        }
        return v;
    }
    int prod() {
        int v = prim();
        while (eat("*")) {
            v &= prim();
        }
        return v;
    }
    int prim() {
        skip();
        if (eat("(")) {
            int v = sum();
            if (!eat(")")) {
                fail("expected ')'");
            }
            return v;
        }
        if (pos_ < s_.size() && (s_[pos_] == '0' || s_[pos_] == '1')) {
            return s_[pos_++] - '0';
        }
        if (pos_ < s_.size() && std::islower((unsigned char)s_[pos_])) {
            size_t start = pos_++;
            if (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                pos_++;
            }
            std::string var = s_.substr(start, pos_ - start);
            auto it = env_.bits.find(var);
            if (it == env_.bits.end()) {
                pos_ = start;
                fail("unbound variable '" + var + "'");
            }
            return it->second & 1;
        }
        fail("expected a bit expression");
    }
};

}  // namespace detail

inline DenseMatrix evaluate_formula(const std::string &text, const FormulaEnv &env) {
    return detail::FormulaParser(text, env).run();
}

/// Value of a binary sum such as "i1+j1+k1" (no operator atoms).
inline int evaluate_bits(const std::string &text, const FormulaEnv &env) {
    DenseMatrix m = evaluate_formula("(-1)^{" + text + "}", env);
    return m(0, 0) == RingScalar(-1) ? 1 : 0;
}

}  // namespace ghzkit

#endif
