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

#ifndef GHZKIT_REPORT_HPP
#define GHZKIT_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ghzkit {

enum class CheckStatus { Pass, Fail };

inline const char *status_name(CheckStatus s) {
    return s == CheckStatus::Pass ? "pass" : "fail";
}

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    void add(std::string id, bool ok, std::string expected = "", std::string actual = "") {
        checks.push_back({std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected),
                          std::move(actual)});
    }
    void merge(const VerificationReport &other) {
        for (const auto &c : other.checks) {
            checks.push_back(c);
            checks.back().id = other.suite + "/" + c.id;
        }
    }
    size_t count(CheckStatus s) const {
        size_t n = 0;
        for (const auto &c : checks) {
            n += c.status == s;
        }
        return n;
    }
    bool ok() const {
        return count(CheckStatus::Fail) == 0;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["checks"] = nlohmann::json::array();
        for (const auto &c : checks) {
            j["checks"].push_back(
                {{"id", c.id}, {"status", status_name(c.status)}, {"expected", c.expected}, {"actual", c.actual}});
        }
        j["summary"] = {{"pass", count(CheckStatus::Pass)},
                        {"fail", count(CheckStatus::Fail)}};
        return j;
    }

    /// Failures are listed in full; passes are summarized unless verbose.
    std::string to_text(bool verbose = false) const {
        std::ostringstream out;
        out << "suite " << suite << "\n";
        for (const auto &c : checks) {
            if (c.status == CheckStatus::Pass && !verbose) {
                continue;
            }
            out << "  [" << status_name(c.status) << "] " << c.id;
            if (c.status == CheckStatus::Fail) {
                out << "\n      expected: " << c.expected << "\n      actual:   " << c.actual;
            } else if (!c.actual.empty()) {
                out << "  " << c.actual;
            }
            out << "\n";
        }
        out << "  " << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed\n";
        return out.str();
    }
};

}  // namespace ghzkit

#endif
