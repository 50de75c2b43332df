#pragma once

#include "mzv/index.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace mzv {

/// One disagreeing term of a failed check: where it sits and the two values
/// in display form ("p/q" for exact checks, decimals for numeric ones).
struct Mismatch {
    int degree = 0;
    Index index;
    std::string expected;
    std::string actual;
};

/// Structured verification outcome. Passing is equivalent to having no
/// recorded mismatches.
struct Report {
    std::string identity;
    long long parameter = 0;
    bool passed = false;
    std::vector<Mismatch> mismatches;

    Report(std::string identity_, long long parameter_, std::vector<Mismatch> mismatches_ = {})
        : identity(std::move(identity_)),
          parameter(parameter_),
          passed(mismatches_.empty()),
          mismatches(std::move(mismatches_)) {}
};

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json mm = nlohmann::json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"degree", m.degree},
                      {"index", to_string(m.index)},
                      {"expected", m.expected},
                      {"actual", m.actual}});
    return {{"identity", r.identity},
            {"parameter", r.parameter},
            {"status", r.passed ? "pass" : "fail"},
            {"mismatches", mm}};
}

inline std::string to_text(const Report& r) {
    std::string s = "verify " + r.identity + " (parameter=" + std::to_string(r.parameter) +
                    "): " + (r.passed ? "PASS" : "FAIL");
    if (!r.passed) {
        s += " (" + std::to_string(r.mismatches.size()) + " mismatch" +
             (r.mismatches.size() == 1 ? "" : "es") + ")";
        for (const auto& m : r.mismatches)
            s += "\n  degree " + std::to_string(m.degree) + ", index " + to_string(m.index) +
                 ": expected " + m.expected + ", actual " + m.actual;
    }
    return s;
}

} // namespace mzv
