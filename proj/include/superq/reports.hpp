#pragma once

#include <string>
#include <vector>

namespace superq {

/// One executable identity check: name, the input it ran on, and the two
/// sides when it failed (empty on success).
struct CheckResult {
    std::string check;
    std::string input;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params; // ordered (key, value)
    std::vector<CheckResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& r : results)
            if (!r.pass) return &r;
        return nullptr;
    }
    void add(CheckResult r) { results.push_back(std::move(r)); }
    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
};

/// Pass/fail entry comparing printable sides; sides recorded only on failure.
template <typename T>
CheckResult compare_check(const std::string& name, const std::string& input, const T& lhs, const T& rhs) {
    CheckResult r;
    r.check = name;
    r.input = input;
    r.pass = (lhs == rhs);
    if (!r.pass) {
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
    }
    return r;
}

} // namespace superq
