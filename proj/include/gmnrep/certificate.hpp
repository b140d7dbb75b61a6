#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace gmnrep {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Itemized pass/fail record for one verification run.
struct Certificate {
    std::string subject;
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    void merge(const Certificate& other) {
        for (const auto& c : other.checks) {
            checks.push_back({other.subject.empty() ? c.name : other.subject + ": " + c.name, c.passed, c.detail});
        }
    }
    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> out;
        std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
                     [](const CheckResult& c) { return !c.passed; });
        return out;
    }
};

}  // namespace gmnrep
