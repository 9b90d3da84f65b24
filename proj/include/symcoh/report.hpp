#pragma once

#include <string>
#include <vector>

namespace symcoh {

struct CheckResult {
    std::string name;
    bool passed = true;
    // Counterexample or finding, empty when nothing to add.
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckResult> results;
    // Informational findings that are not pass/fail (e.g. "strong Lefschetz fails").
    std::vector<std::pair<std::string, std::string>> findings;

    void add(std::string name, bool passed, std::string detail = {})
    {
        results.push_back({std::move(name), passed, std::move(detail)});
    }
    void note(std::string key, std::string value) { findings.emplace_back(std::move(key), std::move(value)); }
    void merge(const CheckReport& other, const std::string& prefix = {});

    bool passed() const;
    const CheckResult* first_failure() const;
};

// One line per result: "PASS name" / "FAIL name: detail".
std::string format_report(const CheckReport& report);

} // namespace symcoh
