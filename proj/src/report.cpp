#include "symcoh/report.hpp"

namespace symcoh {

void CheckReport::merge(const CheckReport& other, const std::string& prefix)
{
    for (const CheckResult& r : other.results) results.push_back({prefix + r.name, r.passed, r.detail});
    for (const auto& [k, v] : other.findings) findings.emplace_back(prefix + k, v);
}

bool CheckReport::passed() const { return first_failure() == nullptr; }

const CheckResult* CheckReport::first_failure() const
{
    for (const CheckResult& r : results)
        if (!r.passed) return &r;
    return nullptr;
}

std::string format_report(const CheckReport& report)
{
    std::string out;
    for (const CheckResult& r : report.results) {
        out += r.passed ? "PASS " : "FAIL ";
        out += r.name;
        if (!r.passed && !r.detail.empty()) out += ": " + r.detail;
        out += "\n";
    }
    for (const auto& [k, v] : report.findings) out += "NOTE " + k + ": " + v + "\n";
    return out;
}

} // namespace symcoh
