#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vvgamma {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Accumulated verification results.  Failures are entries, not exceptions.
class Report {
public:
    void add(std::string name, bool pass, std::string detail = "") {
        checks_.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_pass() const {
        for (const auto& c : checks_) {
            if (!c.pass) return false;
        }
        return true;
    }
    std::size_t fail_count() const {
        std::size_t n = 0;
        for (const auto& c : checks_) {
            if (!c.pass) ++n;
        }
        return n;
    }

    void print(std::ostream& os, bool failures_only = false) const {
        for (const auto& c : checks_) {
            if (failures_only && c.pass) continue;
            os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) os << "  [" << c.detail << "]";
            os << "\n";
        }
    }

private:
    std::vector<CheckResult> checks_;
};

} // namespace vvgamma
