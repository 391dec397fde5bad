#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freelie {

struct CheckResult {
    std::string id;
    std::string detail;
    bool pass = false;
    double millis = 0.0;
};

/// Result of a verification suite: one entry per executed check, nothing
/// silently skipped.
class VerificationReport {
public:
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    const std::vector<CheckResult>& checks() const { return checks_; }

    void add(const std::string& id, bool pass, const std::string& detail = "", double millis = 0.0);
    bool all_passed() const;
    int failures() const;

    /// Deterministic JSON rendering (timings included, keyed per check).
    std::string to_json_string(bool include_timings = true) const;
    void print(std::ostream& os) const;

private:
    std::string suite_;
    std::vector<CheckResult> checks_;
};

/// Wall-clock helper for check timing.
class Stopwatch {
public:
    Stopwatch();
    double millis() const;

private:
    long long start_ns_;
};

}  // namespace freelie
