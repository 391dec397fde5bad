#include "freelie/report.hpp"

#include <chrono>
#include <ostream>

#include <json.hpp>

namespace freelie {

void VerificationReport::add(const std::string& id, bool pass, const std::string& detail, double millis) {
    checks_.push_back({id, detail, pass, millis});
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

int VerificationReport::failures() const {
    int n = 0;
    for (const auto& c : checks_)
        if (!c.pass) ++n;
    return n;
}

std::string VerificationReport::to_json_string(bool include_timings) const {
    nlohmann::ordered_json j;
    j["suite"] = suite_;
    j["passed"] = all_passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        if (include_timings) cj["ms"] = c.millis;
        j["checks"].push_back(cj);
    }
    return j.dump(2);
}

void VerificationReport::print(std::ostream& os) const {
    os << "suite " << suite_ << "\n";
    for (const auto& c : checks_) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    os << (all_passed() ? "all checks passed" : std::to_string(failures()) + " check(s) FAILED") << "\n";
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::millis() const {
    auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                   std::chrono::steady_clock::now().time_since_epoch())
                   .count();
    return static_cast<double>(now - start_ns_) / 1e6;
}

}  // namespace freelie
