#ifndef POLYMIR_REPORT_HPP
#define POLYMIR_REPORT_HPP

#include <string>
#include <vector>

namespace polymir {

struct ReportCondition {
    std::string id;
    std::string verdict; // PASS | FAIL | UNKNOWN
    std::string detail;  // free text; witnesses where applicable
};

struct Report {
    std::vector<ReportCondition> conditions;
    std::string note;

    /// PASS iff no condition failed and none is unknown; UNKNOWN beats PASS.
    std::string overall() const {
        bool unknown = false;
        for (const auto& c : conditions) {
            if (c.verdict == "FAIL") return "FAIL";
            if (c.verdict == "UNKNOWN") unknown = true;
        }
        return unknown ? "UNKNOWN" : "PASS";
    }

    bool passed() const { return overall() == "PASS"; }
};

} // namespace polymir

#endif
