#pragma once

/// @file report.hpp
/// @brief Check reports: the uniform result shape of every verification.

#include <string>
#include <vector>

namespace ale {

enum class CheckStatus { pass, fail, flagged };

struct CheckDetail {
    std::string caseId;
    std::string expected;
    std::string got;
    std::string provenance;
};

// `fail` implies at least one detail row; `flagged` is reserved for
// paper-acknowledged ambiguities. Sampled checks record their sample sets as
// detail rows so a pass is reproducible evidence.
struct CheckReport {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::vector<CheckDetail> details;

    void fail_row(std::string caseId, std::string expected, std::string got, std::string provenance) {
        status = CheckStatus::fail;
        details.push_back({std::move(caseId), std::move(expected), std::move(got), std::move(provenance)});
    }
    void flag_row(std::string caseId, std::string expected, std::string got, std::string provenance) {
        if (status != CheckStatus::fail) status = CheckStatus::flagged;
        details.push_back({std::move(caseId), std::move(expected), std::move(got), std::move(provenance)});
    }
    void info_row(std::string caseId, std::string got, std::string provenance) {
        details.push_back({std::move(caseId), "", std::move(got), std::move(provenance)});
    }
    bool passed() const { return status != CheckStatus::fail; }
};

inline std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::flagged: return "flagged";
    }
    return "?";
}

} // namespace ale
