#pragma once

#include <string>
#include <utility>
#include <vector>

#include "powersum/exact.hpp"

namespace powersum {

enum class CheckStatus { Checked, PreconditionFailed };

using ReportParams = std::vector<std::pair<std::string, BigInt>>;

// One congruence check: what was claimed, for which parameters, and what the
// arithmetic actually produced. For Checked reports, holds is exactly
// (computed_residue == predicted_residue) and computed_residue lies in
// [0, modulus). PreconditionFailed reports carry the reason in note.
struct DivisibilityReport {
    std::string claim_id;
    ReportParams params;
    BigInt modulus = 0;
    BigInt computed_residue = 0;
    BigInt predicted_residue = 0;
    bool holds = false;
    CheckStatus status = CheckStatus::Checked;
    std::string note;
};

inline DivisibilityReport checked_report(std::string claim_id, ReportParams params,
                                         BigInt modulus, BigInt computed_residue,
                                         BigInt predicted_residue, std::string note = {}) {
    DivisibilityReport report;
    report.claim_id = std::move(claim_id);
    report.params = std::move(params);
    report.modulus = std::move(modulus);
    report.computed_residue = std::move(computed_residue);
    report.predicted_residue = std::move(predicted_residue);
    report.holds = report.computed_residue == report.predicted_residue;
    report.status = CheckStatus::Checked;
    report.note = std::move(note);
    return report;
}

inline DivisibilityReport failed_precondition(std::string claim_id, ReportParams params,
                                              std::string why) {
    DivisibilityReport report;
    report.claim_id = std::move(claim_id);
    report.params = std::move(params);
    report.status = CheckStatus::PreconditionFailed;
    report.holds = false;
    report.note = std::move(why);
    return report;
}

}  // namespace powersum
