#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

namespace trcq {

/// Outcome of a sampled inequality check, `quantity <= bound`.
///
/// The margin of one sample is bound - quantity; worst_margin is the smallest
/// margin seen and worst_point holds the inputs that produced it. A sample is
/// a violation when quantity > bound (1 + rel_tol) + abs_tol.
struct VerificationReport {
    std::string suite;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t violations = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    nlohmann::json worst_point = nlohmann::json::object();
    double rel_tol = 1e-12;
    double abs_tol = 1e-12;
    /// Sub-reports (one per inequality part); empty for leaf reports.
    std::vector<VerificationReport> parts;

    bool passed() const noexcept { return violations == 0; }

    /// Record one sample; returns true when it is a violation.
    bool record(double quantity, double bound, const nlohmann::json& point);

    /// Append a finished part and fold it into the aggregate counters.
    void absorb(VerificationReport part);
};

/// Header line for report CSV files.
inline constexpr const char* kReportCsvHeader =
    "suite,samples,seed,violations,worst_margin,worst_point_json";

/// One row per part followed by the aggregate row.
void write_report_rows(std::ostream& os, const VerificationReport& report);

}  // namespace trcq
