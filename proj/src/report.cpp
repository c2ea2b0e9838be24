#include "trcq/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace trcq {

namespace {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// RFC 4180 quoting; JSON payloads always contain commas or quotes.
std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

void write_row(std::ostream& os, const VerificationReport& r) {
    os << r.suite << ',' << r.samples << ',' << r.seed << ',' << r.violations << ','
       << format_g17(r.worst_margin) << ',' << csv_quote(r.worst_point.dump()) << '\n';
}

}  // namespace

bool VerificationReport::record(double quantity, double bound, const nlohmann::json& point) {
    ++samples;
    const double margin = bound - quantity;
    // NaN margins count as violations and always become the worst point.
    if (!std::isnan(worst_margin) && !(margin >= worst_margin)) {
        worst_margin = margin;
        worst_point = point;
    }
    const bool violated = !(quantity <= bound * (1.0 + rel_tol) + abs_tol);
    if (violated) {
        ++violations;
    }
    return violated;
}

void VerificationReport::absorb(VerificationReport part) {
    samples += part.samples;
    violations += part.violations;
    if (!std::isnan(worst_margin) && !(part.worst_margin >= worst_margin)) {
        worst_margin = part.worst_margin;
        worst_point = part.worst_point;
        worst_point["part"] = part.suite;
    }
    parts.push_back(std::move(part));
}

void write_report_rows(std::ostream& os, const VerificationReport& report) {
    for (const auto& part : report.parts) {
        write_row(os, part);
    }
    write_row(os, report);
}

}  // namespace trcq
