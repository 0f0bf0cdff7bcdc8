#include "jforge/report.hpp"

#include <cstdio>

namespace jforge {

std::string to_text(const ReportSet& reports) {
    std::string out;
    if (!reports.convention.empty()) out += "convention: " + reports.convention + "\n";
    if (!reports.schedule_hash.empty()) out += "schedule: " + reports.schedule_hash + "\n";
    std::size_t passed = 0;
    for (const auto& c : reports.checks) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f ms", c.ms);
        out += (c.pass ? "PASS  " : "FAIL  ") + c.name;
        if (!c.anchor.empty()) out += "  [" + c.anchor + "]";
        out += "  (" + std::string(ms) + ")\n";
        for (const auto& d : c.details) out += "      " + d + "\n";
        passed += c.pass ? 1 : 0;
    }
    out += std::to_string(passed) + "/" + std::to_string(reports.checks.size()) + " checks passed\n";
    return out;
}

}  // namespace jforge
