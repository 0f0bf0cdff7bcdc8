#pragma once

#include <string>

#include "jforge/freealg.hpp"
#include "jforge/report.hpp"
#include "jforge/rmat.hpp"

namespace jforge {

/// {"basis": ["11", ...], "entries": [["r", "0", ...], ...]}
std::string matrix_to_json(const RMat& m, int indent = 2);
RMat matrix_from_json(const std::string& text);

/// {"order": [...], "rules": [{"lhs": "y*x", "rhs": "...", "provenance": "..."}]}
std::string table_to_json(const RewriteSystem& rs, int indent = 2);
RewriteSystem table_from_json(const std::string& text);

inline constexpr int kReportSchemaVersion = 1;

std::string report_to_json(const ReportSet& reports, int indent = 2);

}  // namespace jforge
