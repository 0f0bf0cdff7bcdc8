#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <jforge/errors.hpp>
#include <jforge/ratfunc.hpp>
#include <jforge/report.hpp>

namespace jforge::cli {

struct RunConfig {
    std::string command;
    /// NAME=EXPR, applied to the parameters before anything is built.
    std::vector<std::string> assignments;
    std::optional<std::string> schedule_path;
    std::string matrix = "rj3";
    std::string contraction_matrix = "bigg";
    std::string convention = "auto";
    unsigned max_degree = 3;
    std::string format = "text";
    std::optional<std::string> output;
    /// Restricts the hopf stage; empty runs everything.
    std::vector<std::string> checks;
    bool braiding = true;
    /// Directory for matrix and table fixtures; nothing is written when unset.
    std::optional<std::string> emit_dir;
};

class UsageError : public Error {
public:
    using Error::Error;
};

struct RunResult {
    int exit_code = 0;
    ReportSet reports;
};

Bindings parse_assignments(const std::vector<std::string>& assignments);
std::string sha256_hex(const std::string& data);

RunResult cmd_qybe(const RunConfig& config);
RunResult cmd_contract(const RunConfig& config);
RunResult cmd_relations(const RunConfig& config);
RunResult cmd_hopf(const RunConfig& config);
RunResult cmd_all(const RunConfig& config);
RunResult run(const RunConfig& config);

std::string render(const ReportSet& reports, const std::string& format);

/// Parses argv, runs, writes the report. Returns the process exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace jforge::cli
