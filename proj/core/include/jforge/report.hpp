#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace jforge {

/// Outcome of one named verification.
struct CheckReport {
    std::string name;
    /// Short tag naming the claim under test, e.g. "plane-relation".
    std::string anchor;
    bool pass = true;
    /// Residuals, mismatching positions or informational lines.
    std::vector<std::string> details;
    double ms = 0.0;

    /// Records a failure line and flips pass.
    void fail(std::string line) {
        pass = false;
        details.push_back(std::move(line));
    }
    void note(std::string line) { details.push_back(std::move(line)); }
};

/// Collection of reports with the run-level context.
struct ReportSet {
    std::string convention;
    std::string schedule_hash;
    std::vector<CheckReport> checks;

    bool all_pass() const noexcept {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Wall-clock stopwatch that writes elapsed milliseconds on destruction.
class ScopedTimer {
public:
    explicit ScopedTimer(double& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
    ~ScopedTimer() {
        out_ = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    ScopedTimer(const ScopedTimer&) = delete;
    ScopedTimer& operator=(const ScopedTimer&) = delete;

private:
    double& out_;
    std::chrono::steady_clock::time_point start_;
};

/// Human-readable summary, one block per check.
std::string to_text(const ReportSet& reports);

}  // namespace jforge
