#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jforge/rmat.hpp"

namespace jforge {

/// Reparametrization of the source parameters in one limit variable.
/// A binding p = p marks p as surviving the limit.
struct Schedule {
    std::string description;
    Param limit_var = params::eps();
    Bindings bindings;

    std::set<Param> surviving() const;

    /// key = value lines; '#' starts a comment. Keys other than
    /// description and limit_var are parameter bindings.
    static Schedule parse(std::string_view text);
    static Schedule load(const std::string& path);
    std::string str() const;

    /// Throws jforge::Error if a right-hand side mentions a bound,
    /// non-surviving parameter.
    void validate() const;
};

/// Shipped contraction schedule taking the GL(3) q-deformation to the
/// Jordanian one with the conjugating matrix build_G.
Schedule jordanian_schedule();

struct Divergence {
    Label row, col;
    int order = 0;
    std::vector<std::string> lowest;
};

struct ContractionResult {
    std::optional<RMat> matrix;
    std::vector<Divergence> divergences;
};

/// Substitutes the schedule into every entry and takes the limit; entries
/// are expanded concurrently and reported in row-major order.
ContractionResult contract_entries(const RMat& m, const Schedule& schedule);

/// conjugate, substitute, expand, limit. Throws UnboundParameter or the
/// PoleError of the first divergent entry.
RMat contract(const RMat& source, const RMat& g, const Schedule& schedule);

/// Same as contract but collects every divergent entry.
ContractionResult try_contract(const RMat& source, const RMat& g, const Schedule& schedule);

CheckReport verify_target(const RMat& contracted, const RMat& target, const std::string& name = "contraction");

/// Runs the pipeline with the alternative conjugating matrix; no target.
ContractionResult contract_gprime_probe(const Schedule& schedule);

}  // namespace jforge
