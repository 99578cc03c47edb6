#pragma once

#include <string>
#include <vector>

#include "hinf/boundary.hpp"
#include "hinf/lab/config.hpp"
#include "hinf/lab/report.hpp"

namespace hinf::lab {

struct CriterionResult {
    int id = 0;
    std::string name;
    std::vector<Assertion> checks;
    std::string detail;

    bool pass() const;
};

/// Radial (3), tangential (4) and transported orbit (3) paths to alpha.
/// All end within 1e-5 of alpha, so the last quarter of each path is settled
/// to about 1e-3 for functions with moderate Lipschitz constant.
std::vector<ApproachPath> probe_paths(const SpherePoint& alpha);

/// Number of criteria checked in-process; the interface criterion (exit code
/// and byte-identical reports of the CLI) needs the lab binary itself.
inline constexpr int kInProcessCriteria = 10;

/// Runs criterion `id` in 1..kInProcessCriteria. Deterministic given cfg.
CriterionResult run_criterion(int id, const LabConfig& cfg);

std::vector<CriterionResult> run_acceptance(const LabConfig& cfg);

}  // namespace hinf::lab
