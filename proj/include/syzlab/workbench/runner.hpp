#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "syzlab/workbench/problem.hpp"
#include "syzlab/workbench/report.hpp"

namespace syzlab::workbench {

inline constexpr const char* kToolVersion = "0.1.0";

struct Budget {
    std::string level = "default";
    std::size_t monomial_limit = kDefaultMonomialLimit;
    int exact_limit = kDefaultExactLimit;
    /// s'_p(W_p) is computed only up to this dimension of W_p.
    std::size_t universal_dim_limit = 8;
    /// Tor row bounds only for groups up to this order (p = 1).
    std::size_t tor_row_group_order = 2;
    int ring_row_degree = 6;
};

Budget budget_for(const std::string& level);

struct RunSettings {
    std::string task;  // empty: the document's task
    std::optional<int> p;
    std::optional<int> p_max;
    std::optional<GeneratorMode> mode;
    int jobs = 1;
    std::string budget_level = "default";
    bool use_cache = true;
    std::optional<std::filesystem::path> cache_dir;
};

/// Runs the task; identical problems and settings give identical reports
/// whether or not the cache is warm.
Report run(const Problem& problem, const RunSettings& settings);

}  // namespace syzlab::workbench
