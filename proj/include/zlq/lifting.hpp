#pragma once

#include <zlq/exact_solver.hpp>
#include <zlq/family.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace zlq {

/// Reinterprets a verified q-board family on the (q+1)-board with labels
/// unchanged. Throws StructuralError if the input is not admissible.
auto embed(const Family & f) -> Family;

/// Whether either half of e uses vertex v as a row endpoint or column.
auto touches_vertex(const TwoEdge & e, int v) -> bool;

struct LiftConfig
{
    std::uint64_t seed = 1;
    int restarts = 16;
    int improvement_passes = 8;
    int threads = 1;
    CandidateMode mode = CandidateMode::full;
    /// Fall back to an exact search over new-vertex candidates, with the
    /// embedded family frozen, when the heuristic misses the target.
    bool use_oracle = true;
    std::optional<std::uint64_t> oracle_node_limit;
    std::optional<double> oracle_time_limit_seconds;
};

struct LiftReport
{
    int from_q = 0;
    int to_q = 0;
    int base_size = 0;
    /// base_size + floor(from_q / 2)
    int target = 0;
    int achieved = 0;
    bool target_met = false;
    /// (to_q)(to_q + 1) + achieved
    int bound = 0;
    /// (to_q)(to_q + 1) + target
    int target_bound = 0;
    /// "search" or "exact-oracle".
    std::string method;
    std::optional<SolveStatus> oracle_status;
    bool verified = false;
    Family family{2};
};

/// Embeds, then extends by warm-started search that scans candidates
/// touching the new vertex first. Reports honestly whether the target
/// was met.
auto lift_extend(const Family & f, const LiftConfig & config = {}) -> LiftReport;

} // namespace zlq
