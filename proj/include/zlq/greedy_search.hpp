#pragma once

#include <zlq/admissibility.hpp>
#include <zlq/board.hpp>
#include <zlq/family.hpp>
#include <zlq/rng.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zlq {

/// Candidates for insertion. The first `priority` entries are always
/// scanned before the rest; each part is shuffled independently.
struct CandidatePool
{
    std::vector<TwoEdge> candidates;
    std::size_t priority = 0;
};

struct SearchConfig
{
    int q = 3;
    CandidateMode mode = CandidateMode::full;
    std::uint64_t seed = 0;
    int restarts = 1;
    /// Wall-clock limit over all restarts. Runs that hit it are not
    /// reproducible; leave unset when determinism matters.
    std::optional<double> time_limit_seconds;
    /// Delete-and-repair sweeps per restart; a sweep with no gain stops early.
    int improvement_passes = 8;
    /// 1: single deletions only. 2: also sampled pair deletions.
    int delete_width = 2;
    /// Pair deletions tried per sweep when every single deletion fails.
    int pair_samples = 64;
    int threads = 1;
    std::optional<Family> warm_start;
};

struct RestartRecord
{
    int restart = 0;
    int greedy_size = 0;
    std::vector<int> pass_sizes;
    int final_size = 0;
    bool completed = true;
};

struct SearchResult
{
    Family best{2};
    int best_restart = -1;
    std::vector<RestartRecord> restarts;
    std::uint64_t seed = 0;
    bool verified = false;
    /// q(q+1) + |best|
    int bound = 0;
};

/// Scans `order` and inserts each edge that keeps the family admissible.
/// The result is maximal with respect to the scanned edges.
auto greedy_fill(const Family & start, std::span<const TwoEdge> order) -> Family;

/// Delete one or two members and refill greedily from a freshly shuffled
/// pool; keep only strict gains. Never returns a smaller family.
auto local_improve(const Family & f, const CandidatePool & pool, const SearchConfig & config, Stream & stream) -> Family;

/// Randomised restarts of shuffle, greedy fill and local improvement,
/// followed by full verification of the winner.
auto run_search(const SearchConfig & config) -> SearchResult;

/// Same, over an explicit pool (used by lifting).
auto run_search(const SearchConfig & config, const CandidatePool & pool) -> SearchResult;

} // namespace zlq
