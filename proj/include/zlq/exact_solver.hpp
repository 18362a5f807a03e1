#pragma once

#include <zlq/admissibility.hpp>
#include <zlq/bitset.hpp>
#include <zlq/board.hpp>
#include <zlq/family.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zlq {

/// Pairs of candidates that cannot both belong to an admissible family
/// (together with a fixed base family). Candidates that are inadmissible
/// on their own conflict with everything, themselves included.
struct ConflictRelation
{
    std::vector<Bitset> conflicts;
    std::vector<bool> infeasible;

    auto size() const -> int { return static_cast<int>(conflicts.size()); }
    auto conflicting(int a, int b) const -> bool { return conflicts[a].test(b); }
    auto degree(int a) const -> int { return conflicts[a].count(); }
};

auto pairwise_conflicts(int q, std::span<const TwoEdge> candidates) -> ConflictRelation;
auto pairwise_conflicts(const Family & base, std::span<const TwoEdge> candidates) -> ConflictRelation;

/// A vertex permutation p of {0..q}: vertex v goes to p[v].
using Permutation = std::vector<int>;

auto permute(const Permutation & p, const Cell & c) -> Cell;
auto permute(const Permutation & p, const TwoEdge & e) -> TwoEdge;

/// Orbit label per candidate under the S_{q+1} action on vertex labels.
/// The label is the index of the orbit's first member in the list. The
/// candidate list must be closed under the action.
auto candidate_orbits(int q, std::span<const TwoEdge> candidates) -> std::vector<int>;

/// One candidate per orbit (its first member in list order).
auto orbit_representatives(int q, std::span<const TwoEdge> candidates) -> std::vector<int>;

/// A partial solution: the chosen candidates (all admissible together
/// with the base), the resulting occupancy, and the candidates that can
/// still be added one at a time.
struct SearchNode
{
    std::vector<int> chosen;
    Occupancy occupancy;
    Bitset remaining;
};

/**
 * Candidates, conflicts and the fixed base family for one search. Nodes
 * are built from a root by adding one candidate at a time; every child is
 * filtered with the exact incremental check, so node families are always
 * admissible.
 */
class SearchSpace
{
public:
    SearchSpace(Family base, std::vector<TwoEdge> candidates);

    auto base() const -> const Family & { return base_; }
    auto candidates() const -> const std::vector<TwoEdge> & { return candidates_; }
    auto conflicts() const -> const ConflictRelation & { return conflicts_; }
    auto geometry() const -> const Geometry & { return *geometry_; }

    auto root() const -> SearchNode;
    auto child(const SearchNode & node, int candidate) const -> SearchNode;
    auto child(const SearchNode & node, int candidate, const Bitset & allowed) const -> SearchNode;

    /// |chosen| + min(|remaining|, free cells / 2, greedy clique cover of
    /// remaining in the conflict graph). Never below the best completion.
    auto upper_bound(const SearchNode & node) const -> int;

    /// Number of classes in a greedy partition of the set into groups of
    /// pairwise conflicting candidates.
    auto cover_bound(const Bitset & set) const -> int;

    auto family_of(const SearchNode & node) const -> Family;

private:
    Family base_;
    std::vector<TwoEdge> candidates_;
    std::shared_ptr<const Geometry> geometry_;
    std::vector<DenseEdge> dense_;
    std::vector<DenseEdge> base_dense_;
    ConflictRelation conflicts_;
    Bitset root_remaining_;
};

enum class BranchOrder
{
    most_constrained,
    natural
};

struct SolverEvent
{
    /// bound: upper bound of the root (subtree -1) or of a first-level
    /// subtree before it is expanded; subtree: that subtree is finished.
    enum class Kind { node, bound, incumbent, subtree };

    Kind kind = Kind::node;
    std::uint64_t nodes = 0;
    int size = 0;
    int bound = 0;
    int subtree = -1;
};

auto to_string(SolverEvent::Kind k) -> std::string_view;

struct SolverOptions
{
    /// Restrict first-level branching to one candidate per orbit. Only
    /// meaningful for an empty base over a symmetric candidate family.
    bool symmetry = false;
    BranchOrder order = BranchOrder::most_constrained;
    std::optional<std::uint64_t> node_limit;
    std::optional<double> time_limit_seconds;
    int threads = 1;
    /// Report the lexicographically smallest optimal family. Explores ties,
    /// so it is slower, and it turns symmetry off.
    bool canonical_certificate = false;
    /// Stop as soon as this many edges have been added.
    std::optional<int> stop_at;
    /// Emit a node event every this many nodes.
    std::uint64_t log_interval = 1U << 16;
    std::function<void(const SolverEvent &)> on_event;
};

enum class SolveStatus
{
    optimal,
    bounded_incumbent,
    target_reached
};

auto to_string(SolveStatus s) -> std::string_view;

struct SolveResult
{
    SolveStatus status = SolveStatus::optimal;
    /// Edges added on top of the base.
    int size = 0;
    /// Base plus added edges; always passes verify().
    Family certificate{2};
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    int root_bound = 0;
    int subtrees = 0;
    bool symmetry_used = false;
};

/// Maximum |E2| over the candidate family of the q-board.
auto solve_exact(int q, CandidateMode mode, const SolverOptions & options = {}) -> SolveResult;

/// Maximum number of candidates that can be added to a fixed admissible base.
auto solve_extension(const Family & base, std::vector<TwoEdge> candidates, const SolverOptions & options = {}) -> SolveResult;

} // namespace zlq
