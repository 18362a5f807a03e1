#pragma once

#include <zlq/board.hpp>
#include <zlq/family.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zlq {

/// A 2-edge in dense coordinates (row indices and columns) on a fixed geometry.
struct DenseEdge
{
    int r1 = 0;
    int c1 = 0;
    int r2 = 0;
    int c2 = 0;
    bool nondegenerate = false;

    auto operator==(const DenseEdge &) const -> bool = default;
};

auto to_dense(const Geometry & g, const TwoEdge & e) -> DenseEdge;

/**
 * Occupied cells of a board as one column mask per row: the 1-edge cells
 * plus every half of every placed 2-edge. This is the ō of the ILP, and
 * all condition checks read it directly.
 */
class Occupancy
{
public:
    explicit Occupancy(std::shared_ptr<const Geometry> geometry);

    auto geometry() const -> const Geometry & { return *geometry_; }
    auto geometry_ptr() const -> const std::shared_ptr<const Geometry> & { return geometry_; }

    auto occupied(int row, int col) const -> bool { return (masks_[row] >> col) & 1U; }
    auto row_mask(int row) const -> std::uint64_t { return masks_[row]; }

    /// Number of available cells not taken by a 2-edge.
    auto free_cells() const -> int { return free_; }

    auto occupy(const DenseEdge & e) -> void;
    auto release(const DenseEdge & e) -> void;

    auto c2_violated(const DenseEdge & e) const -> bool;
    auto c3_violated(const DenseEdge & e) const -> bool;

    /// All (x, y) witnesses completing the five-cell (C3) pattern for e.
    auto c3_witnesses(const DenseEdge & e) const -> std::vector<std::pair<int, int>>;

    /// Whether the (C2) or (C3) status of the placed edge f can involve
    /// the occupied cell (row, col), and that pattern is complete.
    auto pattern_completed_through(const DenseEdge & f, int row, int col) const -> bool;

    /**
     * Whether placed ∪ {e} stays admissible, given that placed is
     * admissible on this occupancy. Checks that e's cells are free, (C2)
     * and (C3) for e, then every placed edge whose patterns the two new
     * cells could complete.
     */
    auto can_add(std::span<const DenseEdge> placed, const DenseEdge & e) const -> bool;

private:
    std::shared_ptr<const Geometry> geometry_;
    std::vector<std::uint64_t> masks_;
    int free_ = 0;
};

enum class ViolationKind
{
    s,
    c2,
    c3
};

auto to_string(ViolationKind k) -> std::string_view;

/// Edge references are 0-based indices in canonical family order; -1
/// marks a proposed edge that is not part of the family.
struct Violation
{
    ViolationKind kind = ViolationKind::s;
    std::vector<int> edges;
    std::vector<Cell> cells;
    std::optional<Cell> witness;

    auto operator==(const Violation &) const -> bool = default;
};

/// One line: `S cell=(i,j|c) edges=[k1,k2]`, `C2 edge=k cells=...`,
/// `C3 edge=k witness=(x|y) cells=...`.
auto format_violation(const Violation & v) -> std::string;

enum class CellStatus
{
    one_edge,
    used,
    free
};

/// Occupancy state of a family on its board. Immutable once built.
class Board
{
public:
    explicit Board(int q);

    auto q() const -> int { return occupancy_.geometry().q(); }
    auto geometry() const -> const Geometry & { return occupancy_.geometry(); }
    auto occupancy() const -> const Occupancy & { return occupancy_; }

    auto status(const Cell & c) const -> CellStatus;
    /// Index of the edge using the cell, or -1.
    auto owner(const Cell & c) const -> int;
    auto occupied(const Cell & c) const -> bool { return status(c) != CellStatus::free; }
    auto count(CellStatus s) const -> int;

private:
    friend struct BoardBuilder;

    Occupancy occupancy_;
    std::vector<int> owner_;
};

struct BoardBuild
{
    Board board;
    /// Cells claimed by more than one edge. Such cells are kept by the
    /// lowest-indexed claimant.
    std::vector<Violation> s_violations;
};

auto build_board(const Family & f) -> BoardBuild;

/// (C2) for e against the board. Degenerate edges never violate (C2).
auto check_c2(const Board & board, const TwoEdge & e, int edge_id = -1) -> std::optional<Violation>;

/// Every (C3) witness for e against the board.
auto check_c3(const Board & board, const TwoEdge & e, int edge_id = -1) -> std::vector<Violation>;

struct Verdict
{
    bool pass = true;
    std::vector<Violation> violations;
};

/// Exhaustive check of (S), (C2) and (C3); reports every violation.
auto verify(const Family & f) -> Verdict;

/// Short-circuiting form of verify().
auto is_admissible(const Family & f) -> bool;

/// Whether f ∪ {e} is admissible, for admissible f with board = build_board(f).board.
auto incremental_check(const Board & board, const Family & f, const TwoEdge & e) -> bool;

} // namespace zlq
