#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zlq {

/// Column occupancy is kept as one 64-bit word per row, so q + 1 columns
/// must fit in a word.
inline constexpr int max_q = 63;

/// A 2-subset {i, j} of the vertex set, stored with i < j.
struct Row
{
    int i = 0;
    int j = 1;

    auto contains(int v) const -> bool { return v == i || v == j; }
    auto operator<=>(const Row &) const = default;
};

/// Builds a row from two distinct vertices given in either order.
auto make_row(int a, int b) -> Row;

/// A (row, column) position. It is a 1-edge cell iff the column lies in the row.
struct Cell
{
    Row row;
    int col = 0;

    auto is_one_edge() const -> bool { return row.contains(col); }
    auto is_available() const -> bool { return ! row.contains(col); }
    auto operator<=>(const Cell &) const = default;
};

enum class Degeneracy
{
    nondegenerate,
    row_degenerate,
    column_degenerate
};

auto to_string(Degeneracy d) -> std::string_view;

/// Unordered pair of distinct available cells. Halves are kept in
/// canonical order: first() < second() under (row.i, row.j, col).
class TwoEdge
{
public:
    TwoEdge(Cell a, Cell b);

    auto first() const -> const Cell & { return first_; }
    auto second() const -> const Cell & { return second_; }
    auto degeneracy() const -> Degeneracy;
    auto is_nondegenerate() const -> bool { return degeneracy() == Degeneracy::nondegenerate; }

    auto operator<=>(const TwoEdge &) const = default;

private:
    Cell first_;
    Cell second_;
};

auto classify(const TwoEdge & e) -> Degeneracy;

enum class CandidateMode
{
    full,
    nondegenerate_only
};

auto to_string(CandidateMode m) -> std::string_view;
auto parse_candidate_mode(std::string_view s) -> CandidateMode;

/// Throws ParameterError unless 2 <= q <= max_q.
auto check_q(int q) -> void;

auto binomial2(std::int64_t n) -> std::int64_t;

auto rows(int q) -> std::vector<Row>;
auto available_cells(int q) -> std::vector<Cell>;
auto candidate_family(int q, CandidateMode mode) -> std::vector<TwoEdge>;

/// Streams candidates in the same canonical order as candidate_family()
/// without materialising the list.
template <typename Visitor_>
auto for_each_candidate(int q, CandidateMode mode, Visitor_ && visit) -> void
{
    auto cells = available_cells(q);
    for (std::size_t a = 0 ; a < cells.size() ; ++a)
        for (std::size_t b = a + 1 ; b < cells.size() ; ++b) {
            TwoEdge e{cells[a], cells[b]};
            if (mode == CandidateMode::full || e.is_nondegenerate())
                visit(e);
        }
}

auto cell_on_board(int q, const Cell & c) -> bool;
auto edge_on_board(int q, const TwoEdge & e) -> bool;

auto format_cell(const Cell & c) -> std::string;
auto format_edge(const TwoEdge & e) -> std::string;

struct CountingSummary
{
    int q = 0;
    std::int64_t rows = 0;           // |S|
    std::int64_t columns = 0;        // |T|
    std::int64_t one_edges = 0;      // |E1|
    std::int64_t available = 0;      // |A_q|
    std::int64_t full = 0;
    std::int64_t nondegenerate = 0;
    std::int64_t row_degenerate = 0;
    std::int64_t column_degenerate = 0;
    std::int64_t z = 0;              // classical Zarankiewicz number q(q+1)
};

auto counting_summary(int q) -> CountingSummary;

/**
 * Dense indexing of the q-board.
 *
 * Rows are numbered in lexicographic order of (i, j). A cell (r, c) has
 * index row_index(r) * (q + 1) + c. These indices are internal and never
 * appear in files.
 */
class Geometry
{
public:
    explicit Geometry(int q);

    auto q() const -> int { return q_; }
    auto columns() const -> int { return q_ + 1; }
    auto row_count() const -> int { return static_cast<int>(rows_.size()); }
    auto cell_count() const -> int { return row_count() * columns(); }

    auto row(int index) const -> const Row & { return rows_[index]; }
    auto row_index(const Row & r) const -> int { return row_lookup_[r.i * columns() + r.j]; }
    auto cell_index(const Cell & c) const -> int { return row_index(c.row) * columns() + c.col; }
    auto cell(int index) const -> Cell { return Cell{rows_[index / columns()], index % columns()}; }

    /// Columns occupied by 1-edges in the given row, as a bit mask.
    auto one_edge_mask(int row_index) const -> std::uint64_t
    {
        return (std::uint64_t{1} << rows_[row_index].i) | (std::uint64_t{1} << rows_[row_index].j);
    }

    auto all_columns_mask() const -> std::uint64_t
    {
        return q_ + 1 == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (q_ + 1)) - 1;
    }

private:
    int q_;
    std::vector<Row> rows_;
    std::vector<int> row_lookup_;
};

} // namespace zlq
