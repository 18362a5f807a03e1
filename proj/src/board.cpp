#include <zlq/board.hpp>
#include <zlq/errors.hpp>

#include <algorithm>
#include <utility>

namespace zlq {

auto make_row(int a, int b) -> Row
{
    if (a == b)
        throw StructuralError("row needs two distinct vertices, got " + std::to_string(a) + " twice");
    if (a < 0 || b < 0)
        throw StructuralError("negative vertex in row");
    return a < b ? Row{a, b} : Row{b, a};
}

auto to_string(Degeneracy d) -> std::string_view
{
    switch (d) {
        case Degeneracy::nondegenerate: return "nondegenerate";
        case Degeneracy::row_degenerate: return "row-degenerate";
        case Degeneracy::column_degenerate: return "column-degenerate";
    }
    return "?";
}

TwoEdge::TwoEdge(Cell a, Cell b)
{
    if (a.row.i >= a.row.j || b.row.i >= b.row.j)
        throw StructuralError("row vertices must be distinct and ordered");
    if (a == b)
        throw StructuralError("2-edge halves must be distinct cells, got " + format_cell(a) + " twice");
    if (a.is_one_edge())
        throw StructuralError("cell " + format_cell(a) + " is a 1-edge cell");
    if (b.is_one_edge())
        throw StructuralError("cell " + format_cell(b) + " is a 1-edge cell");
    if (b < a)
        std::swap(a, b);
    first_ = a;
    second_ = b;
}

auto TwoEdge::degeneracy() const -> Degeneracy
{
    if (first_.row == second_.row)
        return Degeneracy::row_degenerate;
    if (first_.col == second_.col)
        return Degeneracy::column_degenerate;
    return Degeneracy::nondegenerate;
}

auto classify(const TwoEdge & e) -> Degeneracy
{
    return e.degeneracy();
}

auto to_string(CandidateMode m) -> std::string_view
{
    return m == CandidateMode::full ? "full" : "nondeg";
}

auto parse_candidate_mode(std::string_view s) -> CandidateMode
{
    if (s == "full")
        return CandidateMode::full;
    if (s == "nondeg" || s == "nondegenerate")
        return CandidateMode::nondegenerate_only;
    throw ParameterError("unknown candidate mode '" + std::string(s) + "' (expected full or nondeg)");
}

auto check_q(int q) -> void
{
    if (q < 2)
        throw ParameterError("q must be at least 2, got " + std::to_string(q));
    if (q > max_q)
        throw ParameterError("q must be at most " + std::to_string(max_q) + ", got " + std::to_string(q));
}

auto binomial2(std::int64_t n) -> std::int64_t
{
    return n < 2 ? 0 : n * (n - 1) / 2;
}

auto rows(int q) -> std::vector<Row>
{
    check_q(q);
    std::vector<Row> result;
    result.reserve(static_cast<std::size_t>(binomial2(q + 1)));
    for (int i = 0 ; i <= q ; ++i)
        for (int j = i + 1 ; j <= q ; ++j)
            result.push_back(Row{i, j});
    return result;
}

auto available_cells(int q) -> std::vector<Cell>
{
    std::vector<Cell> result;
    for (auto & r : rows(q))
        for (int c = 0 ; c <= q ; ++c)
            if (! r.contains(c))
                result.push_back(Cell{r, c});
    return result;
}

auto candidate_family(int q, CandidateMode mode) -> std::vector<TwoEdge>
{
    std::vector<TwoEdge> result;
    for_each_candidate(q, mode, [&] (const TwoEdge & e) { result.push_back(e); });
    return result;
}

auto cell_on_board(int q, const Cell & c) -> bool
{
    return c.row.i >= 0 && c.row.i < c.row.j && c.row.j <= q && c.col >= 0 && c.col <= q;
}

auto edge_on_board(int q, const TwoEdge & e) -> bool
{
    return cell_on_board(q, e.first()) && cell_on_board(q, e.second());
}

auto format_cell(const Cell & c) -> std::string
{
    return "(" + std::to_string(c.row.i) + "," + std::to_string(c.row.j) + "|" + std::to_string(c.col) + ")";
}

auto format_edge(const TwoEdge & e) -> std::string
{
    auto half = [] (const Cell & c) {
        return std::to_string(c.row.i) + "," + std::to_string(c.row.j) + "|" + std::to_string(c.col);
    };
    return "(" + half(e.first()) + ";" + half(e.second()) + ")";
}

auto counting_summary(int q) -> CountingSummary
{
    check_q(q);
    CountingSummary s;
    s.q = q;
    s.rows = binomial2(q + 1);
    s.columns = q + 1;
    s.one_edges = 2 * s.rows;
    s.available = s.rows * (q - 1);
    s.full = binomial2(s.available);
    // Row-degenerate: two of the q-1 free columns of one row.
    s.row_degenerate = s.rows * binomial2(q - 1);
    // Column-degenerate: two of the C(q,2) rows avoiding one column.
    s.column_degenerate = s.columns * binomial2(binomial2(q));
    s.nondegenerate = s.full - s.row_degenerate - s.column_degenerate;
    s.z = static_cast<std::int64_t>(q) * (q + 1);
    return s;
}

Geometry::Geometry(int q) :
    q_(q),
    rows_(rows(q)),
    row_lookup_(static_cast<std::size_t>((q + 1) * (q + 1)), -1)
{
    for (int k = 0 ; k < row_count() ; ++k)
        row_lookup_[rows_[k].i * columns() + rows_[k].j] = k;
}

} // namespace zlq
