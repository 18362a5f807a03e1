#include <zlq/admissibility.hpp>
#include <zlq/errors.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <set>

namespace zlq {

namespace
{
    constexpr auto bit(int c) -> std::uint64_t { return std::uint64_t{1} << c; }
}

auto to_dense(const Geometry & g, const TwoEdge & e) -> DenseEdge
{
    if (! edge_on_board(g.q(), e))
        throw StructuralError("edge " + format_edge(e) + " does not lie on the q=" + std::to_string(g.q()) + " board");
    DenseEdge d;
    d.r1 = g.row_index(e.first().row);
    d.c1 = e.first().col;
    d.r2 = g.row_index(e.second().row);
    d.c2 = e.second().col;
    d.nondegenerate = d.r1 != d.r2 && d.c1 != d.c2;
    return d;
}

Occupancy::Occupancy(std::shared_ptr<const Geometry> geometry) :
    geometry_(std::move(geometry))
{
    masks_.resize(static_cast<std::size_t>(geometry_->row_count()));
    for (int r = 0 ; r < geometry_->row_count() ; ++r)
        masks_[r] = geometry_->one_edge_mask(r);
    free_ = geometry_->row_count() * (geometry_->columns() - 2);
}

auto Occupancy::occupy(const DenseEdge & e) -> void
{
    if (! occupied(e.r1, e.c1)) {
        masks_[e.r1] |= bit(e.c1);
        --free_;
    }
    if (! occupied(e.r2, e.c2)) {
        masks_[e.r2] |= bit(e.c2);
        --free_;
    }
}

auto Occupancy::release(const DenseEdge & e) -> void
{
    if (occupied(e.r1, e.c1)) {
        masks_[e.r1] &= ~bit(e.c1);
        ++free_;
    }
    if (occupied(e.r2, e.c2)) {
        masks_[e.r2] &= ~bit(e.c2);
        ++free_;
    }
}

auto Occupancy::c2_violated(const DenseEdge & e) const -> bool
{
    return e.nondegenerate && occupied(e.r1, e.c2) && occupied(e.r2, e.c1);
}

auto Occupancy::c3_violated(const DenseEdge & e) const -> bool
{
    const std::uint64_t pair = bit(e.c1) | bit(e.c2);
    const std::uint64_t ys = masks_[e.r1] & masks_[e.r2] & ~pair;
    if (! ys)
        return false;
    for (int x = 0, n = geometry_->row_count() ; x < n ; ++x) {
        if (x == e.r1 || x == e.r2)
            continue;
        if ((masks_[x] & pair) == pair && (masks_[x] & ys))
            return true;
    }
    return false;
}

auto Occupancy::c3_witnesses(const DenseEdge & e) const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    const std::uint64_t pair = bit(e.c1) | bit(e.c2);
    const std::uint64_t ys = masks_[e.r1] & masks_[e.r2] & ~pair;
    if (! ys)
        return result;
    for (int x = 0, n = geometry_->row_count() ; x < n ; ++x) {
        if (x == e.r1 || x == e.r2 || (masks_[x] & pair) != pair)
            continue;
        for (std::uint64_t hits = masks_[x] & ys ; hits ; hits &= hits - 1)
            result.emplace_back(x, std::countr_zero(hits));
    }
    return result;
}

auto Occupancy::pattern_completed_through(const DenseEdge & f, int row, int col) const -> bool
{
    const std::uint64_t pair = bit(f.c1) | bit(f.c2);
    const bool in_rows = row == f.r1 || row == f.r2;
    const bool in_cols = (pair >> col) & 1U;

    if (in_rows && in_cols)
        // a half of f or one of its opposite cells
        return c2_violated(f);

    const std::uint64_t ys = masks_[f.r1] & masks_[f.r2] & ~pair;
    if (! in_rows) {
        // the cell lies in a witness row x = row
        if ((masks_[row] & pair) != pair)
            return false;
        if (in_cols)
            return (masks_[row] & ys) != 0;
        return (ys >> col) & 1U;
    }

    // the cell is (r1, y) or (r2, y) with y = col
    if (! ((ys >> col) & 1U))
        return false;
    const std::uint64_t need = pair | bit(col);
    for (int x = 0, n = geometry_->row_count() ; x < n ; ++x)
        if (x != f.r1 && x != f.r2 && (masks_[x] & need) == need)
            return true;
    return false;
}

auto Occupancy::can_add(std::span<const DenseEdge> placed, const DenseEdge & e) const -> bool
{
    if (occupied(e.r1, e.c1) || occupied(e.r2, e.c2))
        return false;
    if (e.r1 == e.r2 && e.c1 == e.c2)
        return false;
    // Neither e's opposite cells nor its C3 pattern cells can be e's own
    // halves, so the current masks decide e itself.
    if (c2_violated(e) || c3_violated(e))
        return false;

    Occupancy after = *this;
    after.masks_[e.r1] |= bit(e.c1);
    after.masks_[e.r2] |= bit(e.c2);
    for (auto & f : placed)
        if (after.pattern_completed_through(f, e.r1, e.c1) || after.pattern_completed_through(f, e.r2, e.c2))
            return false;
    return true;
}

auto to_string(ViolationKind k) -> std::string_view
{
    switch (k) {
        case ViolationKind::s: return "S";
        case ViolationKind::c2: return "C2";
        case ViolationKind::c3: return "C3";
    }
    return "?";
}

auto format_violation(const Violation & v) -> std::string
{
    auto cell_list = [&] {
        std::string s;
        for (std::size_t k = 0 ; k < v.cells.size() ; ++k)
            s += (k ? "," : "") + format_cell(v.cells[k]);
        return s;
    };

    std::string out{to_string(v.kind)};
    switch (v.kind) {
        case ViolationKind::s: {
            out += " cell=" + (v.cells.empty() ? std::string("?") : format_cell(v.cells.front())) + " edges=[";
            for (std::size_t k = 0 ; k < v.edges.size() ; ++k)
                out += (k ? "," : "") + std::to_string(v.edges[k]);
            out += "]";
            break;
        }
        case ViolationKind::c2:
            out += " edge=" + std::to_string(v.edges.empty() ? -1 : v.edges.front()) + " cells=" + cell_list();
            break;
        case ViolationKind::c3:
            out += " edge=" + std::to_string(v.edges.empty() ? -1 : v.edges.front());
            if (v.witness)
                out += " witness=" + format_cell(*v.witness);
            out += " cells=" + cell_list();
            break;
    }
    return out;
}

Board::Board(int q) :
    occupancy_(std::make_shared<const Geometry>(q)),
    owner_(static_cast<std::size_t>(occupancy_.geometry().cell_count()), -1)
{
}

auto Board::status(const Cell & c) const -> CellStatus
{
    if (! cell_on_board(q(), c))
        throw StructuralError("cell " + format_cell(c) + " is not on the board");
    if (c.is_one_edge())
        return CellStatus::one_edge;
    return owner_[geometry().cell_index(c)] >= 0 ? CellStatus::used : CellStatus::free;
}

auto Board::owner(const Cell & c) const -> int
{
    if (! cell_on_board(q(), c))
        throw StructuralError("cell " + format_cell(c) + " is not on the board");
    return owner_[geometry().cell_index(c)];
}

auto Board::count(CellStatus s) const -> int
{
    auto & g = geometry();
    int n = 0;
    for (int k = 0 ; k < g.cell_count() ; ++k)
        if (status(g.cell(k)) == s)
            ++n;
    return n;
}

struct BoardBuilder
{
    static auto build(const Family & f) -> BoardBuild
    {
        BoardBuild result{Board{f.q()}, {}};
        auto & board = result.board;
        auto & g = board.geometry();

        // claimants per cell, in edge order
        std::vector<std::vector<int>> claims(static_cast<std::size_t>(g.cell_count()));
        for (int k = 0 ; k < static_cast<int>(f.size()) ; ++k) {
            auto & e = f.edges()[k];
            claims[g.cell_index(e.first())].push_back(k);
            claims[g.cell_index(e.second())].push_back(k);
        }
        for (int idx = 0 ; idx < g.cell_count() ; ++idx) {
            auto & who = claims[idx];
            if (who.empty())
                continue;
            board.owner_[idx] = who.front();
            if (who.size() > 1)
                result.s_violations.push_back(Violation{ViolationKind::s, who, {g.cell(idx)}, std::nullopt});
        }
        for (auto & e : f.edges())
            board.occupancy_.occupy(to_dense(g, e));
        return result;
    }
};

auto build_board(const Family & f) -> BoardBuild
{
    return BoardBuilder::build(f);
}

auto check_c2(const Board & board, const TwoEdge & e, int edge_id) -> std::optional<Violation>
{
    auto & g = board.geometry();
    auto d = to_dense(g, e);
    if (! board.occupancy().c2_violated(d))
        return std::nullopt;
    Cell opposite1{e.first().row, e.second().col};
    Cell opposite2{e.second().row, e.first().col};
    return Violation{ViolationKind::c2, {edge_id}, {opposite1, opposite2}, std::nullopt};
}

auto check_c3(const Board & board, const TwoEdge & e, int edge_id) -> std::vector<Violation>
{
    auto & g = board.geometry();
    auto d = to_dense(g, e);
    std::vector<Violation> result;
    for (auto [x, y] : board.occupancy().c3_witnesses(d)) {
        const Row & xr = g.row(x);
        std::vector<Cell> cells{
            Cell{xr, y}, Cell{xr, e.first().col}, Cell{xr, e.second().col},
            Cell{e.first().row, y}, Cell{e.second().row, y}};
        if (d.nondegenerate) {
            // the row/column exclusions already force five distinct cells
            [[maybe_unused]] std::set<Cell> distinct(cells.begin(), cells.end());
            assert(distinct.size() == 5);
        }
        result.push_back(Violation{ViolationKind::c3, {edge_id}, std::move(cells), Cell{xr, y}});
    }
    return result;
}

auto verify(const Family & f) -> Verdict
{
    auto [board, s_violations] = build_board(f);
    Verdict verdict;
    verdict.violations = std::move(s_violations);
    for (int k = 0 ; k < static_cast<int>(f.size()) ; ++k) {
        auto & e = f.edges()[k];
        if (auto v = check_c2(board, e, k))
            verdict.violations.push_back(std::move(*v));
        for (auto & v : check_c3(board, e, k))
            verdict.violations.push_back(std::move(v));
    }
    verdict.pass = verdict.violations.empty();
    return verdict;
}

auto is_admissible(const Family & f) -> bool
{
    auto geometry = std::make_shared<const Geometry>(f.q());
    Occupancy occ{geometry};
    std::vector<DenseEdge> dense;
    dense.reserve(f.size());
    for (auto & e : f.edges()) {
        auto d = to_dense(*geometry, e);
        if (occ.occupied(d.r1, d.c1) || occ.occupied(d.r2, d.c2))
            return false;
        occ.occupy(d);
        dense.push_back(d);
    }
    return std::none_of(dense.begin(), dense.end(), [&] (const DenseEdge & d) {
        return occ.c2_violated(d) || occ.c3_violated(d);
    });
}

auto incremental_check(const Board & board, const Family & f, const TwoEdge & e) -> bool
{
    if (f.q() != board.q())
        throw StructuralError("family and board are for different q");
    auto & g = board.geometry();
    std::vector<DenseEdge> placed;
    placed.reserve(f.size());
    for (auto & existing : f.edges())
        placed.push_back(to_dense(g, existing));
    return board.occupancy().can_add(placed, to_dense(g, e));
}

} // namespace zlq
