#include "oracle.hpp"

#include <zlq/admissibility.hpp>
#include <zlq/fixtures.hpp>

#include <doctest.h>

#include <random>

using namespace zlq;

namespace {

auto cell(int i, int j, int c) -> Cell
{
    return Cell{make_row(i, j), c};
}

auto edge(int i1, int i2, int c1, int i4, int i5, int c2) -> TwoEdge
{
    return TwoEdge{cell(i1, i2, c1), cell(i4, i5, c2)};
}

auto subset_by_mask(const Family & f, std::uint64_t mask) -> Family
{
    std::vector<TwoEdge> keep;
    for (std::size_t k = 0 ; k < f.size() ; ++k)
        if ((mask >> k) & 1U)
            keep.push_back(f.edges()[k]);
    return Family{f.q(), std::move(keep)};
}

} // namespace

TEST_CASE("board occupancy")
{
    auto empty = build_board(Family{3});
    CHECK(empty.board.count(CellStatus::one_edge) == 12);
    CHECK(empty.board.count(CellStatus::free) == 12);
    CHECK(empty.board.count(CellStatus::used) == 0);
    CHECK(empty.s_violations.empty());

    auto ref = build_board(reference_family(3));
    CHECK(ref.board.count(CellStatus::used) == 4);
    CHECK(ref.board.owner(cell(0, 1, 2)) == 0);
    CHECK(ref.board.owner(cell(2, 3, 0)) == 1);
    CHECK(ref.board.owner(cell(0, 1, 0)) == -1);
    CHECK(ref.board.status(cell(0, 1, 0)) == CellStatus::one_edge);
}

TEST_CASE("(S): a shared half is reported once with both edges")
{
    Family f{3, {edge(0, 1, 2, 0, 3, 1), edge(0, 1, 2, 1, 3, 0)}};
    auto built = build_board(f);
    REQUIRE(built.s_violations.size() == 1);
    auto v = verify(f);
    CHECK_FALSE(v.pass);
    REQUIRE(! v.violations.empty());
    CHECK(format_violation(v.violations[0]) == "S cell=(0,1|2) edges=[0,1]");

    auto six = reference_family(6);
    auto edges = six.edges();
    edges.push_back(edges[5]);
    auto dup = verify(Family{6, edges});
    CHECK_FALSE(dup.pass);
    CHECK(dup.violations[0].kind == ViolationKind::s);
}

TEST_CASE("(C2)")
{
    auto lone = edge(0, 1, 2, 2, 3, 0);
    auto v = check_c2(build_board(Family{3}).board, lone);
    REQUIRE(v);
    CHECK(v->cells == std::vector<Cell>{cell(0, 1, 0), cell(2, 3, 2)});
    CHECK(format_violation(*v) == "C2 edge=-1 cells=(0,1|0),(2,3|2)");
    CHECK_FALSE(verify(Family{3, {lone}}).pass);

    auto ref = build_board(reference_family(3)).board;
    CHECK_FALSE(check_c2(ref, edge(0, 1, 2, 0, 3, 1), 0));

    // degenerate edges never violate (C2), whatever is occupied
    CHECK_FALSE(check_c2(ref, edge(0, 1, 2, 0, 1, 3)));
    CHECK_FALSE(check_c2(ref, edge(0, 1, 2, 0, 3, 2)));
}

TEST_CASE("(C3) witness in another edge's half")
{
    Family f{3, {edge(0, 1, 2, 0, 2, 3), edge(2, 3, 0, 1, 3, 2)}};
    auto board = build_board(f).board;
    auto vs = check_c3(board, f.edges()[0], 0);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].witness == cell(2, 3, 0));
    CHECK(vs[0].cells == std::vector<Cell>{cell(2, 3, 0), cell(2, 3, 2), cell(2, 3, 3), cell(0, 1, 0), cell(0, 2, 0)});
    CHECK(format_violation(vs[0]) == "C3 edge=0 witness=(2,3|0) cells=(2,3|0),(2,3|2),(2,3|3),(0,1|0),(0,2|0)");
    for (auto & c : vs[0].cells)
        CHECK(board.occupied(c));
    CHECK_FALSE(verify(f).pass);
    CHECK_FALSE(oracle::admissible(f));
}

TEST_CASE("(C3) witness may itself be a 1-edge cell")
{
    Family f{3, {edge(0, 2, 3, 1, 2, 0), edge(2, 3, 0, 2, 3, 1)}};
    auto vs = check_c3(build_board(f).board, f.edges()[0], 0);
    REQUIRE(! vs.empty());
    CHECK(vs[0].witness == cell(2, 3, 2));
    CHECK(vs[0].witness->is_one_edge());
    CHECK_FALSE(oracle::admissible(f));
}

TEST_CASE("(C3) on an empty board needs a column-degenerate edge")
{
    // With distinct columns the pattern needs three occupied cells in row x,
    // but a row holds only two 1-edges. A column-degenerate edge needs two.
    for (int q = 2 ; q <= 5 ; ++q) {
        auto board = build_board(Family{q}).board;
        int fired = 0;
        for (auto & e : candidate_family(q, CandidateMode::full)) {
            auto vs = check_c3(board, e);
            if (classify(e) != Degeneracy::column_degenerate)
                CHECK(vs.empty());
            else if (! vs.empty())
                ++fired;
        }
        if (q >= 3)
            CHECK(fired > 0);
    }
    auto e = edge(0, 1, 2, 0, 3, 2);
    auto vs = check_c3(build_board(Family{3}).board, e);
    REQUIRE(! vs.empty());
    CHECK(vs[0].witness == cell(0, 2, 0));
    CHECK_FALSE(oracle::admissible(Family{3, {e}}));
}

TEST_CASE("reference families pass and are nondegenerate")
{
    for (int q : reference_family_qs()) {
        CAPTURE(q);
        auto f = reference_family(q);
        auto v = verify(f);
        CHECK(v.pass);
        CHECK(v.violations.empty());
        CHECK(is_admissible(f));
        CHECK(f.all_nondegenerate());
        CHECK(oracle::admissible(f));
    }
}

TEST_CASE("admissible singletons and pairs agree with brute force")
{
    std::mt19937_64 rng{11};
    for (int q : {2, 3, 4}) {
        auto cands = candidate_family(q, CandidateMode::full);
        int singles = 0;
        for (auto & e : cands) {
            Family f{q, {e}};
            bool ok = verify(f).pass;
            CHECK(ok == oracle::admissible(f));
            singles += ok;
        }
        if (q == 3)
            CHECK(singles == 30);
        if (q == 4)
            CHECK(singles == 285);

        if (q <= 3) {
            for (std::size_t a = 0 ; a < cands.size() ; ++a)
                for (std::size_t b = a + 1 ; b < cands.size() ; ++b) {
                    Family f{q, {cands[a], cands[b]}};
                    CHECK(verify(f).pass == oracle::admissible(f));
                }
        }
        else {
            for (int t = 0 ; t < 3000 ; ++t) {
                Family f{q, oracle::random_pick(cands, 2 + static_cast<int>(rng() % 3), rng)};
                CHECK(verify(f).pass == oracle::admissible(f));
            }
        }
    }
}

TEST_CASE("hereditarity: every subset of a reference family is admissible")
{
    for (int q : {3, 4}) {
        auto f = reference_family(q);
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << f.size()) ; ++mask)
            CHECK(is_admissible(subset_by_mask(f, mask)));
    }
    std::mt19937_64 rng{2024};
    int checked = 0;
    for (int t = 0 ; t < 1000 ; ++t) {
        int q = 5 + t % 3;
        auto sub = oracle::random_subset(reference_family(q), rng);
        CHECK(verify(sub).pass);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("violations are monotone under insertion")
{
    std::mt19937_64 rng{77};
    int inadmissible = 0;
    for (int t = 0 ; t < 400 ; ++t) {
        int q = 3 + t % 3;
        auto cands = candidate_family(q, CandidateMode::full);
        Family f{q, oracle::random_pick(cands, 3, rng)};
        if (verify(f).pass)
            continue;
        ++inadmissible;
        auto e = cands[rng() % cands.size()];
        if (f.contains(e))
            continue;
        CHECK_FALSE(verify(f.with(e)).pass);
    }
    CHECK(inadmissible > 100);
}

TEST_CASE("every reported violation re-checks in isolation")
{
    std::mt19937_64 rng{5};
    for (int t = 0 ; t < 300 ; ++t) {
        int q = 3 + t % 4;
        Family f{q, oracle::random_pick(candidate_family(q, CandidateMode::full), 4, rng)};
        auto board = build_board(f).board;
        for (auto & v : verify(f).violations) {
            switch (v.kind) {
                case ViolationKind::s:
                    CHECK(v.edges.size() >= 2);
                    break;
                case ViolationKind::c2: {
                    auto & e = f.edges()[v.edges[0]];
                    CHECK(e.is_nondegenerate());
                    CHECK(check_c2(board, e, v.edges[0]) == v);
                    break;
                }
                case ViolationKind::c3:
                    REQUIRE(v.witness);
                    CHECK(v.cells.size() == 5);
                    for (auto & c : v.cells)
                        CHECK(board.occupied(c));
                    break;
            }
        }
    }
}

TEST_CASE("incremental check equals full verification over 10000 insertions")
{
    std::mt19937_64 rng{31337};
    int insertions = 0;
    int accepted = 0;
    int rejected = 0;
    while (insertions < 10000) {
        int q = 3 + static_cast<int>(rng() % 5);
        auto ref = reference_family(q);
        auto cands = candidate_family(q, CandidateMode::full);
        Family f = oracle::random_subset(ref, rng);

        for (int step = 0 ; step < 20 && insertions < 10000 ; ++step) {
            // half the proposals come from the reference family, half from anywhere
            auto e = (rng() & 1U) ? ref.edges()[rng() % ref.size()] : cands[rng() % cands.size()];
            if (f.contains(e))
                continue;
            auto board = build_board(f).board;
            bool incremental = incremental_check(board, f, e);

            std::vector<DenseEdge> placed;
            for (auto & g : f.edges())
                placed.push_back(to_dense(board.geometry(), g));
            bool masks = board.occupancy().can_add(placed, to_dense(board.geometry(), e));

            auto g = f.with(e);
            bool full = verify(g).pass;
            CHECK(incremental == full);
            CHECK(masks == full);
            if (insertions % 5 == 0)
                CHECK(full == oracle::admissible(g));
            ++insertions;
            if (full) {
                f = g;
                ++accepted;
            }
            else
                ++rejected;
        }
    }
    CHECK(accepted > 1000);
    CHECK(rejected > 1000);
}
