#include "oracle.hpp"

#include <zlq/exact_solver.hpp>
#include <zlq/fixtures.hpp>
#include <zlq/lifting.hpp>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace zlq;

namespace {

/// Orbits by applying every one of the (q+1)! vertex permutations.
auto orbits_by_enumeration(int q, const std::vector<TwoEdge> & cands) -> std::set<std::set<TwoEdge>>
{
    std::vector<int> p(static_cast<std::size_t>(q + 1));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto image = [] (const std::vector<int> & perm, const TwoEdge & e) {
        auto map_cell = [&] (const Cell & c) { return Cell{make_row(perm[c.row.i], perm[c.row.j]), perm[c.col]}; };
        return TwoEdge{map_cell(e.first()), map_cell(e.second())};
    };

    std::set<std::set<TwoEdge>> orbits;
    std::set<TwoEdge> seen;
    for (auto & e : cands) {
        if (seen.count(e))
            continue;
        std::set<TwoEdge> orbit;
        for (auto & perm : perms)
            orbit.insert(image(perm, e));
        seen.insert(orbit.begin(), orbit.end());
        orbits.insert(orbit);
    }
    return orbits;
}

auto orbits_by_solver(int q, const std::vector<TwoEdge> & cands) -> std::set<std::set<TwoEdge>>
{
    auto labels = candidate_orbits(q, cands);
    std::map<int, std::set<TwoEdge>> groups;
    for (std::size_t k = 0 ; k < cands.size() ; ++k)
        groups[labels[k]].insert(cands[k]);
    std::set<std::set<TwoEdge>> out;
    for (auto & [label, members] : groups)
        out.insert(members);
    return out;
}

} // namespace

TEST_CASE("q=2 has no admissible 2-edge")
{
    auto cands = oracle::candidates(2);
    CHECK(cands.size() == 3);
    for (unsigned mask = 1 ; mask < 8 ; ++mask) {
        std::vector<oracle::Edge> pick;
        for (unsigned k = 0 ; k < 3 ; ++k)
            if ((mask >> k) & 1U)
                pick.push_back(cands[k]);
        CHECK_FALSE(oracle::admissible(2, pick));
    }
    auto r = solve_exact(2, CandidateMode::full);
    CHECK(r.status == SolveStatus::optimal);
    CHECK(r.size == 0);
}

TEST_CASE("q=3 optimum is 2 by brute force over triples")
{
    std::vector<oracle::Edge> singles;
    for (auto & e : oracle::candidates(3))
        if (oracle::admissible(3, {e}))
            singles.push_back(e);
    REQUIRE(singles.size() == 30);

    int pairs = 0;
    for (std::size_t a = 0 ; a < singles.size() ; ++a)
        for (std::size_t b = a + 1 ; b < singles.size() ; ++b) {
            if (! oracle::admissible(3, {singles[a], singles[b]}))
                continue;
            ++pairs;
            for (std::size_t c = b + 1 ; c < singles.size() ; ++c)
                CHECK_FALSE(oracle::admissible(3, {singles[a], singles[b], singles[c]}));
        }
    CHECK(pairs > 0);
}

TEST_CASE("exact values for q=3 and q=4")
{
    struct Case
    {
        int q;
        int expected;
    };
    for (auto [q, expected] : {Case{3, 2}, Case{4, 6}}) {
        for (auto mode : {CandidateMode::full, CandidateMode::nondegenerate_only}) {
            for (bool symmetry : {false, true}) {
                CAPTURE(q);
                CAPTURE(symmetry);
                SolverOptions opt;
                opt.symmetry = symmetry;
                auto r = solve_exact(q, mode, opt);
                CHECK(r.status == SolveStatus::optimal);
                CHECK(r.size == expected);
                CHECK(r.certificate.size() == static_cast<std::size_t>(expected));
                CHECK(verify(r.certificate).pass);
                CHECK(oracle::admissible(r.certificate));
                CHECK(r.symmetry_used == symmetry);
                CHECK(r.root_bound >= expected);
            }
        }
    }
}

TEST_CASE("certificates do not depend on the thread count")
{
    for (int q : {3, 4}) {
        SolverOptions one;
        SolverOptions four;
        four.threads = 4;
        auto a = solve_exact(q, CandidateMode::full, one);
        auto b = solve_exact(q, CandidateMode::full, four);
        CHECK(a.size == b.size);
        CHECK(a.certificate == b.certificate);

        one.symmetry = four.symmetry = true;
        CHECK(solve_exact(q, CandidateMode::full, one).certificate == solve_exact(q, CandidateMode::full, four).certificate);
    }
}

TEST_CASE("natural branch order gives the same optimum")
{
    SolverOptions opt;
    opt.order = BranchOrder::natural;
    CHECK(solve_exact(3, CandidateMode::full, opt).size == 2);
    opt.symmetry = true;
    CHECK(solve_exact(4, CandidateMode::full, opt).size == 6);
}

TEST_CASE("canonical certificate is the smallest optimal family")
{
    auto cands = candidate_family(3, CandidateMode::full);
    std::vector<TwoEdge> best;
    for (std::size_t a = 0 ; a < cands.size() ; ++a)
        for (std::size_t b = a + 1 ; b < cands.size() ; ++b) {
            Family f{3, {cands[a], cands[b]}};
            if (verify(f).pass && (best.empty() || f.edges() < best))
                best = f.edges();
        }

    SolverOptions opt;
    opt.canonical_certificate = true;
    opt.symmetry = true;
    auto r = solve_exact(3, CandidateMode::full, opt);
    CHECK_FALSE(r.symmetry_used);
    CHECK(r.certificate.edges() == best);
    opt.threads = 3;
    CHECK(solve_exact(3, CandidateMode::full, opt).certificate.edges() == best);
}

TEST_CASE("orbits under vertex relabelling")
{
    for (int q : {3, 4}) {
        for (auto mode : {CandidateMode::full, CandidateMode::nondegenerate_only}) {
            auto cands = candidate_family(q, mode);
            CHECK(orbits_by_solver(q, cands) == orbits_by_enumeration(q, cands));
        }
    }
    CHECK(orbit_representatives(3, candidate_family(3, CandidateMode::full)).size() == 5);
    CHECK(orbit_representatives(4, candidate_family(4, CandidateMode::full)).size() == 8);
}

TEST_CASE("permutations act on cells and edges")
{
    Permutation swap01{1, 0, 2, 3};
    auto e = TwoEdge{Cell{make_row(0, 2), 1}, Cell{make_row(1, 3), 0}};
    auto img = permute(swap01, e);
    CHECK(img == TwoEdge{Cell{make_row(1, 2), 0}, Cell{make_row(0, 3), 1}});
    CHECK(permute(swap01, img) == e);
    CHECK(verify(Family{3, {img}}).pass == verify(Family{3, {e}}).pass);
}

TEST_CASE("pairwise conflicts are exactly the inadmissible pairs")
{
    auto cands = candidate_family(3, CandidateMode::full);
    auto rel = pairwise_conflicts(3, cands);
    for (std::size_t a = 0 ; a < cands.size() ; ++a) {
        CHECK(rel.infeasible[a] == ! verify(Family{3, {cands[a]}}).pass);
        for (std::size_t b = a + 1 ; b < cands.size() ; ++b)
            CHECK(rel.conflicting(static_cast<int>(a), static_cast<int>(b)) ==
                  ! verify(Family{3, {cands[a], cands[b]}}).pass);
    }

    auto base = reference_family(3).on_board(4);
    std::vector<TwoEdge> fresh;
    for (auto & e : candidate_family(4, CandidateMode::full))
        if (touches_vertex(e, 4))
            fresh.push_back(e);
    auto ext = pairwise_conflicts(base, fresh);
    std::mt19937_64 rng{3};
    for (int t = 0 ; t < 2000 ; ++t) {
        int a = static_cast<int>(rng() % fresh.size());
        int b = static_cast<int>(rng() % fresh.size());
        if (a == b)
            continue;
        CHECK(ext.conflicting(a, b) == ! verify(base.with(fresh[a]).with(fresh[b])).pass);
    }
}

TEST_CASE("upper bounds never undercut the best completion")
{
    auto cands = candidate_family(3, CandidateMode::full);
    SearchSpace space{Family{3}, cands};
    auto root = space.root();
    CHECK(space.upper_bound(root) >= 2);
    for (int a = 0 ; a < static_cast<int>(cands.size()) ; ++a) {
        if (! root.remaining.test(a))
            continue;
        auto node = space.child(root, a);
        int best = 1;
        for (int b = 0 ; b < static_cast<int>(cands.size()) ; ++b)
            if (b != a && verify(Family{3, {cands[a], cands[b]}}).pass)
                best = 2;
        CHECK(space.upper_bound(node) >= best);
        CHECK(verify(space.family_of(node)).pass);
        node.remaining.for_each([&] (int b) { CHECK(verify(Family{3, {cands[a], cands[b]}}).pass); });
    }
}

TEST_CASE("extension optimum matches brute force for every singleton base")
{
    auto cands = candidate_family(3, CandidateMode::full);
    for (auto & e : cands) {
        Family base{3, {e}};
        if (! verify(base).pass)
            continue;
        int best = 0;
        for (auto & g : cands)
            if (g != e && verify(base.with(g)).pass)
                best = 1;
        auto r = solve_extension(base, cands);
        CHECK(r.status == SolveStatus::optimal);
        CHECK(r.size == best);
        CHECK(r.certificate.contains(e));
        CHECK(verify(r.certificate).pass);
    }
}

TEST_CASE("budgets and targets")
{
    SolverOptions limited;
    limited.node_limit = 5;
    auto r = solve_exact(4, CandidateMode::full, limited);
    CHECK(r.status == SolveStatus::bounded_incumbent);
    CHECK(verify(r.certificate).pass);
    CHECK(r.size <= 6);

    SolverOptions timed;
    timed.time_limit_seconds = 0.0;
    CHECK(verify(solve_exact(4, CandidateMode::full, timed).certificate).pass);

    SolverOptions target;
    target.stop_at = 4;
    auto t = solve_exact(4, CandidateMode::full, target);
    CHECK(t.status == SolveStatus::target_reached);
    CHECK(t.size >= 4);
    CHECK(verify(t.certificate).pass);
}

TEST_CASE("event stream")
{
    std::vector<SolverEvent> events;
    SolverOptions opt;
    opt.log_interval = 100;
    opt.on_event = [&] (const SolverEvent & ev) { events.push_back(ev); };
    auto r = solve_exact(4, CandidateMode::full, opt);
    REQUIRE(! events.empty());
    CHECK(events.front().kind == SolverEvent::Kind::bound);
    CHECK(events.front().bound == r.root_bound);
    int last = 0;
    int incumbents = 0;
    for (auto & ev : events) {
        if (ev.kind != SolverEvent::Kind::incumbent)
            continue;
        CHECK(ev.size > last);
        last = ev.size;
        ++incumbents;
    }
    CHECK(incumbents >= 1);
    CHECK(last == 6);
    CHECK(std::any_of(events.begin(), events.end(), [] (auto & ev) { return ev.kind == SolverEvent::Kind::node; }));
}
