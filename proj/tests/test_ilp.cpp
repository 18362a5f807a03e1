#include "oracle.hpp"

#include <zlq/errors.hpp>
#include <zlq/fixtures.hpp>
#include <zlq/ilp_model.hpp>

#include <doctest.h>

#include <random>

using namespace zlq;

namespace {

auto witness_count(const TwoEdge & e, int q) -> int
{
    int m = static_cast<int>(binomial2(q + 1));
    int n = q + 1;
    switch (classify(e)) {
        case Degeneracy::nondegenerate: return (m - 2) * (n - 2);
        case Degeneracy::row_degenerate: return (m - 1) * (n - 2);
        case Degeneracy::column_degenerate: return (m - 2) * (n - 1);
    }
    return -1;
}

auto solution_text(const IlpModel & m, const std::vector<int> & assignment) -> std::string
{
    std::string out = "# objective value\n";
    for (int v = 0 ; v < m.num_variables() ; ++v)
        out += m.variable_name(v) + " " + std::to_string(assignment[v]) + "\n";
    return out;
}

} // namespace

TEST_CASE("witness sets")
{
    for (int q : {3, 4, 5}) {
        for (auto & e : candidate_family(q, CandidateMode::full)) {
            auto w = witness_set(e, q);
            CHECK(static_cast<int>(w.size()) == witness_count(e, q));
            CHECK(std::is_sorted(w.begin(), w.end()));
            for (auto & c : w) {
                CHECK(c.row != e.first().row);
                CHECK(c.row != e.second().row);
                CHECK(c.col != e.first().col);
                CHECK(c.col != e.second().col);
            }
        }
    }
}

TEST_CASE("model sizes")
{
    for (int q : {2, 3, 4}) {
        CAPTURE(q);
        auto m = build_model(q, CandidateMode::full, false);
        auto s = counting_summary(q);
        CHECK(m.candidates().size() == static_cast<std::size_t>(s.full));
        CHECK(m.cells().size() == static_cast<std::size_t>(s.available));
        CHECK(m.num_variables() == s.full + s.available);
        CHECK(m.count(ConstraintKind::s_eq) == s.available);
        CHECK(m.count(ConstraintKind::c2_ineq) == s.nondegenerate);
        int c3 = 0;
        for (auto & e : m.candidates())
            c3 += witness_count(e, q);
        CHECK(m.count(ConstraintKind::c3_ineq) == c3);
        CHECK(m.fixed_zero().empty());
    }
    CHECK(build_model(3, CandidateMode::full, false).count(ConstraintKind::c3_ineq) == 588);
}

TEST_CASE("variable names round-trip")
{
    auto m = build_model(3, CandidateMode::full, false);
    for (int v = 0 ; v < m.num_variables() ; ++v)
        CHECK(m.variable_index(m.variable_name(v)) == v);
    CHECK(m.variable_name(0) == "x_0");
    CHECK(m.variable_name(m.o_var(Cell{make_row(0, 1), 2})) == "o_0_1_2");
    CHECK_FALSE(m.variable_index("x_66"));
    CHECK_FALSE(m.variable_index("o_0_1_1"));
    CHECK_FALSE(m.variable_index("y"));
}

TEST_CASE("static pruning fixes exactly the inadmissible singletons")
{
    for (int q : {2, 3, 4}) {
        auto m = build_model(q, CandidateMode::full, true);
        std::vector<int> expected;
        for (int k = 0 ; k < static_cast<int>(m.candidates().size()) ; ++k)
            if (! verify(Family{q, {m.candidates()[k]}}).pass)
                expected.push_back(k);
        CHECK(m.fixed_zero() == expected);
    }
    CHECK(build_model(3, CandidateMode::full, true).fixed_zero().size() == 36);
    CHECK(build_model(4, CandidateMode::full, true).fixed_zero().size() == 150);
    CHECK(build_model(2, CandidateMode::full, true).fixed_zero().size() == 3);
}

TEST_CASE("LP export parses back to the same model")
{
    for (bool prune : {false, true}) {
        for (auto mode : {CandidateMode::full, CandidateMode::nondegenerate_only}) {
            auto m = build_model(3, mode, prune);
            auto text = export_lp(m);
            CHECK(text == export_lp(m));
            auto doc = parse_lp(text);
            CHECK(doc.maximize);
            REQUIRE(doc.objective.size() == m.candidates().size());
            for (std::size_t k = 0 ; k < doc.objective.size() ; ++k) {
                CHECK(doc.objective[k].first == m.variable_name(static_cast<int>(k)));
                CHECK(doc.objective[k].second == 1.0);
            }
            REQUIRE(doc.rows.size() == m.constraints().size());
            for (std::size_t r = 0 ; r < doc.rows.size() ; ++r) {
                auto & row = doc.rows[r];
                auto & c = m.constraints()[r];
                CHECK(row.name == c.name);
                CHECK(row.sense == (c.sense == Sense::equal ? "=" : "<="));
                CHECK(row.rhs == c.rhs);
                REQUIRE(row.terms.size() == c.terms.size());
                for (std::size_t t = 0 ; t < row.terms.size() ; ++t) {
                    CHECK(row.terms[t].first == m.variable_name(c.terms[t].var));
                    CHECK(row.terms[t].second == c.terms[t].coef);
                }
            }
            CHECK(static_cast<int>(doc.binaries.size()) == m.num_variables());
            CHECK(doc.fixed.size() == m.fixed_zero().size());
            for (auto & [name, value] : doc.fixed) {
                CHECK(value == 0.0);
                CHECK(name.rfind("x_", 0) == 0);
            }
        }
    }
}

TEST_CASE("a family's 0/1 vector satisfies the model iff it is admissible")
{
    std::mt19937_64 rng{4};
    int admissible = 0;
    int inadmissible = 0;
    for (int t = 0 ; t < 200 ; ++t) {
        int q = 2 + t % 2;
        auto m = build_model(q, CandidateMode::full, false);
        int k = static_cast<int>(rng() % 4);
        Family f{q, oracle::random_pick(m.candidates(), k, rng)};
        auto x = assignment_from_family(m, f);
        bool feasible = violated_constraints(m, x).empty();
        bool pass = verify(f).pass;
        CHECK(feasible == pass);
        CHECK(pass == oracle::admissible(f));
        (pass ? admissible : inadmissible)++;
    }
    CHECK(admissible > 20);
    CHECK(inadmissible > 20);
}

TEST_CASE("the pruned model keeps the equivalence")
{
    std::mt19937_64 rng{8};
    for (int t = 0 ; t < 200 ; ++t) {
        auto m = build_model(3, CandidateMode::full, true);
        Family f{3, oracle::random_pick(m.candidates(), 1 + static_cast<int>(rng() % 3), rng)};
        CHECK(violated_constraints(m, assignment_from_family(m, f)).empty() == verify(f).pass);
    }
    auto m = build_model(4, CandidateMode::full, true);
    CHECK(violated_constraints(m, assignment_from_family(m, reference_family(4))).empty());
}

TEST_CASE("occupancy variables that disagree with x violate (S)")
{
    auto m = build_model(3, CandidateMode::full, false);
    auto x = assignment_from_family(m, reference_family(3));
    x[m.o_var(Cell{make_row(0, 1), 3})] = 1;
    auto bad = violated_constraints(m, x);
    REQUIRE(bad.size() >= 1);
    CHECK(m.constraints()[bad[0]].name == "s_0_1_3");
}

TEST_CASE("importing solutions")
{
    auto m = build_model(4, CandidateMode::full, false);
    auto f = reference_family(4);
    auto x = assignment_from_family(m, f);

    auto good = import_solution(m, parse_solution(solution_text(m, x)));
    CHECK(good.family == f);
    CHECK(good.objective == 6);
    CHECK(good.ilp_feasible);
    CHECK(good.verdict.pass);
    CHECK(good.consistent);

    auto y = x;
    y[m.o_var(Cell{make_row(0, 1), 2})] ^= 1;
    auto off = import_solution(m, parse_solution(solution_text(m, y)));
    CHECK_FALSE(off.ilp_feasible);
    CHECK(off.s_inconsistent == std::vector<std::string>{"s_0_1_2"});
    CHECK(off.verdict.pass);
    CHECK_FALSE(off.consistent);

    auto values = parse_solution(solution_text(m, x));
    values.erase("x_3");
    CHECK_THROWS_AS(import_solution(m, values), InputError);

    values = parse_solution(solution_text(m, x));
    values["x_999"] = 0;
    CHECK_THROWS_AS(import_solution(m, values), InputError);

    values = parse_solution(solution_text(m, x));
    values["x_3"] = 0.5;
    CHECK_THROWS_AS(import_solution(m, values), InputError);

    values = parse_solution(solution_text(m, x));
    values["x_3"] = 1.0 - 1e-9;
    CHECK_NOTHROW(import_solution(m, values));
}

TEST_CASE("solution file parsing")
{
    auto v = parse_solution("# status optimal\n\nx_0 1\n  o_0_1_2\t0\n");
    CHECK(v.size() == 2);
    CHECK(v.at("x_0") == 1.0);
    CHECK_THROWS_AS(parse_solution("x_0 1\nx_0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("x_0\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("x_0 one\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("x_0 1 extra\n"), ParseError);
    try {
        parse_solution("x_0 1\n\nbad\n");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 3);
    }
}
