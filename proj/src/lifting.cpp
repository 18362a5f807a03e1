#include <zlq/admissibility.hpp>
#include <zlq/errors.hpp>
#include <zlq/greedy_search.hpp>
#include <zlq/lifting.hpp>

#include <algorithm>
#include <stdexcept>

namespace zlq {

auto embed(const Family & f) -> Family
{
    if (! verify(f).pass)
        throw StructuralError("cannot lift a family that fails verification");
    auto lifted = f.on_board(f.q() + 1);
    // New rows only hold their two 1-edge cells and cannot complete a
    // pattern; checked anyway.
    if (! verify(lifted).pass)
        throw std::logic_error("embedding broke admissibility");
    return lifted;
}

auto touches_vertex(const TwoEdge & e, int v) -> bool
{
    auto touches = [v] (const Cell & c) { return c.row.contains(v) || c.col == v; };
    return touches(e.first()) || touches(e.second());
}

auto lift_extend(const Family & f, const LiftConfig & config) -> LiftReport
{
    auto embedded = embed(f);
    const int to_q = embedded.q();
    const int new_vertex = to_q;

    LiftReport report;
    report.from_q = f.q();
    report.to_q = to_q;
    report.base_size = static_cast<int>(f.size());
    report.target = report.base_size + f.q() / 2;
    report.target_bound = to_q * (to_q + 1) + report.target;

    CandidatePool pool;
    std::vector<TwoEdge> rest;
    for_each_candidate(to_q, config.mode, [&] (const TwoEdge & e) {
        if (touches_vertex(e, new_vertex))
            pool.candidates.push_back(e);
        else
            rest.push_back(e);
    });
    pool.priority = pool.candidates.size();
    std::vector<TwoEdge> new_vertex_candidates = pool.candidates;
    pool.candidates.insert(pool.candidates.end(), rest.begin(), rest.end());

    SearchConfig search;
    search.q = to_q;
    search.mode = config.mode;
    search.seed = config.seed;
    search.restarts = config.restarts;
    search.improvement_passes = config.improvement_passes;
    search.threads = config.threads;
    if (config.mode == CandidateMode::full || embedded.all_nondegenerate())
        search.warm_start = embedded;
    auto found = run_search(search, pool);

    Family best = found.best.size() >= embedded.size() ? found.best : embedded;
    report.method = "search";

    if (static_cast<int>(best.size()) < report.target && config.use_oracle) {
        SolverOptions options;
        options.stop_at = report.target - report.base_size;
        options.node_limit = config.oracle_node_limit;
        options.time_limit_seconds = config.oracle_time_limit_seconds;
        options.threads = config.threads;
        auto solved = solve_extension(embedded, new_vertex_candidates, options);
        report.oracle_status = solved.status;
        if (solved.certificate.size() > best.size()) {
            best = solved.certificate;
            report.method = "exact-oracle";
        }
    }

    report.family = best;
    report.achieved = static_cast<int>(best.size());
    report.target_met = report.achieved >= report.target;
    report.bound = to_q * (to_q + 1) + report.achieved;
    report.verified = verify(best).pass;
    return report;
}

} // namespace zlq
