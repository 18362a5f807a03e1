#include <zlq/errors.hpp>
#include <zlq/greedy_search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <numeric>
#include <set>
#include <thread>

namespace zlq {

namespace
{
    using Clock = std::chrono::steady_clock;

    struct Deadline
    {
        std::optional<Clock::time_point> at;

        auto passed() const -> bool { return at && Clock::now() >= *at; }
    };

    /// A family being edited, with its occupancy kept in step.
    struct Working
    {
        std::vector<TwoEdge> edges;
        std::vector<DenseEdge> dense;
        Occupancy occupancy;

        Working(std::shared_ptr<const Geometry> g, const Family & f) :
            occupancy(std::move(g))
        {
            for (auto & e : f.edges())
                add(e, to_dense(occupancy.geometry(), e));
        }

        auto add(const TwoEdge & e, const DenseEdge & d) -> void
        {
            edges.push_back(e);
            dense.push_back(d);
            occupancy.occupy(d);
        }

        auto without(std::span<const int> drop) const -> Working
        {
            Working result{occupancy.geometry_ptr(), Family{occupancy.geometry().q()}};
            for (int k = 0 ; k < static_cast<int>(edges.size()) ; ++k)
                if (std::find(drop.begin(), drop.end(), k) == drop.end())
                    result.add(edges[k], dense[k]);
            return result;
        }

        auto size() const -> int { return static_cast<int>(edges.size()); }
        auto family() const -> Family { return Family{occupancy.geometry().q(), edges}; }
    };

    struct DensePool
    {
        const CandidatePool & pool;
        std::vector<DenseEdge> dense;

        DensePool(const CandidatePool & p, const Geometry & g) :
            pool(p)
        {
            dense.reserve(p.candidates.size());
            for (auto & e : p.candidates)
                dense.push_back(to_dense(g, e));
        }

        auto make_order(Stream & stream) const -> std::vector<int>
        {
            std::vector<int> order(pool.candidates.size());
            std::iota(order.begin(), order.end(), 0);
            auto split = std::min(pool.priority, order.size());
            shuffle(std::span{order}.first(split), stream);
            shuffle(std::span{order}.subspan(split), stream);
            return order;
        }

        auto fill(Working & w, const std::vector<int> & order) const -> void
        {
            for (int k : order)
                if (w.occupancy.can_add(w.dense, dense[k]))
                    w.add(pool.candidates[k], dense[k]);
        }
    };

    auto improve(Working w, const DensePool & pool, const SearchConfig & config, Stream & stream,
            const Deadline & deadline, std::vector<int> * pass_sizes) -> Working
    {
        for (int pass = 0 ; pass < config.improvement_passes && ! deadline.passed() ; ++pass) {
            bool improved = false;

            std::vector<int> members(static_cast<std::size_t>(w.size()));
            std::iota(members.begin(), members.end(), 0);
            shuffle(std::span{members}, stream);
            for (int m : members) {
                int drop[1] = {m};
                auto trial = w.without(drop);
                pool.fill(trial, pool.make_order(stream));
                if (trial.size() > w.size()) {
                    w = std::move(trial);
                    improved = true;
                    break;
                }
            }

            if (! improved && config.delete_width >= 2 && w.size() >= 2) {
                // Sample distinct pairs without replacement; small families
                // get every pair.
                const std::uint64_t s = static_cast<std::uint64_t>(w.size());
                const std::uint64_t total = s * (s - 1) / 2;
                const std::uint64_t wanted = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(std::max(0, config.pair_samples)));
                std::vector<std::uint64_t> picks;
                if (wanted == total) {
                    picks.resize(total);
                    std::iota(picks.begin(), picks.end(), 0);
                    shuffle(std::span{picks}, stream);
                }
                else {
                    std::set<std::uint64_t> seen;
                    while (picks.size() < wanted) {
                        auto p = uniform_below(stream, total);
                        if (seen.insert(p).second)
                            picks.push_back(p);
                    }
                }
                for (auto p : picks) {
                    // p -> (i, j), i < j, in row-major order of the upper triangle
                    int i = 0;
                    std::uint64_t left = p;
                    while (left >= s - 1 - static_cast<std::uint64_t>(i)) {
                        left -= s - 1 - static_cast<std::uint64_t>(i);
                        ++i;
                    }
                    int j = i + 1 + static_cast<int>(left);
                    int drop[2] = {i, j};
                    auto trial = w.without(drop);
                    pool.fill(trial, pool.make_order(stream));
                    if (trial.size() > w.size()) {
                        w = std::move(trial);
                        improved = true;
                        break;
                    }
                    if (deadline.passed())
                        break;
                }
            }

            if (pass_sizes)
                pass_sizes->push_back(w.size());
            if (! improved)
                break;
        }
        return w;
    }

    auto check_config(const SearchConfig & config) -> void
    {
        check_q(config.q);
        if (config.restarts < 0)
            throw ParameterError("restarts must be non-negative");
        if (config.delete_width != 1 && config.delete_width != 2)
            throw ParameterError("delete width must be 1 or 2");
        if (config.improvement_passes < 0)
            throw ParameterError("improvement passes must be non-negative");
        if (config.warm_start) {
            if (config.warm_start->q() != config.q)
                throw ParameterError("warm start is for q=" + std::to_string(config.warm_start->q())
                    + ", search is for q=" + std::to_string(config.q));
            if (! verify(*config.warm_start).pass)
                throw ParameterError("warm start family is not admissible");
            if (config.mode == CandidateMode::nondegenerate_only && ! config.warm_start->all_nondegenerate())
                throw ParameterError("warm start has degenerate edges but the search is nondegenerate-only");
        }
    }
}

auto greedy_fill(const Family & start, std::span<const TwoEdge> order) -> Family
{
    auto geometry = std::make_shared<const Geometry>(start.q());
    Working w{geometry, start};
    for (auto & e : order) {
        auto d = to_dense(*geometry, e);
        if (w.occupancy.can_add(w.dense, d))
            w.add(e, d);
    }
    return w.family();
}

auto local_improve(const Family & f, const CandidatePool & pool, const SearchConfig & config, Stream & stream) -> Family
{
    auto geometry = std::make_shared<const Geometry>(f.q());
    DensePool dense_pool{pool, *geometry};
    auto result = improve(Working{geometry, f}, dense_pool, config, stream, Deadline{}, nullptr);
    return result.family();
}

auto run_search(const SearchConfig & config) -> SearchResult
{
    check_q(config.q);
    return run_search(config, CandidatePool{candidate_family(config.q, config.mode), 0});
}

auto run_search(const SearchConfig & config, const CandidatePool & pool) -> SearchResult
{
    check_config(config);
    SearchResult result;
    result.seed = config.seed;
    result.best = Family{config.q};

    Deadline deadline;
    if (config.time_limit_seconds)
        deadline.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
            std::chrono::duration<double>(std::max(0.0, *config.time_limit_seconds)));
    if (config.time_limit_seconds && *config.time_limit_seconds <= 0.0) {
        result.verified = verify(result.best).pass;
        result.bound = config.q * (config.q + 1);
        return result;
    }

    auto geometry = std::make_shared<const Geometry>(config.q);
    DensePool dense_pool{pool, *geometry};
    const Family start = config.warm_start.value_or(Family{config.q});

    std::vector<RestartRecord> records(static_cast<std::size_t>(config.restarts));
    std::vector<std::optional<Family>> finals(static_cast<std::size_t>(config.restarts));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int r = next.fetch_add(1);
            if (r >= config.restarts)
                return;
            auto & rec = records[r];
            rec.restart = r;
            if (deadline.passed()) {
                rec.completed = false;
                continue;
            }
            auto stream = derive_stream(config.seed, static_cast<std::uint64_t>(r));
            Working w{geometry, start};
            dense_pool.fill(w, dense_pool.make_order(stream));
            rec.greedy_size = w.size();
            w = improve(std::move(w), dense_pool, config, stream, deadline, &rec.pass_sizes);
            rec.final_size = w.size();
            finals[r] = w.family();
        }
    };

    int threads = std::clamp(config.threads, 1, std::max(1, config.restarts));
    if (threads == 1)
        worker();
    else {
        std::vector<std::thread> pool_threads;
        for (int t = 0 ; t < threads ; ++t)
            pool_threads.emplace_back(worker);
        for (auto & th : pool_threads)
            th.join();
    }
    result.restarts = std::move(records);

    // Rank by (size desc, restart asc); only a verified family can win.
    std::vector<int> ranking;
    for (int r = 0 ; r < config.restarts ; ++r)
        if (finals[r])
            ranking.push_back(r);
    std::stable_sort(ranking.begin(), ranking.end(), [&] (int a, int b) { return finals[a]->size() > finals[b]->size(); });
    for (int r : ranking)
        if (verify(*finals[r]).pass) {
            result.best = *finals[r];
            result.best_restart = r;
            break;
        }
    if (result.best_restart < 0 && config.warm_start)
        result.best = *config.warm_start;

    result.verified = verify(result.best).pass;
    result.bound = config.q * (config.q + 1) + static_cast<int>(result.best.size());
    return result;
}

} // namespace zlq
