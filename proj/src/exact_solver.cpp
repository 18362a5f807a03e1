#include <zlq/errors.hpp>
#include <zlq/exact_solver.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace zlq {

auto pairwise_conflicts(int q, std::span<const TwoEdge> candidates) -> ConflictRelation
{
    return pairwise_conflicts(Family{q}, candidates);
}

auto pairwise_conflicts(const Family & base, std::span<const TwoEdge> candidates) -> ConflictRelation
{
    auto geometry = std::make_shared<const Geometry>(base.q());
    Occupancy occ{geometry};
    std::vector<DenseEdge> placed;
    for (auto & e : base.edges()) {
        placed.push_back(to_dense(*geometry, e));
        occ.occupy(placed.back());
    }

    const int n = static_cast<int>(candidates.size());
    std::vector<DenseEdge> dense;
    dense.reserve(candidates.size());
    for (auto & e : candidates)
        dense.push_back(to_dense(*geometry, e));

    ConflictRelation rel;
    rel.conflicts.assign(static_cast<std::size_t>(n), Bitset{n});
    rel.infeasible.assign(static_cast<std::size_t>(n), false);
    for (int a = 0 ; a < n ; ++a)
        rel.infeasible[a] = ! occ.can_add(placed, dense[a]);

    for (int a = 0 ; a < n ; ++a) {
        if (rel.infeasible[a]) {
            rel.conflicts[a].set_all();
            for (int b = 0 ; b < n ; ++b)
                rel.conflicts[b].set(a);
            continue;
        }
        Occupancy with_a = occ;
        with_a.occupy(dense[a]);
        placed.push_back(dense[a]);
        for (int b = a + 1 ; b < n ; ++b) {
            if (rel.infeasible[b])
                continue;
            if (! with_a.can_add(placed, dense[b])) {
                rel.conflicts[a].set(b);
                rel.conflicts[b].set(a);
            }
        }
        placed.pop_back();
    }
    return rel;
}

auto permute(const Permutation & p, const Cell & c) -> Cell
{
    return Cell{make_row(p.at(c.row.i), p.at(c.row.j)), p.at(c.col)};
}

auto permute(const Permutation & p, const TwoEdge & e) -> TwoEdge
{
    return TwoEdge{permute(p, e.first()), permute(p, e.second())};
}

namespace
{
    auto find_root(std::vector<int> & parent, int a) -> int
    {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
}

auto candidate_orbits(int q, std::span<const TwoEdge> candidates) -> std::vector<int>
{
    Geometry g{q};
    auto key = [&] (const TwoEdge & e) {
        return static_cast<std::uint64_t>(g.cell_index(e.first())) * static_cast<std::uint64_t>(g.cell_count())
            + static_cast<std::uint64_t>(g.cell_index(e.second()));
    };
    const int n = static_cast<int>(candidates.size());
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(candidates.size());
    for (int k = 0 ; k < n ; ++k)
        index.emplace(key(candidates[k]), k);

    // S_{q+1} is generated by the transposition (0 1) and the cycle (0 1 ... q).
    Permutation swap01(static_cast<std::size_t>(q + 1));
    Permutation cycle(static_cast<std::size_t>(q + 1));
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int v = 0 ; v <= q ; ++v)
        cycle[v] = (v + 1) % (q + 1);

    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (auto * generator : {&swap01, &cycle})
        for (int k = 0 ; k < n ; ++k) {
            auto it = index.find(key(permute(*generator, candidates[k])));
            if (it == index.end())
                throw StructuralError("candidate list is not closed under vertex permutations");
            int a = find_root(parent, k);
            int b = find_root(parent, it->second);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }

    std::vector<int> label(static_cast<std::size_t>(n));
    for (int k = 0 ; k < n ; ++k)
        label[k] = find_root(parent, k);
    return label;
}

auto orbit_representatives(int q, std::span<const TwoEdge> candidates) -> std::vector<int>
{
    auto label = candidate_orbits(q, candidates);
    std::vector<int> reps;
    for (int k = 0 ; k < static_cast<int>(label.size()) ; ++k)
        if (label[k] == k)
            reps.push_back(k);
    return reps;
}

SearchSpace::SearchSpace(Family base, std::vector<TwoEdge> candidates) :
    base_(std::move(base)),
    candidates_(std::move(candidates)),
    geometry_(std::make_shared<const Geometry>(base_.q()))
{
    if (! is_admissible(base_))
        throw StructuralError("base family is not admissible");
    for (auto & e : candidates_)
        dense_.push_back(to_dense(*geometry_, e));
    for (auto & e : base_.edges())
        base_dense_.push_back(to_dense(*geometry_, e));
    conflicts_ = pairwise_conflicts(base_, candidates_);

    const int n = static_cast<int>(candidates_.size());
    root_remaining_ = Bitset{n};
    for (int k = 0 ; k < n ; ++k)
        if (! conflicts_.infeasible[k] && ! base_.contains(candidates_[k]))
            root_remaining_.set(k);
}

auto SearchSpace::root() const -> SearchNode
{
    Occupancy occ{geometry_};
    for (auto & d : base_dense_)
        occ.occupy(d);
    return SearchNode{{}, std::move(occ), root_remaining_};
}

auto SearchSpace::child(const SearchNode & node, int candidate) const -> SearchNode
{
    return child(node, candidate, node.remaining);
}

auto SearchSpace::child(const SearchNode & node, int candidate, const Bitset & allowed) const -> SearchNode
{
    if (! node.remaining.test(candidate))
        throw std::logic_error("candidate is not addable at this node");

    SearchNode result{node.chosen, node.occupancy, allowed};
    result.chosen.push_back(candidate);
    result.occupancy.occupy(dense_[candidate]);
    result.remaining &= node.remaining;
    result.remaining.subtract(conflicts_.conflicts[candidate]);
    result.remaining.reset(candidate);

    std::vector<DenseEdge> placed = base_dense_;
    for (int k : result.chosen)
        placed.push_back(dense_[k]);
    Bitset survivors = result.remaining;
    result.remaining.for_each([&] (int u) {
        if (! result.occupancy.can_add(placed, dense_[u]))
            survivors.reset(u);
    });
    result.remaining = std::move(survivors);
    return result;
}

auto SearchSpace::cover_bound(const Bitset & set) const -> int
{
    Bitset left = set;
    int classes = 0;
    while (left.any()) {
        ++classes;
        Bitset group = left;
        while (group.any()) {
            int v = group.first();
            left.reset(v);
            group.reset(v);
            group &= conflicts_.conflicts[v];
        }
    }
    return classes;
}

auto SearchSpace::upper_bound(const SearchNode & node) const -> int
{
    int extra = std::min(node.remaining.count(), node.occupancy.free_cells() / 2);
    if (extra > 0)
        extra = std::min(extra, cover_bound(node.remaining));
    return static_cast<int>(node.chosen.size()) + extra;
}

auto SearchSpace::family_of(const SearchNode & node) const -> Family
{
    auto edges = base_.edges();
    for (int k : node.chosen)
        edges.push_back(candidates_[k]);
    return Family{base_.q(), std::move(edges)};
}

auto to_string(SolverEvent::Kind k) -> std::string_view
{
    switch (k) {
        case SolverEvent::Kind::node: return "node";
        case SolverEvent::Kind::bound: return "bound";
        case SolverEvent::Kind::incumbent: return "incumbent";
        case SolverEvent::Kind::subtree: return "subtree";
    }
    return "?";
}

auto to_string(SolveStatus s) -> std::string_view
{
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::bounded_incumbent: return "bounded-incumbent";
        case SolveStatus::target_reached: return "target-reached";
    }
    return "?";
}

namespace
{
    /**
     * Depth-first branch-and-bound over one search space. First-level
     * subtrees are independent tasks. The incumbent is ranked by (size
     * desc, subtree index asc), and pruning honours that ranking, so the
     * reported certificate does not depend on how subtrees are scheduled.
     */
    class Solver
    {
    public:
        Solver(const SearchSpace & space, const SolverOptions & options) :
            space_(space),
            options_(options),
            started_(std::chrono::steady_clock::now())
        {
        }

        auto run(const std::vector<int> & starts, const std::vector<Bitset> & allowed) -> void
        {
            auto root = space_.root();
            nodes_ = 1;
            best_key_ = key(0, INT_MAX);
            if (options_.stop_at && *options_.stop_at <= 0) {
                target_hit_ = true;
                return;
            }

            emit(SolverEvent{SolverEvent::Kind::bound, 1, 0, space_.upper_bound(root), -1});

            std::atomic<int> next{0};
            auto worker = [&] {
                for (;;) {
                    int j = next.fetch_add(1);
                    if (j >= static_cast<int>(starts.size()) || stop_.load())
                        return;
                    if (! root.remaining.test(starts[j]))
                        continue;
                    auto node = space_.child(root, starts[j], allowed[j]);
                    emit(SolverEvent{SolverEvent::Kind::bound, nodes_.load(), best_size(), space_.upper_bound(node), j});
                    expand(node, j);
                    emit(SolverEvent{SolverEvent::Kind::subtree, nodes_.load(), best_size(), 0, j});
                }
            };

            int threads = std::max(1, options_.threads);
            if (threads == 1)
                worker();
            else {
                std::vector<std::thread> pool;
                for (int t = 0 ; t < threads ; ++t)
                    pool.emplace_back(worker);
                for (auto & th : pool)
                    th.join();
            }
        }

        auto best_chosen() const -> const std::vector<int> & { return best_chosen_; }
        auto best_size() const -> int { return static_cast<int>(best_key_.load() >> 32); }
        auto nodes() const -> std::uint64_t { return nodes_.load(); }
        auto budget_hit() const -> bool { return budget_hit_.load(); }
        auto target_hit() const -> bool { return target_hit_.load(); }

    private:
        static auto key(int size, int subtree) -> std::int64_t
        {
            return (static_cast<std::int64_t>(size) << 32) | static_cast<std::int64_t>(INT_MAX - subtree);
        }

        auto pruned(int bound, int subtree) const -> bool
        {
            if (options_.canonical_certificate)
                return bound < best_size();
            return key(bound, subtree) <= best_key_.load();
        }

        auto emit(const SolverEvent & event) -> void
        {
            if (! options_.on_event)
                return;
            std::lock_guard lock{log_mutex_};
            options_.on_event(event);
        }

        auto offer(const SearchNode & node, int subtree) -> void
        {
            int size = static_cast<int>(node.chosen.size());
            if (options_.canonical_certificate) {
                if (size < best_size())
                    return;
            }
            else if (key(size, subtree) <= best_key_.load())
                return;

            std::unique_lock lock{best_mutex_};
            bool better = false;
            if (options_.canonical_certificate) {
                if (size > best_size())
                    better = true;
                else if (size == best_size()) {
                    auto mine = space_.family_of(node).edges();
                    auto theirs = best_family_edges();
                    better = mine < theirs;
                }
            }
            else
                better = key(size, subtree) > best_key_.load();
            if (! better)
                return;
            best_key_ = key(size, subtree);
            best_chosen_ = node.chosen;
            lock.unlock();

            emit(SolverEvent{SolverEvent::Kind::incumbent, nodes_.load(), size, 0, subtree});
            if (options_.stop_at && size >= *options_.stop_at) {
                target_hit_ = true;
                stop_ = true;
            }
        }

        auto best_family_edges() const -> std::vector<TwoEdge>
        {
            auto edges = space_.base().edges();
            for (int k : best_chosen_)
                edges.push_back(space_.candidates()[k]);
            std::sort(edges.begin(), edges.end());
            return edges;
        }

        auto count_node() -> void
        {
            auto n = ++nodes_;
            if (options_.node_limit && n > *options_.node_limit) {
                budget_hit_ = true;
                stop_ = true;
            }
            if (options_.time_limit_seconds && (n & 1023) == 0) {
                std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started_;
                if (elapsed.count() > *options_.time_limit_seconds) {
                    budget_hit_ = true;
                    stop_ = true;
                }
            }
            if (options_.log_interval && n % options_.log_interval == 0)
                emit(SolverEvent{SolverEvent::Kind::node, n, best_size(), 0, -1});
        }

        auto expand(const SearchNode & node, int subtree) -> void
        {
            count_node();
            if (stop_.load())
                return;
            offer(node, subtree);
            if (node.remaining.none() || stop_.load())
                return;

            const int size = static_cast<int>(node.chosen.size());
            if (pruned(size + node.occupancy.free_cells() / 2, subtree))
                return;

            // Colour classes: groups of pairwise conflicting candidates.
            std::vector<int> order;
            std::vector<int> colour;
            {
                Bitset left = node.remaining;
                int c = 0;
                while (left.any()) {
                    ++c;
                    Bitset group = left;
                    while (group.any()) {
                        int v = group.first();
                        left.reset(v);
                        group.reset(v);
                        group &= space_.conflicts().conflicts[v];
                        order.push_back(v);
                        colour.push_back(c);
                    }
                }
            }

            Bitset allowed = node.remaining;
            for (int k = static_cast<int>(order.size()) - 1 ; k >= 0 ; --k) {
                if (pruned(size + colour[k], subtree))
                    return;
                int v = order[k];
                auto next = space_.child(node, v, allowed);
                expand(next, subtree);
                if (stop_.load())
                    return;
                allowed.reset(v);
            }
        }

        const SearchSpace & space_;
        const SolverOptions & options_;
        std::chrono::steady_clock::time_point started_;

        std::atomic<std::int64_t> best_key_{0};
        std::vector<int> best_chosen_;
        std::mutex best_mutex_;
        std::mutex log_mutex_;
        std::atomic<std::uint64_t> nodes_{0};
        std::atomic<bool> stop_{false};
        std::atomic<bool> budget_hit_{false};
        std::atomic<bool> target_hit_{false};
    };

    auto reorder(std::vector<TwoEdge> candidates, const Family & base, BranchOrder order) -> std::vector<TwoEdge>
    {
        if (order == BranchOrder::natural)
            return candidates;
        auto rel = pairwise_conflicts(base, candidates);
        std::vector<int> perm(candidates.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> degree(candidates.size());
        for (int k = 0 ; k < rel.size() ; ++k)
            degree[k] = rel.degree(k);
        std::stable_sort(perm.begin(), perm.end(), [&] (int a, int b) { return degree[a] > degree[b]; });
        std::vector<TwoEdge> result;
        result.reserve(candidates.size());
        for (int k : perm)
            result.push_back(candidates[k]);
        return result;
    }

    auto run_solver(const Family & base, std::vector<TwoEdge> candidates, const SolverOptions & options,
            bool symmetry) -> SolveResult
    {
        auto started = std::chrono::steady_clock::now();
        SearchSpace space{base, reorder(std::move(candidates), base, options.order)};
        const int n = static_cast<int>(space.candidates().size());

        std::vector<int> starts;
        std::vector<Bitset> allowed;
        if (symmetry) {
            // Every family is equivalent to one containing an orbit
            // representative; families meeting an earlier orbit are
            // covered by that orbit's subtree.
            auto label = candidate_orbits(base.q(), space.candidates());
            Bitset excluded{n};
            for (int k = 0 ; k < n ; ++k) {
                if (label[k] != k)
                    continue;
                Bitset ok{n};
                ok.set_all();
                ok.subtract(excluded);
                starts.push_back(k);
                allowed.push_back(std::move(ok));
                for (int m = 0 ; m < n ; ++m)
                    if (label[m] == k)
                        excluded.set(m);
            }
        }
        else {
            // Subtree j holds the families whose first candidate is j.
            for (int k = 0 ; k < n ; ++k) {
                Bitset ok{n};
                for (int m = k + 1 ; m < n ; ++m)
                    ok.set(m);
                starts.push_back(k);
                allowed.push_back(std::move(ok));
            }
        }

        Solver solver{space, options};
        solver.run(starts, allowed);

        SolveResult result;
        result.size = solver.best_size();
        auto edges = base.edges();
        for (int k : solver.best_chosen())
            edges.push_back(space.candidates()[k]);
        result.certificate = Family{base.q(), std::move(edges)};
        if (! is_admissible(result.certificate))
            throw std::logic_error("solver produced an inadmissible certificate");
        result.nodes = solver.nodes();
        result.root_bound = space.upper_bound(space.root());
        result.subtrees = static_cast<int>(starts.size());
        result.symmetry_used = symmetry;
        if (solver.target_hit())
            result.status = SolveStatus::target_reached;
        else if (solver.budget_hit())
            result.status = SolveStatus::bounded_incumbent;
        else
            result.status = SolveStatus::optimal;
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return result;
    }
}

auto solve_exact(int q, CandidateMode mode, const SolverOptions & options) -> SolveResult
{
    check_q(q);
    bool symmetry = options.symmetry && ! options.canonical_certificate;
    return run_solver(Family{q}, candidate_family(q, mode), options, symmetry);
}

auto solve_extension(const Family & base, std::vector<TwoEdge> candidates, const SolverOptions & options) -> SolveResult
{
    bool symmetry = options.symmetry && ! options.canonical_certificate && base.empty();
    return run_solver(base, std::move(candidates), options, symmetry);
}

} // namespace zlq
