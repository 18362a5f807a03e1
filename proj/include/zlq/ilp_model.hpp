#pragma once

#include <zlq/admissibility.hpp>
#include <zlq/board.hpp>
#include <zlq/family.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zlq {

/// W(e): every (x, y) with x outside e's rows and y outside e's columns,
/// returned as cells (x, y) in row-major order. For nondegenerate e the
/// five pattern cells of each witness are pairwise distinct.
auto witness_set(const TwoEdge & e, int q) -> std::vector<Cell>;

enum class ConstraintKind
{
    s_eq,
    c2_ineq,
    c3_ineq
};

enum class Sense
{
    equal,
    less_equal
};

struct Term
{
    int var = 0;
    int coef = 0;

    auto operator==(const Term &) const -> bool = default;
};

struct Constraint
{
    std::string name;
    ConstraintKind kind = ConstraintKind::s_eq;
    std::vector<Term> terms;
    Sense sense = Sense::equal;
    int rhs = 0;
};

/**
 * The 0-1 program over a candidate family.
 *
 * Variables: x_k for candidate k (index k), then o_a for available cell a
 * (index candidates + a). Occupancy symbols of 1-edge cells are the
 * constant 1 and are moved to the right-hand side. The objective is
 * maximise sum x_k, i.e. minimise -sum x_k.
 */
class IlpModel
{
public:
    auto q() const -> int { return q_; }
    auto mode() const -> CandidateMode { return mode_; }
    auto pruned() const -> bool { return prune_; }
    auto candidates() const -> const std::vector<TwoEdge> & { return candidates_; }
    auto cells() const -> const std::vector<Cell> & { return cells_; }
    auto constraints() const -> const std::vector<Constraint> & { return constraints_; }

    /// Candidates forced to 0 by constant terms (only filled when pruning).
    auto fixed_zero() const -> const std::vector<int> & { return fixed_zero_; }

    auto num_variables() const -> int { return static_cast<int>(candidates_.size() + cells_.size()); }
    auto x_var(int candidate) const -> int { return candidate; }
    auto o_var(const Cell & c) const -> int;
    auto variable_name(int var) const -> std::string;
    auto variable_index(std::string_view name) const -> std::optional<int>;
    auto count(ConstraintKind kind) const -> int;

private:
    friend auto build_model(int, CandidateMode, bool) -> IlpModel;

    int q_ = 0;
    CandidateMode mode_ = CandidateMode::full;
    bool prune_ = false;
    std::vector<TwoEdge> candidates_;
    std::vector<Cell> cells_;
    std::map<Cell, int> cell_lookup_;
    std::vector<Constraint> constraints_;
    std::vector<int> fixed_zero_;
};

auto build_model(int q, CandidateMode mode, bool prune_static) -> IlpModel;

/// Deterministic CPLEX-LP text.
auto export_lp(const IlpModel & model) -> std::string;

/// What a reader sees in an LP file; enough to round-trip export_lp().
struct LpDocument
{
    struct Row
    {
        std::string name;
        std::vector<std::pair<std::string, double>> terms;
        std::string sense;
        double rhs = 0.0;
    };

    bool maximize = true;
    std::vector<std::pair<std::string, double>> objective;
    std::vector<Row> rows;
    std::vector<std::pair<std::string, double>> fixed;
    std::vector<std::string> binaries;
};

auto parse_lp(std::string_view text) -> LpDocument;

/// Indices of constraints the 0/1 assignment violates (fixed-zero bounds
/// are reported with index -1 - candidate).
auto violated_constraints(const IlpModel & model, std::span<const int> assignment) -> std::vector<int>;

/// The 0/1 vector a family induces: x_k = [candidate k selected],
/// o_a = [some selected edge uses a]. Throws if an edge is not a candidate.
auto assignment_from_family(const IlpModel & model, const Family & f) -> std::vector<int>;

/// `name value` per line; lines starting with '#' are ignored.
auto parse_solution(std::string_view text) -> std::map<std::string, double>;

struct SolutionImport
{
    Family family;
    int objective = 0;
    std::vector<std::string> s_inconsistent;
    std::vector<std::string> violated;
    bool ilp_feasible = false;
    Verdict verdict;
    /// ILP feasibility and verifier admissibility agree.
    bool consistent = false;
};

/// Throws InputError if a model variable is missing, a name is unknown,
/// or a value is not 0/1.
auto import_solution(const IlpModel & model, const std::map<std::string, double> & values) -> SolutionImport;

} // namespace zlq
