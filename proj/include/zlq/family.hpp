#pragma once

#include <zlq/board.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace zlq {

/**
 * A set of 2-edges on the q-board, kept in canonical sort order.
 *
 * Construction checks that every edge lies on the board. Repeated edges
 * are kept (so that a doubled edge can be reported as an (S) violation);
 * parse_family() never produces them.
 */
class Family
{
public:
    explicit Family(int q, std::vector<TwoEdge> edges = {});

    auto q() const -> int { return q_; }
    auto edges() const -> const std::vector<TwoEdge> & { return edges_; }
    auto size() const -> std::size_t { return edges_.size(); }
    auto empty() const -> bool { return edges_.empty(); }
    auto contains(const TwoEdge & e) const -> bool;
    auto all_nondegenerate() const -> bool;

    /// Copy with e added (kept in canonical position).
    auto with(const TwoEdge & e) const -> Family;

    /// Same edges on a different board. Throws if some edge does not fit.
    auto on_board(int q) const -> Family;

    auto operator==(const Family &) const -> bool = default;

private:
    int q_;
    std::vector<TwoEdge> edges_;
};

/// Text form:
///
///     # zlq-family v1
///     q <integer>
///     edge <i1> <i2> <c1> ; <i4> <i5> <c2>
auto serialize_family(const Family & f) -> std::string;

/// Accepts halves (and row vertices) in either order. Throws ParseError
/// carrying the offending line number.
auto parse_family(std::string_view text) -> Family;

auto read_family_file(const std::filesystem::path & path) -> Family;
auto write_family_file(const std::filesystem::path & path, const Family & f) -> void;

} // namespace zlq
