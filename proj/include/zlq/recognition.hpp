#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zlq {

/// Left vertices X = {0..left-1}, right vertices Y = {0..right-1}.
struct BipartiteGraph
{
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Throws StructuralError on out-of-range or repeated edges.
auto validate(const BipartiteGraph & g) -> void;

/// Text: first line `nL nR`, then one `x y` pair per line; '#' comments.
auto parse_graph(std::string_view text) -> BipartiteGraph;
auto read_graph_file(const std::filesystem::path & path) -> BipartiteGraph;

/// Incidence graph of K_n: left vertex k is the k-th pair {i, j} of
/// {0..n-1} in lexicographic order, adjacent to i and j.
auto incidence_graph(int n) -> BipartiteGraph;

/// Left x1, x2 both adjacent to right y1, y2.
struct C4Witness
{
    int x1 = 0;
    int x2 = 0;
    int y1 = 0;
    int y2 = 0;
};

auto find_c4(const BipartiteGraph & g) -> std::optional<C4Witness>;
auto is_c4_free(const BipartiteGraph & g) -> bool;

enum class NotExtremal
{
    size,
    edge_count,
    c4,
    degree
};

auto to_string(NotExtremal r) -> std::string_view;

/// left_map[x] is the index of N(x) among the lexicographic pairs of
/// {0..n-1}; right_map[y] is the vertex y corresponds to.
struct Isomorphism
{
    int n = 0;
    std::vector<int> left_map;
    std::vector<int> right_map;
};

struct Recognition
{
    std::optional<Isomorphism> isomorphism;
    std::optional<NotExtremal> reason;
    std::string detail;
    std::optional<C4Witness> witness;
};

/**
 * For |Y| = n, |X| = C(n,2), |F| = n(n-1) and C4-free input, every left
 * degree is 2 and x -> N(x) is a bijection onto the pairs of Y. Returns
 * that bijection, or the first failing hypothesis in the order size, edge
 * count, C4, degree.
 */
auto recognize_incidence(const BipartiteGraph & g) -> Recognition;

/// Applies the maps; equals incidence_graph(n) edge for edge on success.
auto relabel(const BipartiteGraph & g, const Isomorphism & iso) -> BipartiteGraph;

} // namespace zlq
