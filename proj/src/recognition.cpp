#include <zlq/errors.hpp>
#include <zlq/recognition.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace zlq {

auto validate(const BipartiteGraph & g) -> void
{
    if (g.left < 0 || g.right < 0)
        throw StructuralError("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto [x, y] : g.edges) {
        if (x < 0 || x >= g.left || y < 0 || y >= g.right)
            throw StructuralError("edge (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
        if (! seen.emplace(x, y).second)
            throw StructuralError("repeated edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
}

auto parse_graph(std::string_view text) -> BipartiteGraph
{
    BipartiteGraph g;
    bool have_header = false;
    std::set<std::pair<int, int>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#') ; hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<int> numbers;
        std::size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && (line[p] == ' ' || line[p] == '\t' || line[p] == '\r'))
                ++p;
            if (p >= line.size())
                break;
            int v = 0;
            auto [ptr, ec] = std::from_chars(line.data() + p, line.data() + line.size(), v);
            if (ec != std::errc{})
                throw ParseError(line_no, "expected integer");
            p = static_cast<std::size_t>(ptr - line.data());
            if (p < line.size() && ! (line[p] == ' ' || line[p] == '\t' || line[p] == '\r'))
                throw ParseError(line_no, "expected integer");
            numbers.push_back(v);
        }
        if (numbers.empty())
            continue;
        if (numbers.size() != 2)
            throw ParseError(line_no, "expected two integers");
        if (! have_header) {
            if (numbers[0] < 0 || numbers[1] < 0)
                throw ParseError(line_no, "negative vertex count");
            g.left = numbers[0];
            g.right = numbers[1];
            have_header = true;
            continue;
        }
        auto [x, y] = std::pair{numbers[0], numbers[1]};
        if (x < 0 || x >= g.left || y < 0 || y >= g.right)
            throw ParseError(line_no, "edge out of range");
        if (! seen.insert({x, y}).second)
            throw ParseError(line_no, "repeated edge");
        g.edges.emplace_back(x, y);
    }
    if (! have_header)
        throw ParseError(line_no, "missing 'nL nR' header");
    try {
        validate(g);
    }
    catch (const StructuralError & e) {
        throw ParseError(line_no, e.what());
    }
    return g;
}

auto read_graph_file(const std::filesystem::path & path) -> BipartiteGraph
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InputError("cannot open graph file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

auto incidence_graph(int n) -> BipartiteGraph
{
    if (n < 2)
        throw ParameterError("incidence graph needs n >= 2");
    BipartiteGraph g;
    g.right = n;
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j) {
            g.edges.emplace_back(g.left, i);
            g.edges.emplace_back(g.left, j);
            ++g.left;
        }
    return g;
}

auto find_c4(const BipartiteGraph & g) -> std::optional<C4Witness>
{
    validate(g);
    std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(g.left));
    for (auto [x, y] : g.edges)
        neighbours[x].push_back(y);

    // Any two right vertices may share at most one left neighbour.
    std::map<std::pair<int, int>, int> owner;
    for (int x = 0 ; x < g.left ; ++x) {
        auto & ns = neighbours[x];
        std::sort(ns.begin(), ns.end());
        for (std::size_t a = 0 ; a < ns.size() ; ++a)
            for (std::size_t b = a + 1 ; b < ns.size() ; ++b) {
                auto [it, inserted] = owner.emplace(std::pair{ns[a], ns[b]}, x);
                if (! inserted)
                    return C4Witness{it->second, x, ns[a], ns[b]};
            }
    }
    return std::nullopt;
}

auto is_c4_free(const BipartiteGraph & g) -> bool
{
    return ! find_c4(g).has_value();
}

auto to_string(NotExtremal r) -> std::string_view
{
    switch (r) {
        case NotExtremal::size: return "size";
        case NotExtremal::edge_count: return "edge-count";
        case NotExtremal::c4: return "c4";
        case NotExtremal::degree: return "degree";
    }
    return "?";
}

namespace
{
    auto pair_index(int n, int i, int j) -> int
    {
        // pairs before row i, then offset within row i
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }
}

auto recognize_incidence(const BipartiteGraph & g) -> Recognition
{
    validate(g);
    Recognition result;
    const long n = g.right;
    const long m = n * (n - 1) / 2;

    if (n < 2 || g.left != m) {
        result.reason = NotExtremal::size;
        result.detail = "need |X| = C(|Y|,2); got |X|=" + std::to_string(g.left) + ", |Y|=" + std::to_string(n);
        return result;
    }
    if (static_cast<long>(g.edges.size()) != n * (n - 1)) {
        result.reason = NotExtremal::edge_count;
        result.detail = "need |F| = n(n-1) = " + std::to_string(n * (n - 1)) + "; got " + std::to_string(g.edges.size());
        return result;
    }
    if (auto w = find_c4(g)) {
        result.reason = NotExtremal::c4;
        result.witness = w;
        result.detail = "left " + std::to_string(w->x1) + "," + std::to_string(w->x2) + " share right "
            + std::to_string(w->y1) + "," + std::to_string(w->y2);
        return result;
    }

    std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(g.left));
    for (auto [x, y] : g.edges)
        neighbours[x].push_back(y);
    for (int x = 0 ; x < g.left ; ++x)
        if (neighbours[x].size() != 2) {
            // unreachable under the previous three hypotheses
            result.reason = NotExtremal::degree;
            result.detail = "left vertex " + std::to_string(x) + " has degree " + std::to_string(neighbours[x].size());
            return result;
        }

    Isomorphism iso;
    iso.n = static_cast<int>(n);
    iso.right_map.resize(static_cast<std::size_t>(n));
    for (int y = 0 ; y < n ; ++y)
        iso.right_map[y] = y;
    iso.left_map.resize(static_cast<std::size_t>(g.left));
    std::vector<bool> hit(static_cast<std::size_t>(m), false);
    for (int x = 0 ; x < g.left ; ++x) {
        int a = std::min(neighbours[x][0], neighbours[x][1]);
        int b = std::max(neighbours[x][0], neighbours[x][1]);
        int k = pair_index(static_cast<int>(n), a, b);
        // C4-freeness makes this injective, and sizes make it onto
        hit[k] = true;
        iso.left_map[x] = k;
    }
    if (! std::all_of(hit.begin(), hit.end(), [] (bool h) { return h; }))
        throw std::logic_error("neighbourhood map is not a bijection");
    result.isomorphism = std::move(iso);
    return result;
}

auto relabel(const BipartiteGraph & g, const Isomorphism & iso) -> BipartiteGraph
{
    BipartiteGraph result;
    result.left = g.left;
    result.right = g.right;
    for (auto [x, y] : g.edges)
        result.edges.emplace_back(iso.left_map.at(x), iso.right_map.at(y));
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

} // namespace zlq
