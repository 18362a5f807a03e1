#include <zlq/errors.hpp>
#include <zlq/family.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace zlq {

Family::Family(int q, std::vector<TwoEdge> edges) :
    q_(q),
    edges_(std::move(edges))
{
    check_q(q_);
    for (auto & e : edges_)
        if (! edge_on_board(q_, e))
            throw StructuralError("edge " + format_edge(e) + " does not lie on the q=" + std::to_string(q_) + " board");
    std::sort(edges_.begin(), edges_.end());
}

auto Family::contains(const TwoEdge & e) const -> bool
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

auto Family::all_nondegenerate() const -> bool
{
    return std::all_of(edges_.begin(), edges_.end(), [] (const TwoEdge & e) { return e.is_nondegenerate(); });
}

auto Family::with(const TwoEdge & e) const -> Family
{
    auto edges = edges_;
    edges.push_back(e);
    return Family{q_, std::move(edges)};
}

auto Family::on_board(int q) const -> Family
{
    return Family{q, edges_};
}

auto serialize_family(const Family & f) -> std::string
{
    std::string out = "# zlq-family v1\nq " + std::to_string(f.q()) + "\n";
    for (auto & e : f.edges()) {
        auto & a = e.first();
        auto & b = e.second();
        out += "edge " + std::to_string(a.row.i) + " " + std::to_string(a.row.j) + " " + std::to_string(a.col)
            + " ; " + std::to_string(b.row.i) + " " + std::to_string(b.row.j) + " " + std::to_string(b.col) + "\n";
    }
    return out;
}

namespace
{
    auto split_words(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> words;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            auto start = pos;
            while (pos < line.size() && ! (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            if (pos > start)
                words.push_back(line.substr(start, pos - start));
        }
        return words;
    }

    auto parse_int(std::string_view word, int line_no, const char * what) -> int
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || ptr != word.data() + word.size())
            throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + std::string(word) + "'");
        return value;
    }
}

auto parse_family(std::string_view text) -> Family
{
    std::optional<int> q;
    std::vector<TwoEdge> edges;
    std::set<TwoEdge> seen;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#') ; hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty())
            continue;

        if (words[0] == "q") {
            if (q)
                throw ParseError(line_no, "duplicate q directive");
            if (words.size() != 2)
                throw ParseError(line_no, "expected 'q <integer>'");
            int value = parse_int(words[1], line_no, "q");
            if (value < 2 || value > max_q)
                throw ParseError(line_no, "q out of range: " + std::to_string(value));
            q = value;
        }
        else if (words[0] == "edge") {
            if (! q)
                throw ParseError(line_no, "edge before q directive");
            if (words.size() != 8 || words[4] != ";")
                throw ParseError(line_no, "expected 'edge i1 i2 c1 ; i4 i5 c2'");
            int v[6];
            const char * names[6] = {"i1", "i2", "c1", "i4", "i5", "c2"};
            for (int k = 0, w = 1 ; k < 6 ; ++k, ++w) {
                if (w == 4)
                    ++w;
                v[k] = parse_int(words[w], line_no, names[k]);
                if (v[k] < 0 || v[k] > *q)
                    throw ParseError(line_no, std::string("vertex ") + names[k] + "=" + std::to_string(v[k])
                        + " out of range 0.." + std::to_string(*q));
            }
            try {
                Cell a{make_row(v[0], v[1]), v[2]};
                Cell b{make_row(v[3], v[4]), v[5]};
                TwoEdge e{a, b};
                if (! seen.insert(e).second)
                    throw ParseError(line_no, "duplicate edge " + format_edge(e));
                edges.push_back(e);
            }
            catch (const StructuralError & err) {
                throw ParseError(line_no, err.what());
            }
        }
        else
            throw ParseError(line_no, "unknown directive '" + std::string(words[0]) + "'");
    }

    if (! q)
        throw ParseError(line_no, "missing q directive");
    return Family{*q, std::move(edges)};
}

auto read_family_file(const std::filesystem::path & path) -> Family
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InputError("cannot open family file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_family(buffer.str());
}

auto write_family_file(const std::filesystem::path & path, const Family & f) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw InputError("cannot write family file " + path.string());
    out << serialize_family(f);
}

} // namespace zlq
