#include <zlq/errors.hpp>
#include <zlq/ilp_model.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace zlq {

auto witness_set(const TwoEdge & e, int q) -> std::vector<Cell>
{
    if (! edge_on_board(q, e))
        throw StructuralError("edge " + format_edge(e) + " does not lie on the q=" + std::to_string(q) + " board");
    const Row & r1 = e.first().row;
    const Row & r2 = e.second().row;
    const int c1 = e.first().col;
    const int c2 = e.second().col;

    std::vector<Cell> result;
    for (auto & x : rows(q)) {
        if (x == r1 || x == r2)
            continue;
        for (int y = 0 ; y <= q ; ++y)
            if (y != c1 && y != c2)
                result.push_back(Cell{x, y});
    }
    return result;
}

auto IlpModel::o_var(const Cell & c) const -> int
{
    auto it = cell_lookup_.find(c);
    if (it == cell_lookup_.end())
        throw StructuralError("cell " + format_cell(c) + " has no occupancy variable");
    return static_cast<int>(candidates_.size()) + it->second;
}

auto IlpModel::variable_name(int var) const -> std::string
{
    const int n = static_cast<int>(candidates_.size());
    if (var < n)
        return "x_" + std::to_string(var);
    auto & c = cells_.at(static_cast<std::size_t>(var - n));
    return "o_" + std::to_string(c.row.i) + "_" + std::to_string(c.row.j) + "_" + std::to_string(c.col);
}

auto IlpModel::variable_index(std::string_view name) const -> std::optional<int>
{
    auto number = [] (std::string_view s) -> std::optional<int> {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            return std::nullopt;
        return v;
    };

    if (name.starts_with("x_")) {
        auto k = number(name.substr(2));
        if (k && *k >= 0 && *k < static_cast<int>(candidates_.size()))
            return *k;
        return std::nullopt;
    }
    if (name.starts_with("o_")) {
        auto rest = name.substr(2);
        int parts[3];
        for (int p = 0 ; p < 3 ; ++p) {
            auto cut = p < 2 ? rest.find('_') : rest.size();
            if (cut == std::string_view::npos)
                return std::nullopt;
            auto v = number(rest.substr(0, cut));
            if (! v)
                return std::nullopt;
            parts[p] = *v;
            rest = p < 2 ? rest.substr(cut + 1) : std::string_view{};
        }
        if (parts[0] >= parts[1])
            return std::nullopt;
        auto it = cell_lookup_.find(Cell{Row{parts[0], parts[1]}, parts[2]});
        if (it == cell_lookup_.end())
            return std::nullopt;
        return static_cast<int>(candidates_.size()) + it->second;
    }
    return std::nullopt;
}

auto IlpModel::count(ConstraintKind kind) const -> int
{
    return static_cast<int>(std::count_if(constraints_.begin(), constraints_.end(),
        [&] (const Constraint & c) { return c.kind == kind; }));
}

namespace
{
    /// Accumulates a sum of ō symbols: 1-edge cells fold into a constant,
    /// available cells become o-variable terms (repeated cells add up).
    struct OccupancySum
    {
        const IlpModel & model;
        std::vector<Term> terms;
        int constant = 0;

        auto add(const Cell & c) -> void
        {
            if (c.is_one_edge()) {
                ++constant;
                return;
            }
            int var = model.o_var(c);
            for (auto & t : terms)
                if (t.var == var) {
                    ++t.coef;
                    return;
                }
            terms.push_back(Term{var, 1});
        }
    };
}

auto build_model(int q, CandidateMode mode, bool prune_static) -> IlpModel
{
    IlpModel model;
    model.q_ = q;
    model.mode_ = mode;
    model.prune_ = prune_static;
    model.candidates_ = candidate_family(q, mode);
    model.cells_ = available_cells(q);
    for (int a = 0 ; a < static_cast<int>(model.cells_.size()) ; ++a)
        model.cell_lookup_.emplace(model.cells_[a], a);

    const int n = static_cast<int>(model.candidates_.size());

    // (ILP-S): o_a - sum_e M_{a,e} x_e = 0
    std::vector<std::vector<int>> users(model.cells_.size());
    for (int k = 0 ; k < n ; ++k) {
        users[model.cell_lookup_.at(model.candidates_[k].first())].push_back(k);
        users[model.cell_lookup_.at(model.candidates_[k].second())].push_back(k);
    }
    for (int a = 0 ; a < static_cast<int>(model.cells_.size()) ; ++a) {
        auto & c = model.cells_[a];
        Constraint row;
        row.name = "s_" + std::to_string(c.row.i) + "_" + std::to_string(c.row.j) + "_" + std::to_string(c.col);
        row.kind = ConstraintKind::s_eq;
        row.sense = Sense::equal;
        row.rhs = 0;
        row.terms.push_back(Term{n + a, 1});
        for (int k : users[a])
            row.terms.push_back(Term{k, -1});
        model.constraints_.push_back(std::move(row));
    }

    for (int k = 0 ; k < n ; ++k) {
        auto & e = model.candidates_[k];
        const Row & r1 = e.first().row;
        const Row & r2 = e.second().row;
        const int c1 = e.first().col;
        const int c2 = e.second().col;

        std::vector<Constraint> rows_for_e;
        bool forced_zero = false;

        // (ILP-C2): x_e + ō(r1,c2) + ō(r2,c1) <= 2
        if (e.is_nondegenerate()) {
            OccupancySum sum{model, {}, 0};
            sum.add(Cell{r1, c2});
            sum.add(Cell{r2, c1});
            Constraint row;
            row.name = "c2_" + std::to_string(k);
            row.kind = ConstraintKind::c2_ineq;
            row.sense = Sense::less_equal;
            row.rhs = 2 - sum.constant;
            row.terms.push_back(Term{k, 1});
            row.terms.insert(row.terms.end(), sum.terms.begin(), sum.terms.end());
            forced_zero |= sum.terms.empty() && row.rhs <= 0;
            rows_for_e.push_back(std::move(row));
        }

        // (ILP-C3): x_e + five ō terms <= 5, for each (x,y) in W(e)
        auto witnesses = witness_set(e, q);
        for (int w = 0 ; w < static_cast<int>(witnesses.size()) ; ++w) {
            const Row & x = witnesses[w].row;
            const int y = witnesses[w].col;
            OccupancySum sum{model, {}, 0};
            sum.add(Cell{x, y});
            sum.add(Cell{x, c1});
            sum.add(Cell{x, c2});
            sum.add(Cell{r1, y});
            sum.add(Cell{r2, y});
            Constraint row;
            row.name = "c3_" + std::to_string(k) + "_" + std::to_string(w);
            row.kind = ConstraintKind::c3_ineq;
            row.sense = Sense::less_equal;
            row.rhs = 5 - sum.constant;
            row.terms.push_back(Term{k, 1});
            row.terms.insert(row.terms.end(), sum.terms.begin(), sum.terms.end());
            forced_zero |= sum.terms.empty() && row.rhs <= 0;
            rows_for_e.push_back(std::move(row));
        }

        if (prune_static && forced_zero) {
            model.fixed_zero_.push_back(k);
            continue;
        }
        for (auto & row : rows_for_e)
            model.constraints_.push_back(std::move(row));
    }
    return model;
}

namespace
{
    auto append_terms(std::string & out, const IlpModel & model, const std::vector<Term> & terms) -> void
    {
        int on_line = 0;
        for (std::size_t t = 0 ; t < terms.size() ; ++t) {
            auto & term = terms[t];
            if (on_line == 8) {
                out += "\n   ";
                on_line = 0;
            }
            if (t == 0)
                out += term.coef < 0 ? "- " : "";
            else
                out += term.coef < 0 ? " - " : " + ";
            int magnitude = std::abs(term.coef);
            if (magnitude != 1)
                out += std::to_string(magnitude) + " ";
            out += model.variable_name(term.var);
            ++on_line;
        }
    }
}

auto export_lp(const IlpModel & model) -> std::string
{
    std::string out;
    out += "\\ zlq 0-1 model q=" + std::to_string(model.q()) + " mode=" + std::string(to_string(model.mode()))
        + " prune=" + (model.pruned() ? "1" : "0") + "\n";
    out += "Maximize\n obj: ";
    std::vector<Term> objective;
    for (int k = 0 ; k < static_cast<int>(model.candidates().size()) ; ++k)
        objective.push_back(Term{k, 1});
    append_terms(out, model, objective);
    out += "\nSubject To\n";
    for (auto & row : model.constraints()) {
        out += " " + row.name + ": ";
        append_terms(out, model, row.terms);
        out += row.sense == Sense::equal ? " = " : " <= ";
        out += std::to_string(row.rhs) + "\n";
    }
    if (! model.fixed_zero().empty()) {
        out += "Bounds\n";
        for (int k : model.fixed_zero())
            out += " " + model.variable_name(k) + " = 0\n";
    }
    out += "Binary\n";
    for (int v = 0 ; v < model.num_variables() ; ++v)
        out += " " + model.variable_name(v) + "\n";
    out += "End\n";
    return out;
}

namespace
{
    auto lower(std::string_view s) -> std::string
    {
        std::string r(s);
        for (auto & ch : r)
            ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return r;
    }

    auto tokenize(std::string_view text) -> std::vector<std::string>
    {
        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < text.size()) {
            char ch = text[i];
            if (ch == '\\') {
                while (i < text.size() && text[i] != '\n')
                    ++i;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                if (ch == '\n')
                    tokens.emplace_back("\n");
                ++i;
                continue;
            }
            if (ch == '+' || ch == '-') {
                tokens.emplace_back(1, ch);
                ++i;
                continue;
            }
            if (ch == '<' || ch == '>' || ch == '=') {
                std::string op(1, ch);
                ++i;
                if (i < text.size() && (text[i] == '=' || text[i] == '<' || text[i] == '>'))
                    op += text[i++];
                tokens.push_back(op);
                continue;
            }
            auto start = i;
            while (i < text.size() && ! std::isspace(static_cast<unsigned char>(text[i]))
                    && text[i] != '+' && text[i] != '-' && text[i] != '<' && text[i] != '>' && text[i] != '=')
                ++i;
            tokens.emplace_back(text.substr(start, i - start));
        }
        return tokens;
    }

    auto is_number(const std::string & s) -> bool
    {
        if (s.empty())
            return false;
        char * end = nullptr;
        std::strtod(s.c_str(), &end);
        return end == s.c_str() + s.size();
    }
}

auto parse_lp(std::string_view text) -> LpDocument
{
    enum class Section { none, objective, constraints, bounds, binary, done };
    LpDocument doc;
    auto tokens = tokenize(text);

    Section section = Section::none;
    std::size_t i = 0;

    auto peek_keyword = [&] () -> std::optional<std::pair<Section, std::size_t>> {
        auto t = lower(tokens[i]);
        if (t == "maximize" || t == "maximise" || t == "max") {
            doc.maximize = true;
            return std::pair{Section::objective, std::size_t{1}};
        }
        if (t == "minimize" || t == "minimise" || t == "min") {
            doc.maximize = false;
            return std::pair{Section::objective, std::size_t{1}};
        }
        if ((t == "subject" || t == "such") && i + 1 < tokens.size() && lower(tokens[i + 1]) == "to")
            return std::pair{Section::constraints, std::size_t{2}};
        if (t == "st" || t == "s.t.")
            return std::pair{Section::constraints, std::size_t{1}};
        if (t == "bounds")
            return std::pair{Section::bounds, std::size_t{1}};
        if (t == "binary" || t == "binaries" || t == "bin")
            return std::pair{Section::binary, std::size_t{1}};
        if (t == "end")
            return std::pair{Section::done, std::size_t{1}};
        return std::nullopt;
    };

    // Parses "[name:] [+-] [coef] var ..." up to a relational operator or
    // the next section keyword.
    auto parse_linear = [&] (std::vector<std::pair<std::string, double>> & terms) {
        double sign = 1.0;
        double coef = 1.0;
        bool have_coef = false;
        while (i < tokens.size()) {
            auto & t = tokens[i];
            if (t == "\n") {
                ++i;
                continue;
            }
            if (t == "<" || t == "<=" || t == "=<" || t == ">" || t == ">=" || t == "=>" || t == "=")
                return;
            if (peek_keyword())
                return;
            if (t == "+") {
                sign = 1.0;
            }
            else if (t == "-") {
                sign = -1.0;
            }
            else if (is_number(t)) {
                coef = std::strtod(t.c_str(), nullptr);
                have_coef = true;
            }
            else if (t.back() == ':') {
                return;
            }
            else {
                terms.emplace_back(t, sign * (have_coef ? coef : 1.0));
                sign = 1.0;
                coef = 1.0;
                have_coef = false;
            }
            ++i;
        }
    };

    while (i < tokens.size() && section != Section::done) {
        if (tokens[i] == "\n") {
            ++i;
            continue;
        }
        if (auto kw = peek_keyword()) {
            section = kw->first;
            i += kw->second;
            continue;
        }

        switch (section) {
            case Section::objective: {
                if (tokens[i].back() == ':')
                    ++i;
                parse_linear(doc.objective);
                break;
            }
            case Section::constraints: {
                LpDocument::Row row;
                if (tokens[i].back() == ':') {
                    row.name = tokens[i].substr(0, tokens[i].size() - 1);
                    ++i;
                }
                parse_linear(row.terms);
                if (i >= tokens.size())
                    throw InputError("LP constraint '" + row.name + "' has no relational operator");
                row.sense = tokens[i++];
                double sign = 1.0;
                if (i < tokens.size() && (tokens[i] == "-" || tokens[i] == "+"))
                    sign = tokens[i++] == "-" ? -1.0 : 1.0;
                if (i >= tokens.size() || ! is_number(tokens[i]))
                    throw InputError("LP constraint '" + row.name + "' has no right-hand side");
                row.rhs = sign * std::strtod(tokens[i++].c_str(), nullptr);
                doc.rows.push_back(std::move(row));
                break;
            }
            case Section::bounds: {
                std::string name = tokens[i++];
                if (i + 1 < tokens.size() && tokens[i] == "=" && is_number(tokens[i + 1])) {
                    doc.fixed.emplace_back(name, std::strtod(tokens[i + 1].c_str(), nullptr));
                    i += 2;
                }
                else
                    throw InputError("unsupported LP bound for '" + name + "'");
                break;
            }
            case Section::binary:
                doc.binaries.push_back(tokens[i++]);
                break;
            case Section::none:
            case Section::done:
                throw InputError("LP text outside any section: '" + tokens[i] + "'");
        }
    }
    return doc;
}

auto violated_constraints(const IlpModel & model, std::span<const int> assignment) -> std::vector<int>
{
    if (static_cast<int>(assignment.size()) != model.num_variables())
        throw InputError("assignment has " + std::to_string(assignment.size()) + " entries, model has "
            + std::to_string(model.num_variables()) + " variables");

    std::vector<int> violated;
    auto & rows = model.constraints();
    for (int r = 0 ; r < static_cast<int>(rows.size()) ; ++r) {
        long lhs = 0;
        for (auto & t : rows[r].terms)
            lhs += static_cast<long>(t.coef) * assignment[t.var];
        bool ok = rows[r].sense == Sense::equal ? lhs == rows[r].rhs : lhs <= rows[r].rhs;
        if (! ok)
            violated.push_back(r);
    }
    for (int k : model.fixed_zero())
        if (assignment[k] != 0)
            violated.push_back(-1 - k);
    return violated;
}

auto assignment_from_family(const IlpModel & model, const Family & f) -> std::vector<int>
{
    if (f.q() != model.q())
        throw StructuralError("family q=" + std::to_string(f.q()) + " does not match model q=" + std::to_string(model.q()));
    std::vector<int> assignment(static_cast<std::size_t>(model.num_variables()), 0);
    auto & cands = model.candidates();
    for (auto & e : f.edges()) {
        auto it = std::lower_bound(cands.begin(), cands.end(), e);
        if (it == cands.end() || *it != e)
            throw StructuralError("edge " + format_edge(e) + " is not a candidate of the model");
        assignment[static_cast<std::size_t>(it - cands.begin())] = 1;
        assignment[model.o_var(e.first())] = 1;
        assignment[model.o_var(e.second())] = 1;
    }
    return assignment;
}

auto parse_solution(std::string_view text) -> std::map<std::string, double>
{
    std::map<std::string, double> values;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::string name;
        std::string value;
        std::string extra;
        {
            std::size_t p = first;
            auto word = [&] (std::string & out) {
                while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p])))
                    ++p;
                auto s = p;
                while (p < line.size() && ! std::isspace(static_cast<unsigned char>(line[p])))
                    ++p;
                out = line.substr(s, p - s);
            };
            word(name);
            word(value);
            word(extra);
        }
        if (value.empty() || ! extra.empty() || ! is_number(value))
            throw ParseError(line_no, "expected '<name> <value>'");
        if (! values.emplace(name, std::strtod(value.c_str(), nullptr)).second)
            throw ParseError(line_no, "duplicate variable '" + name + "'");
    }
    return values;
}

auto import_solution(const IlpModel & model, const std::map<std::string, double> & values) -> SolutionImport
{
    std::vector<int> assignment(static_cast<std::size_t>(model.num_variables()), -1);
    for (auto & [name, value] : values) {
        auto var = model.variable_index(name);
        if (! var)
            throw InputError("unknown variable '" + name + "'");
        double rounded = std::round(value);
        if (std::abs(value - rounded) > 1e-6 || (rounded != 0.0 && rounded != 1.0))
            throw InputError("variable '" + name + "' has non-binary value " + std::to_string(value));
        assignment[*var] = static_cast<int>(rounded);
    }
    for (int v = 0 ; v < model.num_variables() ; ++v)
        if (assignment[v] < 0)
            throw InputError("assignment is missing variable '" + model.variable_name(v) + "'");

    std::vector<TwoEdge> chosen;
    for (int k = 0 ; k < static_cast<int>(model.candidates().size()) ; ++k)
        if (assignment[k])
            chosen.push_back(model.candidates()[k]);

    SolutionImport result{Family{model.q(), std::move(chosen)}, 0, {}, {}, false, {}, false};
    result.objective = static_cast<int>(result.family.size());
    for (int r : violated_constraints(model, assignment)) {
        if (r < 0) {
            result.violated.push_back("bound:" + model.variable_name(-1 - r));
            continue;
        }
        auto & row = model.constraints()[r];
        result.violated.push_back(row.name);
        if (row.kind == ConstraintKind::s_eq)
            result.s_inconsistent.push_back(row.name);
    }
    result.ilp_feasible = result.violated.empty();
    result.verdict = verify(result.family);
    result.consistent = result.ilp_feasible == result.verdict.pass;
    return result;
}

} // namespace zlq
