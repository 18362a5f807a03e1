#include <zlq/admissibility.hpp>
#include <zlq/board.hpp>
#include <zlq/errors.hpp>
#include <zlq/exact_solver.hpp>
#include <zlq/family.hpp>
#include <zlq/fixtures.hpp>
#include <zlq/greedy_search.hpp>
#include <zlq/ilp_model.hpp>
#include <zlq/lifting.hpp>
#include <zlq/recognition.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using CellTuple = std::tuple<int, int, int>;
using EdgeTuple = std::pair<CellTuple, CellTuple>;

auto to_cell(const CellTuple & t) -> zlq::Cell
{
    return zlq::Cell{zlq::make_row(std::get<0>(t), std::get<1>(t)), std::get<2>(t)};
}

auto to_edge(const EdgeTuple & e) -> zlq::TwoEdge
{
    return zlq::TwoEdge{to_cell(e.first), to_cell(e.second)};
}

auto from_cell(const zlq::Cell & c) -> CellTuple
{
    return {c.row.i, c.row.j, c.col};
}

auto from_edge(const zlq::TwoEdge & e) -> EdgeTuple
{
    return {from_cell(e.first()), from_cell(e.second())};
}

auto make_family(int q, const std::vector<EdgeTuple> & edges) -> zlq::Family
{
    std::vector<zlq::TwoEdge> out;
    out.reserve(edges.size());
    for (auto & e : edges)
        out.push_back(to_edge(e));
    return zlq::Family{q, std::move(out)};
}

auto family_edges(const zlq::Family & f) -> std::vector<EdgeTuple>
{
    std::vector<EdgeTuple> out;
    for (auto & e : f.edges())
        out.push_back(from_edge(e));
    return out;
}

auto summary_dict(const zlq::CountingSummary & s) -> py::dict
{
    py::dict d;
    d["q"] = s.q;
    d["rows"] = s.rows;
    d["columns"] = s.columns;
    d["one_edges"] = s.one_edges;
    d["available"] = s.available;
    d["full"] = s.full;
    d["nondeg"] = s.nondegenerate;
    d["row_degenerate"] = s.row_degenerate;
    d["column_degenerate"] = s.column_degenerate;
    d["z"] = s.z;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Limited augmented Zarankiewicz numbers for incidence graphs of complete graphs";

    py::register_exception<zlq::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<zlq::InputError>(m, "InputError", PyExc_ValueError);

    py::class_<zlq::Family>(m, "Family")
        .def(py::init(&make_family), py::arg("q"), py::arg("edges") = std::vector<EdgeTuple>{},
             "Edges are ((i, j, c), (i, j, c)) pairs of available cells.")
        .def_property_readonly("q", &zlq::Family::q)
        .def_property_readonly("edges", &family_edges)
        .def("__len__", &zlq::Family::size)
        .def("__eq__", [] (const zlq::Family & a, const zlq::Family & b) { return a == b; })
        .def("all_nondegenerate", &zlq::Family::all_nondegenerate)
        .def("to_text", &zlq::serialize_family)
        .def_static("from_text", [] (const std::string & text) { return zlq::parse_family(text); })
        .def("__repr__", [] (const zlq::Family & f) {
            return "<Family q=" + std::to_string(f.q()) + " size=" + std::to_string(f.size()) + ">";
        });

    m.def("classify", [] (const EdgeTuple & e) { return std::string{zlq::to_string(zlq::classify(to_edge(e)))}; });
    m.def("candidates", [] (int q, const std::string & mode) {
        std::vector<EdgeTuple> out;
        zlq::for_each_candidate(q, zlq::parse_candidate_mode(mode), [&] (const zlq::TwoEdge & e) { out.push_back(from_edge(e)); });
        return out;
    }, py::arg("q"), py::arg("mode") = "full");
    m.def("stats", [] (int q) { return summary_dict(zlq::counting_summary(q)); }, py::arg("q"));

    m.def("verify", [] (const zlq::Family & f) {
        auto v = zlq::verify(f);
        std::vector<std::string> lines;
        for (auto & x : v.violations)
            lines.push_back(zlq::format_violation(x));
        return py::make_tuple(v.pass, lines);
    }, py::arg("family"), "Returns (passed, violation report lines).");
    m.def("is_admissible", &zlq::is_admissible, py::arg("family"));

    m.def("solve_exact", [] (int q, const std::string & mode, bool symmetry, std::optional<std::uint64_t> node_limit,
                             std::optional<double> time_limit, int threads, bool canonical) {
        zlq::SolverOptions opt;
        opt.symmetry = symmetry;
        opt.node_limit = node_limit;
        opt.time_limit_seconds = time_limit;
        opt.threads = threads;
        opt.canonical_certificate = canonical;
        zlq::SolveResult r;
        {
            py::gil_scoped_release release;
            r = zlq::solve_exact(q, zlq::parse_candidate_mode(mode), opt);
        }
        py::dict d;
        d["status"] = std::string{zlq::to_string(r.status)};
        d["size"] = r.size;
        d["zl"] = q * (q + 1) + r.size;
        d["certificate"] = r.certificate;
        d["nodes"] = r.nodes;
        d["root_bound"] = r.root_bound;
        return d;
    }, py::arg("q"), py::arg("mode") = "full", py::arg("symmetry") = false, py::arg("node_limit") = py::none(),
       py::arg("time_limit") = py::none(), py::arg("threads") = 1, py::arg("canonical_certificate") = false);

    m.def("search", [] (int q, std::uint64_t seed, int restarts, const std::string & mode,
                        std::optional<zlq::Family> warm_start, int threads) {
        zlq::SearchConfig c;
        c.q = q;
        c.seed = seed;
        c.restarts = restarts;
        c.mode = zlq::parse_candidate_mode(mode);
        c.warm_start = warm_start;
        c.threads = threads;
        zlq::SearchResult r;
        {
            py::gil_scoped_release release;
            r = zlq::run_search(c);
        }
        py::dict d;
        d["best"] = r.best;
        d["best_size"] = r.best.size();
        d["best_restart"] = r.best_restart;
        d["bound"] = r.bound;
        d["verified"] = r.verified;
        return d;
    }, py::arg("q"), py::arg("seed") = 0, py::arg("restarts") = 1, py::arg("mode") = "full",
       py::arg("warm_start") = py::none(), py::arg("threads") = 1);

    m.def("embed", &zlq::embed, py::arg("family"));
    m.def("lift", [] (const zlq::Family & f, std::uint64_t seed, int restarts, bool use_oracle, int threads) {
        zlq::LiftConfig c;
        c.seed = seed;
        c.restarts = restarts;
        c.use_oracle = use_oracle;
        c.threads = threads;
        zlq::LiftReport r;
        {
            py::gil_scoped_release release;
            r = zlq::lift_extend(f, c);
        }
        py::dict d;
        d["from_q"] = r.from_q;
        d["to_q"] = r.to_q;
        d["base_size"] = r.base_size;
        d["target"] = r.target;
        d["achieved"] = r.achieved;
        d["target_met"] = r.target_met;
        d["bound"] = r.bound;
        d["target_bound"] = r.target_bound;
        d["method"] = r.method;
        d["verified"] = r.verified;
        d["family"] = r.family;
        return d;
    }, py::arg("family"), py::arg("seed") = 1, py::arg("restarts") = 16, py::arg("use_oracle") = true,
       py::arg("threads") = 1);

    m.def("export_lp", [] (int q, const std::string & mode, bool prune) {
        return zlq::export_lp(zlq::build_model(q, zlq::parse_candidate_mode(mode), prune));
    }, py::arg("q"), py::arg("mode") = "full", py::arg("prune") = false);
    m.def("import_solution", [] (int q, const std::string & text, const std::string & mode, bool prune) {
        auto model = zlq::build_model(q, zlq::parse_candidate_mode(mode), prune);
        auto r = zlq::import_solution(model, zlq::parse_solution(text));
        py::dict d;
        d["family"] = r.family;
        d["objective"] = r.objective;
        d["ilp_feasible"] = r.ilp_feasible;
        d["admissible"] = r.verdict.pass;
        d["consistent"] = r.consistent;
        d["violated"] = r.violated;
        return d;
    }, py::arg("q"), py::arg("solution_text"), py::arg("mode") = "full", py::arg("prune") = false);

    m.def("recognize_incidence", [] (int left, int right, const std::vector<std::pair<int, int>> & edges) {
        zlq::BipartiteGraph g{left, right, edges};
        zlq::validate(g);
        auto r = zlq::recognize_incidence(g);
        py::dict d;
        if (r.isomorphism) {
            d["n"] = r.isomorphism->n;
            d["left_map"] = r.isomorphism->left_map;
            d["right_map"] = r.isomorphism->right_map;
        }
        else {
            d["reason"] = std::string{zlq::to_string(*r.reason)};
            d["detail"] = r.detail;
        }
        return d;
    }, py::arg("left"), py::arg("right"), py::arg("edges"));

    m.def("reference_family", &zlq::reference_family, py::arg("q"));
    m.def("reference_table", [] {
        py::list rows;
        for (auto & r : zlq::reference_table()) {
            py::dict d;
            d["q"] = r.q;
            d["m"] = r.m;
            d["n"] = r.n;
            d["z"] = r.z;
            d["e2"] = r.e2;
            d["zl"] = r.zl;
            d["exact"] = r.exact;
            rows.append(d);
        }
        return rows;
    });
    m.def("gap_ratio", &zlq::gap_ratio, py::arg("q"));
    m.def("format_gap_ratio", &zlq::format_gap_ratio, py::arg("q"));
    m.def("k4t_bound", &zlq::k4t_bound, py::arg("t"));
}
