#include "process.hpp"

#include <zlq/fixtures.hpp>
#include <zlq/ilp_model.hpp>
#include <zlq/recognition.hpp>

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string data_dir = ZLQ_DATA_DIR;

auto family_path(int q) -> std::string
{
    return proc::quote(data_dir + "/families/q" + std::to_string(q) + ".zlq");
}

auto write(const fs::path & p, const std::string & text) -> std::string
{
    std::ofstream out{p, std::ios::binary};
    out << text;
    return proc::quote(p.string());
}

auto slurp(const fs::path & p) -> std::string
{
    std::ifstream in{p, std::ios::binary};
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("verify exit codes")
{
    auto dir = proc::scratch_dir("cli-verify");
    for (int q = 3 ; q <= 7 ; ++q) {
        auto r = proc::run("verify " + family_path(q));
        CHECK(r.exit_code == 0);
        CHECK(r.out.rfind("pass q=" + std::to_string(q), 0) == 0);
    }

    auto bad = write(dir / "bad.zlq", "q 3\nedge 0 1 2 ; 2 3 0\n");
    auto r = proc::run("verify " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("C2 edge=0 cells=(0,1|0),(2,3|2)") != std::string::npos);

    auto j = proc::run("verify --json " + bad);
    CHECK(j.exit_code == 1);
    auto doc = json::parse(j.out);
    CHECK(doc["pass"] == false);
    CHECK(doc["violations"][0]["kind"] == "C2");

    auto broken = write(dir / "broken.zlq", "q 3\nedge 0 1 2 ; 2 3\n");
    auto err = (dir / "err.txt").string();
    auto p = proc::run("verify " + broken, err);
    CHECK(p.exit_code == 2);
    auto diag = json::parse(slurp(err));
    CHECK(diag["error"] == "parse");
    CHECK(diag["line"] == 2);

    CHECK(proc::run("verify " + proc::quote((dir / "missing.zlq").string())).exit_code == 2);
    fs::remove_all(dir);
}

TEST_CASE("solve-exact")
{
    auto dir = proc::scratch_dir("cli-solve");
    auto cert = dir / "cert.zlq";
    auto log = dir / "log.jsonl";
    auto r = proc::run("solve-exact --q 3 --out " + proc::quote(cert.string()) + " --log " + proc::quote(log.string()));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "optimal |E2|=2, z_L(6,4)=14\n");
    CHECK(proc::run("verify " + proc::quote(cert.string())).exit_code == 0);

    std::ifstream in{log};
    std::string line;
    std::set<std::string> kinds;
    while (std::getline(in, line))
        kinds.insert(json::parse(line)["event"].get<std::string>());
    CHECK(kinds.count("bound"));
    CHECK(kinds.count("incumbent"));

    auto four = proc::run("--quiet solve-exact --q 4 --symmetry --json");
    CHECK(four.exit_code == 0);
    auto doc = json::parse(four.out);
    CHECK(doc["status"] == "optimal");
    CHECK(doc["size"] == 6);
    CHECK(doc["zl"] == 26);

    auto limited = proc::run("solve-exact --q 4 --node-limit 5");
    CHECK(limited.exit_code == 1);
    CHECK(limited.out.rfind("bounded", 0) == 0);

    CHECK(proc::run("solve-exact --q 3 --mode half").exit_code == 2);
    CHECK(proc::run("solve-exact").exit_code == 2);
    fs::remove_all(dir);
}

TEST_CASE("stats, families and ratios")
{
    auto s = json::parse(proc::run("stats --q 5").out);
    CHECK(s["available"] == 60);
    CHECK(s["full"] == 1770);
    CHECK(s["nondeg"] == 1410);
    CHECK(proc::run("stats --q 5").out.find("\"full\":1770,\"nondeg\":1410") != std::string::npos);

    auto f = proc::run("families");
    CHECK(f.exit_code == 0);
    auto rows = json::parse(f.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[4]["size"] == 32);
    CHECK(rows[4]["bound"] == 88);

    CHECK(proc::run("families --q 6 --emit").out == zlq::reference_family_text(6));
    CHECK(proc::run("families --emit").exit_code == 2);
    CHECK(proc::run("families --q 9").exit_code == 2);

    auto ratios = json::parse(proc::run("ratios --json").out);
    CHECK(ratios["table"][1]["gap"] == "30.0%");
    CHECK(ratios["table"][4]["gap"] == ">=57.1%");
    CHECK(ratios["k4t"][1]["bound"] == 68);
    CHECK(proc::run("ratios").out.find(">=52.4%") != std::string::npos);
}

TEST_CASE("search output is byte-identical across runs and thread counts")
{
    auto dir = proc::scratch_dir("cli-search");
    std::string args = "search --q 5 --seed 9 --restarts 4 --out ";
    auto a = proc::run("--threads 1 " + args + proc::quote((dir / "a.zlq").string()));
    auto b = proc::run("--threads 1 " + args + proc::quote((dir / "b.zlq").string()));
    auto c = proc::run("--threads 4 " + args + proc::quote((dir / "c.zlq").string()));
    auto d = proc::run(args + proc::quote((dir / "d.zlq").string()), {}, "ZLQ_THREADS=3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out == d.out);
    CHECK(slurp(dir / "a.zlq") == slurp(dir / "b.zlq"));
    CHECK(slurp(dir / "a.zlq") == slurp(dir / "c.zlq"));
    CHECK(slurp(dir / "a.zlq") == slurp(dir / "d.zlq"));
    auto doc = json::parse(a.out);
    CHECK(doc["verified"] == true);
    CHECK(doc["bound"] == 30 + doc["best_size"].get<int>());

    auto warm = json::parse(proc::run("search --q 6 --seed 1 --restarts 1 --warm-start " + family_path(6)).out);
    CHECK(warm["best_size"].get<int>() >= 22);
    fs::remove_all(dir);
}

TEST_CASE("lift")
{
    auto dir = proc::scratch_dir("cli-lift");
    auto out = dir / "lifted.zlq";
    auto r = proc::run("lift --input " + family_path(5) + " --out " + proc::quote(out.string()));
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["from_q"] == 5);
    CHECK(doc["to_q"] == 6);
    CHECK(doc["base_size"] == 13);
    CHECK(doc["target"] == 15);
    CHECK(doc["target_met"] == true);
    CHECK(doc["bound"].get<int>() >= 57);
    CHECK(proc::run("verify " + proc::quote(out.string())).exit_code == 0);
    fs::remove_all(dir);
}

TEST_CASE("export-ilp and import-solution")
{
    auto dir = proc::scratch_dir("cli-ilp");
    auto lp = dir / "m.lp";
    auto r = proc::run("export-ilp --q 3 --out " + proc::quote(lp.string()));
    CHECK(r.exit_code == 0);
    auto summary = json::parse(r.out);
    CHECK(summary["candidates"] == 66);
    CHECK(summary["constraints"]["c3"] == 588);
    auto model = zlq::build_model(3, zlq::CandidateMode::full, false);
    CHECK(slurp(lp) == zlq::export_lp(model));
    CHECK(proc::run("export-ilp --q 3").out == zlq::export_lp(model));

    auto x = zlq::assignment_from_family(model, zlq::reference_family(3));
    std::string sol = "# solver: test\n";
    for (int v = 0 ; v < model.num_variables() ; ++v)
        sol += model.variable_name(v) + " " + std::to_string(x[v]) + "\n";
    auto sol_path = write(dir / "sol.txt", sol);
    auto imp = proc::run("import-solution --model-q 3 --solution " + sol_path);
    CHECK(imp.exit_code == 0);
    auto doc = json::parse(imp.out);
    CHECK(doc["objective"] == 2);
    CHECK(doc["consistent"] == true);
    CHECK(doc["admissible"] == true);

    auto truncated = write(dir / "short.txt", "x_0 1\n");
    CHECK(proc::run("import-solution --model-q 3 --solution " + truncated).exit_code == 2);
    fs::remove_all(dir);
}

TEST_CASE("recognize")
{
    auto dir = proc::scratch_dir("cli-recognize");
    auto g = zlq::incidence_graph(5);
    std::string text = std::to_string(g.left) + " " + std::to_string(g.right) + "\n";
    for (auto [x, y] : g.edges)
        text += std::to_string(x) + " " + std::to_string(y) + "\n";
    auto r = proc::run("recognize --graph " + write(dir / "k5.txt", text));
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["n"] == 5);

    auto k22 = proc::run("recognize --graph " + write(dir / "k22.txt", "2 2\n0 0\n0 1\n1 0\n1 1\n"));
    CHECK(k22.exit_code == 1);
    CHECK(json::parse(k22.out)["reason"] == "size");
    fs::remove_all(dir);
}

TEST_CASE("usage errors")
{
    CHECK(proc::run("").exit_code == 2);
    CHECK(proc::run("frobnicate").exit_code == 2);
    CHECK(proc::run("--threads 0 stats --q 3").exit_code == 2);
    CHECK(proc::run("stats --q 1").exit_code == 2);
    CHECK(proc::run("--help").exit_code == 0);
}

TEST_CASE("repro")
{
    auto r = proc::run("repro");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS: 0 failure(s)") != std::string::npos);
    CHECK(r.out.find("FAIL ") == std::string::npos);
}
