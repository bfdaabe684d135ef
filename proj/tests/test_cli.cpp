#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr discarded unless asked for.
Run cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string("'") + EGW_CLI_PATH + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("egw_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

nlohmann::json report(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("construct families") {
    TempDir dir;
    Run a = cli("construct neighborhood --n 3 --out " + dir / "board.json");
    CHECK(a.code == 0);
    auto ra = report(a);
    CHECK(ra["tree_nodes"] == 15);
    CHECK(ra["max_neighborhood"] == 3);
    CHECK(ra["expected"] == "2^{n-2}+2^{n-3} = 3");
    auto board = nlohmann::json::parse(slurp(dir / "board.json"));
    CHECK(board["vertices"].size() == 15);
    CHECK(board["edges"].size() == 8);
    CHECK(board.contains("pairing"));

    Run w = cli("construct regular-weak --n 4");
    CHECK(w.code == 0);
    Run wr = cli("construct --family regular-weak --n 4 --out " + dir / "w.json");
    auto rw = report(wr);
    CHECK(rw["max_degree"].get<int>() <= 8);
    CHECK(rw["degree_bound"] == "2^{n+2}/n = 16");
    CHECK(rw["s"] == "2^{n+1}/2^{floor(log n)} = 8");

    Run c = cli("construct complete-game --n 4 --out " + dir / "c.json");
    CHECK(c.code == 0);
    CHECK(report(c)["expected_edges"] == "2^{n-1} = 8");

    Run s = cli("construct regular-strong --n 64 --symbolic");
    CHECK(s.code == 2);
    auto rs = report(s);
    CHECK(rs.contains("guards"));
    CHECK_FALSE(rs["failure"].is_null());

    // Same bytes on a second run.
    cli("construct neighborhood --n 3 --out " + dir / "again.json");
    CHECK(slurp(dir / "again.json") == slurp(dir / "board.json"));

    Run t = cli("construct neighborhood --n 3 --format tree --out " + dir / "tree.json");
    CHECK(t.code == 0);
    CHECK(cli("verify " + dir / "tree.json" + " --n 3 --s 100").code == 0);
    CHECK(cli("verify " + dir / "tree.json" + " --n 3 --s 2").code == 2);

    CHECK(cli("construct bogus --n 3").code == 1);
    CHECK(cli("construct neighborhood").code == 1);
    CHECK(cli("construct neighborhood --n 2").code == 1);
}

TEST_CASE("pipeline through the CLI") {
    TempDir dir;
    REQUIRE(cli("construct neighborhood --n 3 --out " + dir / "board.json").code == 0);
    Run v = cli("verify " + dir / "board.json");
    CHECK(v.code == 0);
    CHECK(report(v)["maker_wins"] == true);
    CHECK(cli("solve " + dir / "board.json").code == 0);
    Run p = cli("play " + dir / "board.json" + " --maker pairing --breaker erdos-selfridge");
    CHECK(p.code == 0);
    CHECK(report(p)["winner"] == "Maker");

    Run c = cli("to-cnf " + dir / "board.json" + " --double --out " + dir / "out.cnf");
    CHECK(c.code == 0);
    CHECK(report(c)["variables"] == 15);
    CHECK(report(c)["clauses"] == 16);
    CHECK(report(c)["deficiency"] == 1);
    std::ifstream golden(std::string(EGW_TEST_DATA_DIR) + "/pipeline_n3.cnf");
    std::stringstream g;
    g << golden.rdbuf();
    CHECK(slurp(dir / "out.cnf") == g.str());

    Run sat = cli("sat " + dir / "out.cnf");
    CHECK(sat.code == 2);
    CHECK(report(sat)["result"] == "UNSAT");
    Run mu = cli("mu1 " + dir / "out.cnf");
    CHECK(mu.code == 0);
    Run st = cli("stats " + dir / "out.cnf");
    CHECK((st.code == 0 || st.code == 2));
    auto rst = report(st);
    CHECK(rst["max_sharing_neighborhood"] == 7);
    CHECK(rst["l_upper_row"] == "2^{k-1}+2^{k-2} = 6");

    Run back = cli("from-cnf " + dir / "out.cnf" + " --out " + dir / "back.json");
    CHECK(back.code == 0);
    CHECK(cli("verify " + dir / "back.json").code == 0);
    Run col = cli("color " + dir / "back.json");
    CHECK(col.code == 2);   // a P-2-coloring would be a satisfying assignment

    Run bs = cli("stats " + dir / "board.json");
    CHECK((bs.code == 0 || bs.code == 2));
    CHECK(report(bs)["max_neighborhood"] == 3);
}

TEST_CASE("sat, color and bounds on small inputs") {
    TempDir dir;
    {
        std::ofstream(dir / "u.cnf") << "p cnf 1 2\n1 0\n-1 0\n";
        std::ofstream(dir / "s.cnf") << "c sat\np cnf 2 1\n1 -2 0\n";
        std::ofstream(dir / "bad.cnf") << "p cnf 2 1\n1 x 0\n";
    }
    CHECK(cli("sat " + dir / "u.cnf").code == 2);
    Run s = cli("sat " + dir / "s.cnf");
    CHECK(s.code == 0);
    CHECK(report(s)["result"] == "SAT");
    Run bad = cli("sat " + dir / "bad.cnf", true);
    CHECK(bad.code == 1);
    CHECK(bad.out.find(":2") != std::string::npos);
    CHECK(cli("mu1 " + dir / "u.cnf").code == 0);
    CHECK(cli("mu1 " + dir / "s.cnf").code == 2);
    CHECK(cli("sat " + dir / "missing.cnf").code == 1);

    {
        std::ofstream(dir / "e.json") << R"({"n":3,"vertices":["a","b","c","d"],"edges":[["a","b","c"]]})";
    }
    Run c = cli("color " + dir / "e.json" + " --halving");
    CHECK(c.code == 0);
    CHECK(report(c)["verification"]["halving"] == true);

    Run b = cli("bounds --k 8");
    CHECK(b.code == 0);
    CHECK(b.out.find("floor(2^k/(e*k))") != std::string::npos);

    Run plan = cli("plan --n 64");
    CHECK(plan.code == 2);

    // Limits from the environment, overridden by flags.
    CHECK(cli("construct neighborhood --n 3 --out " + dir / "b.json").code == 0);
    CHECK(cli("solve " + dir / "b.json" + " --limit-vertices 4").code == 1);
    CHECK(cli("solve " + dir / "b.json" + " --limit-vertices 0").code == 1);
    Run env = cli("solve " + dir / "b.json", true);
    CHECK(env.code == 0);
    std::string envcmd = "EGW_LIMITS_JSON='{\"vertices\": 4}' ";
    int rc = std::system((envcmd + "'" + EGW_CLI_PATH + "' solve '" + (dir / "b.json") + "' >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(rc) == 1);

    CHECK(cli("").code == 1);
    CHECK(cli("--help").code == 0);
    CHECK(cli("nonsense").code == 1);
}
