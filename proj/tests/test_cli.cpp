#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "msst/json_io.hpp"

using namespace msst;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("msst_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    std::string cmd = std::string(MSST_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    json j;
    in >> j;
    return j;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("gen writes descriptors and edge lists") {
    TempDir tmp;
    REQUIRE(run("gen --spec K4xK5 --out " + tmp.file("g.json")) == 0);
    json g = read_json(tmp.file("g.json"));
    CHECK(g["factors"].size() == 2);
    CHECK(g["factors"][0]["kind"] == "complete");
    CHECK(product_graph_from_json(g).vertex_count() == 20);

    REQUIRE(run("gen --family grid --dims 3,4 --out " + tmp.file("p.json")) == 0);
    CHECK(read_json(tmp.file("p.json"))["factors"][0]["kind"] == "path");

    REQUIRE(run("gen --spec K2xK3 --edge-list --out " + tmp.file("e.json")) == 0);
    json e = read_json(tmp.file("e.json"));
    CHECK(e["n"] == 6);
    CHECK(e["edges"].size() == 9);
}

TEST_CASE("gen/construct/eval round trip reproduces the closed form") {
    TempDir tmp;
    REQUIRE(run("gen --family hamming --dims 4,5 --out " + tmp.file("g.json")) == 0);
    REQUIRE(run("construct --family hamming --dims 4,5 --out " + tmp.file("t.json")) == 0);
    json t = read_json(tmp.file("t.json"));
    CHECK(t["predicted"] == 4);
    CHECK(t["edges"].size() == 19);
    CHECK(t["dimension_order"] == json::array({0, 1}));

    REQUIRE(run("eval --graph " + tmp.file("g.json") + " --tree " + tmp.file("t.json") +
                " --out " + tmp.file("report.json")) == 0);
    json report = read_json(tmp.file("report.json"));
    CHECK(report["stretch"]["value"] == 4);
    CHECK(report["diameter"] == 4);

    // The construct output embeds the (sorted) host graph; it must evaluate
    // identically.
    std::ofstream(tmp.file("embedded.json")) << t["graph"].dump();
    REQUIRE(run("eval --graph " + tmp.file("embedded.json") + " --tree " + tmp.file("t.json") +
                " --out " + tmp.file("report2.json")) == 0);
    CHECK(read_json(tmp.file("report2.json"))["stretch"]["value"] == 4);
}

TEST_CASE("eval matches the C_4 example") {
    TempDir tmp;
    REQUIRE(run("gen --spec K2xK2 --out " + tmp.file("c4.json")) == 0);
    std::ofstream(tmp.file("path.json")) << R"({"root":0,"edges":[[0,1],[1,3],[2,3]]})";
    REQUIRE(run("eval --graph " + tmp.file("c4.json") + " --tree " + tmp.file("path.json") +
                " --out " + tmp.file("r.json")) == 0);
    json r = read_json(tmp.file("r.json"));
    CHECK(r["stretch"]["value"] == 3);
    CHECK(r["congestion"]["value"] == 2);
    CHECK(r["diameter"] == 3);
}

TEST_CASE("exact solves descriptors, edge lists, and k-spanner queries") {
    TempDir tmp;
    REQUIRE(run("exact --spec K2xK3 --out " + tmp.file("s.json")) == 0);
    json s = read_json(tmp.file("s.json"));
    CHECK(s["optimum"] == 3);
    CHECK(s["exhausted"] == true);

    REQUIRE(run("gen --spec P2xP3 --edge-list --out " + tmp.file("e.json")) == 0);
    REQUIRE(run("exact --graph " + tmp.file("e.json") + " --out " + tmp.file("s2.json")) == 0);
    CHECK(read_json(tmp.file("s2.json"))["optimum"] == 3);

    REQUIRE(run("exact --spec K2xK2 --k 3 --out " + tmp.file("yes.json")) == 0);
    json yes = read_json(tmp.file("yes.json"));
    CHECK(yes["answer"] == "yes");
    CHECK(yes.contains("witness"));
    REQUIRE(run("exact --spec K2xK2 --k 2 --out " + tmp.file("no.json")) == 0);
    CHECK(read_json(tmp.file("no.json"))["answer"] == "no");

    REQUIRE(run("exact --spec K3xK3 --jobs 4 --out " + tmp.file("par.json")) == 0);
    CHECK(read_json(tmp.file("par.json"))["optimum"] == 4);
}

TEST_CASE("verify emits and checks certificates") {
    TempDir tmp;
    REQUIRE(run("construct --family hamming --dims 2,2,2 --out " + tmp.file("t.json")) == 0);
    REQUIRE(run("verify --spec K2xK2xK2 --tree " + tmp.file("t.json") + " --out " +
                tmp.file("cert.json")) == 0);
    json cert = read_json(tmp.file("cert.json"));
    CHECK(cert["bound"] == 5);
    CHECK(cert["detour_length"] >= 5);

    REQUIRE(run("verify --spec K2xK2xK2 --tree " + tmp.file("t.json") + " --cert " +
                tmp.file("cert.json") + " --out " + tmp.file("check.json")) == 0);
    CHECK(read_json(tmp.file("check.json"))["ok"] == true);

    cert["detour_length"] = 99;
    std::ofstream(tmp.file("bad.json")) << cert.dump();
    REQUIRE(run("verify --spec K2xK2xK2 --tree " + tmp.file("t.json") + " --cert " +
                tmp.file("bad.json") + " --out " + tmp.file("check2.json")) == 0);
    json check2 = read_json(tmp.file("check2.json"));
    CHECK(check2["ok"] == false);
    CHECK(check2["reason"] == "detour mismatch");

    REQUIRE(run("verify --spec K3xK3 --random 25 --seed 7 --out " + tmp.file("sweep.json")) == 0);
    json sweep = read_json(tmp.file("sweep.json"));
    CHECK(sweep["all_certificates_valid"] == true);
    CHECK(sweep["min_detour_length"] >= 4);
    CHECK(sweep["bound"] == 4);

    REQUIRE(run("verify --spec P3xP4 --random 5 --seed 3 --duality --out " +
                tmp.file("dual.json")) == 0);
    CHECK(read_json(tmp.file("dual.json"))["all_dual"] == true);
}

TEST_CASE("grid round trip and edge-list eval") {
    TempDir tmp;
    REQUIRE(run("construct --family grid --dims 3,4 --out " + tmp.file("t.json")) == 0);
    json t = read_json(tmp.file("t.json"));
    CHECK(t["predicted"] == 3);
    REQUIRE(run("gen --family grid --dims 3,4 --out " + tmp.file("g.json")) == 0);
    REQUIRE(run("eval --graph " + tmp.file("g.json") + " --tree " + tmp.file("t.json") +
                " --out " + tmp.file("r.json")) == 0);
    CHECK(read_json(tmp.file("r.json"))["stretch"]["value"] == 3);

    // The same tree evaluates identically over the explicit edge-list form.
    REQUIRE(run("gen --family grid --dims 3,4 --edge-list --out " + tmp.file("ge.json")) == 0);
    REQUIRE(run("eval --graph " + tmp.file("ge.json") + " --tree " + tmp.file("t.json") +
                " --out " + tmp.file("re.json")) == 0);
    CHECK(read_json(tmp.file("re.json")) == read_json(tmp.file("r.json")));
}

TEST_CASE("verify accepts a graph file as well as a spec") {
    TempDir tmp;
    REQUIRE(run("gen --spec K2xK2xK2 --out " + tmp.file("g.json")) == 0);
    REQUIRE(run("verify --graph " + tmp.file("g.json") + " --random 10 --seed 5 --out " +
                tmp.file("sweep.json")) == 0);
    json sweep = read_json(tmp.file("sweep.json"));
    CHECK(sweep["bound"] == 5);
    CHECK(sweep["min_detour_length"] >= 5);
    CHECK(sweep["all_certificates_valid"] == true);
}

TEST_CASE("degenerate certificate round trip on K_2") {
    TempDir tmp;
    std::ofstream(tmp.file("t.json")) << R"({"root":0,"edges":[[0,1]]})";
    REQUIRE(run("verify --spec K2 --tree " + tmp.file("t.json") + " --out " +
                tmp.file("cert.json")) == 0);
    json cert = read_json(tmp.file("cert.json"));
    CHECK(cert["degenerate"] == true);
    CHECK(cert["bound"] == 1);
    CHECK(cert["tree_edge"] == cert["cotree_edge"]);
    REQUIRE(run("verify --spec K2 --tree " + tmp.file("t.json") + " --cert " +
                tmp.file("cert.json") + " --out " + tmp.file("check.json")) == 0);
    CHECK(read_json(tmp.file("check.json"))["ok"] == true);
}

TEST_CASE("table honors the vertex budget per row") {
    TempDir tmp;
    REQUIRE(run("table --family grid --dims-max 3,3,3 --out " + tmp.file("t.csv")) == 0);
    std::string csv = read_text(tmp.file("t.csv"));
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    int rows = 0, with_exact = 0;
    for (std::string line; std::getline(lines, line) && !line.empty();) {
        ++rows;
        std::istringstream cells(line);
        std::string dims, family, predicted, measured, exact, exhausted;
        std::getline(cells, dims, ',');
        std::getline(cells, family, ',');
        std::getline(cells, predicted, ',');
        std::getline(cells, measured, ',');
        std::getline(cells, exact, ',');
        std::getline(cells, exhausted, ',');
        CHECK(predicted == measured);
        if (!exact.empty()) {
            ++with_exact;
            CHECK(exact == predicted);
            CHECK(exhausted == "true");
        }
    }
    CHECK(rows == 4);        // 2x2x2, 2x2x3, 2x3x3, 3x3x3
    CHECK(with_exact == 2);  // 8 and 12 vertices fit the default cap of 12
}

TEST_CASE("table sweeps a family to CSV") {
    TempDir tmp;
    REQUIRE(run("table --family grid --dims-max 3,3 --out " + tmp.file("t.csv")) == 0);
    std::string csv = read_text(tmp.file("t.csv"));
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "dims,family,predicted,constructed_measured,exact,exhausted");
    int rows = 0;
    for (std::string line; std::getline(lines, line) && !line.empty();) {
        ++rows;
        std::istringstream cells(line);
        std::string dims, family, predicted, measured, exact, exhausted;
        std::getline(cells, dims, ',');
        std::getline(cells, family, ',');
        std::getline(cells, predicted, ',');
        std::getline(cells, measured, ',');
        std::getline(cells, exact, ',');
        std::getline(cells, exhausted, ',');
        CHECK(family == "grid");
        CHECK(predicted == measured);
        if (!exact.empty()) {  // within the vertex budget
            CHECK(exact == predicted);
            CHECK(exhausted == "true");
        }
    }
    CHECK(rows == 3);  // 2x2, 2x3, 3x3
}

TEST_CASE("export renders DOT") {
    TempDir tmp;
    REQUIRE(run("construct --family grid --dims 2,3 --out " + tmp.file("t.json")) == 0);
    REQUIRE(run("export --spec P2xP3 --tree " + tmp.file("t.json") + " --out " +
                tmp.file("g.dot")) == 0);
    std::string dot = read_text(tmp.file("g.dot"));
    CHECK(dot.find("graph g {") != std::string::npos);
    CHECK(dot.find("style=dotted") != std::string::npos);

    REQUIRE(run("export --spec K3 --out " + tmp.file("bare.dot")) == 0);
    CHECK(read_text(tmp.file("bare.dot")).find("style=dotted") == std::string::npos);
}

TEST_CASE("exit codes distinguish usage and domain errors") {
    TempDir tmp;
    CHECK(run("frobnicate") == 2);                       // unknown subcommand
    CHECK(run("construct --family hamming") == 2);       // missing required option
    CHECK(run("gen --no-such-flag") == 2);
    CHECK(run("gen --spec K1xK2") == 1);                 // factor too small
    CHECK(run("gen --spec Q3") == 1);                    // malformed spec string
    CHECK(run("eval --graph " + tmp.file("missing.json") + " --tree " +
              tmp.file("missing.json")) == 1);
    CHECK(run("exact --spec P4xP5") == 1);               // over the vertex cap
    CHECK(run("--help") == 0);
    CHECK(run("gen --help") == 0);
}
