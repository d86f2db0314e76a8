#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "jrt/constructions.hpp"
#include "jrt/json_io.hpp"
#include "jrt/structure.hpp"

namespace fs = std::filesystem;
using namespace jrt;

namespace {

const std::string cli = JRT_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("jrt-cli-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = cli + " " + args + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("generate round-trips through the reader") {
    TempDir tmp;
    REQUIRE(run("generate --kind thick --n 8 --k 4 --t 2 --out " + tmp.file("t.json")) == 0);
    auto h = io::hypergraph_from_json(io::parse_file(tmp.file("t.json")));
    CHECK(h == thick_clique(8, 4, 2).h);
    CHECK(h.edge_count() == 6);
}

TEST_CASE("verify exit codes") {
    TempDir tmp;
    REQUIRE(run("generate --kind thick --n 8 --k 4 --t 2 --out " + tmp.file("t.json")) == 0);
    CHECK(run("verify --r 1 --t 2 --in " + tmp.file("t.json")) == 0);

    io::write_file(tmp.file("bad.json"),
                   R"({"n": 8, "k": 4, "edges": [[0,1,2,3],[3,4,5,6]]})");
    CHECK(run("verify --r 1 --t 2 --in " + tmp.file("bad.json")) == 1);

    io::write_file(tmp.file("broken.json"), "{\"n\": 8, edges}");
    CHECK(run("verify --r 1 --t 2 --in " + tmp.file("broken.json")) == 2);
    CHECK(run("verify --r 1 --t 2 --in " + tmp.file("missing.json")) == 2);
    CHECK(run("verify --r 1 --t 2") == 2);        // missing --in
    CHECK(run("frobnicate") == 2);                // unknown verb
}

TEST_CASE("verify reports the violating pair") {
    TempDir tmp;
    io::write_file(tmp.file("bad.json"),
                   R"({"n": 8, "k": 4, "edges": [[0,1,2,3],[3,4,5,6]]})");
    const std::string cmd = cli + " verify --r 1 --t 2 --in " + tmp.file("bad.json") +
                            " --out " + tmp.file("rep.json") + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1);
    auto rep = io::ordered_json::parse(slurp(tmp.file("rep.json")));
    CHECK(rep["member"] == false);
    CHECK(rep["reason"] == "intersection");
    CHECK(rep["violation"][0] == io::ordered_json::array({0, 1, 2, 3}));
    CHECK(rep["k"] == 4);
}

TEST_CASE("file pipelines match in-process composition") {
    TempDir tmp;
    JrtParams p(1, 2);
    REQUIRE(run("generate --kind star --n 12 --k 4 --s 2 --out " + tmp.file("s.json")) == 0);
    REQUIRE(run("structure --r 1 --t 2 --in " + tmp.file("s.json") + " --out " +
                tmp.file("cert.json")) == 0);

    auto through_files = io::ordered_json::parse(slurp(tmp.file("cert.json")));
    auto in_process = build_structure(p, full_star(12, 4, 2).h);
    CHECK(through_files["certificate"].dump() == io::to_json(in_process.cert).dump());
    CHECK(through_files["trace"].dump() == io::to_json(in_process.trace).dump());
}

TEST_CASE("sunflower verb") {
    TempDir tmp;
    REQUIRE(run("generate --kind thick --n 12 --k 4 --t 2 --out " + tmp.file("t.json")) == 0);
    REQUIRE(run("sunflower --in " + tmp.file("t.json") + " --kernel 0,1 --out " +
                tmp.file("s.json")) == 0);
    auto rep = io::ordered_json::parse(slurp(tmp.file("s.json")));
    CHECK(rep["found"] == true);
    CHECK(rep["sunflower"]["size"] == 5);
    REQUIRE(run("sunflower --in " + tmp.file("t.json") + " --auto --a 2 --out " +
                tmp.file("a.json")) == 0);
    auto rep2 = io::ordered_json::parse(slurp(tmp.file("a.json")));
    CHECK(rep2["found"] == true);
}

TEST_CASE("decompose-lemma verb enforces its precondition") {
    TempDir tmp;
    io::write_file(tmp.file("f.json"), R"({"n": 4, "k": null, "edges": [[0,1,2]]})");
    CHECK(run("decompose-lemma --q 2 --f " + tmp.file("f.json")) == 1);

    REQUIRE(run("generate --kind thick --n 8 --k 4 --t 2 --out " + tmp.file("t.json")) == 0);
    REQUIRE(run("decompose-lemma --q 2 --f " + tmp.file("t.json") + " --out " +
                tmp.file("d.json")) == 0);
    auto rep = io::ordered_json::parse(slurp(tmp.file("d.json")));
    CHECK(rep["basis"].size() == 4);
}

TEST_CASE("core and extract verbs") {
    TempDir tmp;
    auto fs19 = full_star(19, 4, 2);
    io::ordered_json star;
    star["centre"] = io::to_json(fs19.spec.centre);
    star["edges"] = io::edges_to_json(fs19.h.edges);
    io::write_file(tmp.file("star.json"), io::dump(star));
    REQUIRE(run("core --r 1 --t 2 --in " + tmp.file("star.json") + " --out " +
                tmp.file("core.json")) == 0);
    auto rep = io::ordered_json::parse(slurp(tmp.file("core.json")));
    CHECK(rep["heavy"] == true);
    CHECK(rep["removed"].empty());

    REQUIRE(run("generate --kind star --n 19 --k 4 --s 2 --out " + tmp.file("h.json")) == 0);
    REQUIRE(run("extract --r 1 --t 2 --in " + tmp.file("h.json") + " --out " +
                tmp.file("x.json")) == 0);
    auto xrep = io::ordered_json::parse(slurp(tmp.file("x.json")));
    CHECK(xrep["steps"].size() == 1);
    CHECK(xrep["residual"]["edges"].empty());
}

TEST_CASE("structure reports the saturation cap on wide inputs") {
    TempDir tmp;
    REQUIRE(run("generate --kind thick --n 30 --k 4 --t 2 --out " + tmp.file("wide.json")) == 0);
    const std::string cmd = cli + " structure --r 1 --t 2 --in " + tmp.file("wide.json") +
                            " >" + tmp.file("diag.json") + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1);
    auto diag = io::ordered_json::parse(slurp(tmp.file("diag.json")));
    CHECK(diag["error"] == "capacity");
}

TEST_CASE("search verb") {
    TempDir tmp;
    REQUIRE(run("search --r 1 --t 2 --n 8 --m 6 --out " + tmp.file("s.json")) == 0);
    auto rep = io::ordered_json::parse(slurp(tmp.file("s.json")));
    CHECK(rep["status"] == "proved-optimal");
    CHECK(rep["value"] == 3);
    CHECK(rep["lower_bound"] == 3);
}

TEST_CASE("scan emits the CSV contract") {
    TempDir tmp;
    REQUIRE(run("scan --r 1 --t 2 --n 8,10,12 --out " + tmp.file("scan.csv")) == 0);
    std::string csv = slurp(tmp.file("scan.csv"));
    CHECK(csv.rfind("n,m_star,thick_delta,star_edges,bound_m_over_3t,f_below,f_above,status\n",
                    0) == 0);
    CHECK(csv.find("\n8,6,3,15,") != std::string::npos);
}

TEST_CASE("reruns are bit-identical, under any thread count") {
    TempDir tmp;
    struct Case {
        std::string args;
        std::string out;
    };
    std::vector<Case> cases = {
        {"generate --kind gadget --r 1 --t 2 --u 4", "g.json"},
        {"generate --kind random --r 1 --t 2 --n 14 --m 8 --seed 11", "r.json"},
        {"scan --r 1 --t 2 --n 8,10,12,14", "scan.csv"},
        {"search --r 1 --t 2 --n 8 --m 5", "search.json"},
    };
    for (const auto& c : cases) {
        REQUIRE(run(c.args + " --out " + tmp.file("a-" + c.out)) == 0);
        REQUIRE(run(c.args + " --out " + tmp.file("b-" + c.out)) == 0);
        REQUIRE(run("--threads 3 " + c.args + " --out " + tmp.file("c-" + c.out)) == 0);
        const std::string a = slurp(tmp.file("a-" + c.out));
        CHECK(a == slurp(tmp.file("b-" + c.out)));
        CHECK(a == slurp(tmp.file("c-" + c.out)));
        CHECK(!a.empty());
    }
    // structure runs the whole pipeline: check it too
    REQUIRE(run("generate --kind random --r 1 --t 2 --n 14 --m 8 --seed 11 --out " +
                tmp.file("h.json")) == 0);
    REQUIRE(run("structure --r 1 --t 2 --in " + tmp.file("h.json") + " --out " +
                tmp.file("c1.json")) == 0);
    REQUIRE(run("--threads 4 structure --r 1 --t 2 --in " + tmp.file("h.json") + " --out " +
                tmp.file("c2.json")) == 0);
    CHECK(slurp(tmp.file("c1.json")) == slurp(tmp.file("c2.json")));
}
