#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "indy3/attractor.hpp"
#include "indy3/cli.hpp"

using namespace indy3;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;

    TempDir() {
        path = fs::temp_directory_path() / ("indy3_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("classify command prints the verdict and writes JSON") {
    TempDir tmp;
    RunResult r = run({"classify", "9", "13", "5", "--json", tmp.file("r.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("DisconnectedTotalityUnresolved") != std::string::npos);
    CHECK(r.out.find("BothEscape") != std::string::npos);
    std::ifstream json(tmp.file("r.json"));
    std::stringstream buf;
    buf << json.rdbuf();
    CHECK(buf.str().find("\"verdict\": \"DisconnectedTotalityUnresolved\"") != std::string::npos);

    RunResult explicit_set = run({"classify", "3", "3", "1"});
    CHECK(explicit_set.code == 0);
    CHECK(explicit_set.out.find("ExplicitSet") != std::string::npos);
}

TEST_CASE("classify --graph profiles first") {
    TempDir tmp;
    std::ofstream(tmp.file("g.txt")) << "# K5 minus a triangle\n5\n3 4\n0 3\n0 4\n1 3\n1 4\n2 3\n2 4\n";
    RunResult r = run({"classify", "--graph", tmp.file("g.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.find("profile: (5, 3, 1)") != std::string::npos);

    std::ofstream(tmp.file("k3.txt")) << "3\n0 1\n0 2\n1 2\n";
    RunResult bad = run({"classify", "--graph", tmp.file("k3.txt")});
    CHECK(bad.code == 1);
}

TEST_CASE("attract then diameter round-trips through CSV") {
    TempDir tmp;
    RunResult r = run({"attract", "4", "3", "1", "--depth", "8", "--out", tmp.file("p.csv")});
    CHECK(r.code == 0);

    PointSet s = load_point_csv(tmp.file("p.csv"));
    CHECK(s.total() == 6561);
    double in_process = diameter(approximate_attractor(Cubic(4, 3, 1), 8));

    RunResult d = run({"diameter", tmp.file("p.csv")});
    CHECK(d.code == 0);
    CHECK(std::abs(std::stod(d.out) - in_process) <= 1e-12);

    RunResult h = run({"hausdorff", tmp.file("p.csv"), tmp.file("p.csv")});
    CHECK(h.code == 0);
    CHECK(std::stod(h.out) == 0.0);
}

TEST_CASE("attract sampling flags are honored") {
    TempDir tmp;
    RunResult r = run({"attract", "9", "13", "5", "--depth", "20", "--sample", "100", "--seed",
                       "3", "--out", tmp.file("s.csv")});
    CHECK(r.code == 0);
    PointSet s = load_point_csv(tmp.file("s.csv"));
    CHECK(s.total() == 100);
}

TEST_CASE("attract exits 2 when residuals are flagged") {
    // the multiplier-17.4 fixed point of 7z + 6z^2 + z^3 makes depth-10 roots
    // unverifiable to 1e-6 in double precision; the command must say so
    TempDir tmp;
    RunResult r = run({"attract", "7", "6", "1", "--depth", "10", "--out", tmp.file("f.csv")});
    CHECK(r.code == 2);
    CHECK(r.err.find("residual") != std::string::npos);
    CHECK(load_point_csv(tmp.file("f.csv")).total() == 59049);  // still written in full
}

TEST_CASE("julia command writes a sample") {
    TempDir tmp;
    RunResult r = run({"julia", "3", "3", "1", "--iters", "200", "--seed", "5", "--out",
                       tmp.file("j.csv")});
    CHECK(r.code == 0);
    PointSet s = load_point_csv(tmp.file("j.csv"));
    CHECK(s.total() == 150);
}

TEST_CASE("render writes a PGM with the requested size") {
    TempDir tmp;
    RunResult r = run({"render", "4", "3", "1", "--size", "40x30", "--max-iter", "50", "--out",
                       tmp.file("i.pgm")});
    CHECK(r.code == 0);
    std::ifstream img(tmp.file("i.pgm"), std::ios::binary);
    std::stringstream buf;
    buf << img.rdbuf();
    CHECK(buf.str().rfind("P5\n40 30\n255\n", 0) == 0);
    CHECK(buf.str().size() == std::string("P5\n40 30\n255\n").size() + 40 * 30);
}

TEST_CASE("product --verify checks the composition identity") {
    TempDir tmp;
    std::ofstream(tmp.file("star.txt")) << "4\n0 1\n0 2\n0 3\n";
    RunResult r = run({"product", "--graph", tmp.file("star.txt"), "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("holds integer-exactly") != std::string::npos);

    RunResult big = run({"product", "--graph", tmp.file("star.txt")});
    CHECK(big.code == 0);
}

TEST_CASE("family command emits a parseable graph") {
    TempDir tmp;
    RunResult r = run({"family", "G2", "2", "--emit-graph", tmp.file("g2.txt")});
    CHECK(r.code == 0);
    CHECK(r.out.find("(12, 6, 1)") != std::string::npos);
    RunResult back = run({"classify", "--graph", tmp.file("g2.txt")});
    CHECK(back.code == 0);
    CHECK(back.out.find("Unicritical") != std::string::npos);
}

TEST_CASE("enumerate writes the catalog CSV") {
    TempDir tmp;
    RunResult r = run({"enumerate", "5", "--out", tmp.file("c.csv")});
    CHECK(r.code == 0);
    std::ifstream csv(tmp.file("c.csv"));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "n,a2,a3,labeled_count");

    RunResult gated = run({"enumerate", "8", "--out", tmp.file("c8.csv")});
    CHECK(gated.code == 1);  // needs --n8
}

TEST_CASE("witness command reports both outcomes") {
    RunResult hit = run({"witness", "5", "8", "4"});
    CHECK(hit.code == 0);
    CHECK(hit.out.find("witness graph") != std::string::npos);

    RunResult miss = run({"witness", "4", "5", "1"});
    CHECK(miss.code == 0);
    CHECK(miss.out.find("none") != std::string::npos);
}

TEST_CASE("verify-tables passes and prints per-row lines") {
    RunResult r = run({"verify-tables"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Table 1 row (5,5,2)") != std::string::npos);
    CHECK(r.out.find("Table 5 row (8,11,4)") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    RunResult one = run({"verify-tables", "--table", "3"});
    CHECK(one.code == 0);
    CHECK(one.out.find("Table 3") != std::string::npos);
    CHECK(one.out.find("Table 1") == std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"classify"}).code == 1);
    CHECK(run({"attract", "4", "3", "1"}).code == 1);        // missing --out
    CHECK(run({"classify", "2", "3", "1"}).code == 1);       // invalid coefficients
    CHECK(run({"render", "4", "3", "1", "--size", "bogus", "--out", "x.pgm"}).code == 1);
    CHECK(run({}).code == 1);
}
