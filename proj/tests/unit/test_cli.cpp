#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qmfm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = qmf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate exit codes") {
    CHECK(run({"validate", "--builtin", "haar"}).code == 0);
    CHECK(run({"validate", "--builtin", "cantor3"}).code == 0);
    const std::string path = "qmf_cli_perturbed.json";
    {
        std::ofstream out(path);
        out << R"({"N": 2, "filters": [[[0, 0.7071067811865476, 0], [1, 0.7571067811865476, 0]],)"
            << R"( [[0, 0.7071067811865476, 0], [1, -0.7071067811865476, 0]]]})";
    }
    const Run r = run({"validate", "--filters", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run({"validate", "--builtin", "nope"}).code == 2);
    CHECK(run({"validate", "--filters", "/nonexistent.json"}).code == 2);
    CHECK(run({"validate", "--builtin", "haar", "--filters", "x.json"}).code == 2);
}

TEST_CASE("measure tables") {
    const Run haar = run({"measure", "--builtin", "haar", "--vector", "p=0", "--level", "3"});
    CHECK(haar.code == 0);
    CHECK(count_lines(haar.out) == 9);
    CHECK(haar.out.find("111,7/8,0.12") != std::string::npos);

    const Run cantor = run({"measure", "--builtin", "cantor3", "--vector", "p=0", "--level", "2"});
    CHECK(cantor.out.find("01,1/9,0\n") != std::string::npos);
    CHECK(cantor.out.find("22,8/9,0.24") != std::string::npos);

    const Run dirac = run({"measure", "--builtin", "permutative2", "--vector", "p=0", "--level", "4"});
    CHECK(dirac.out.find("0000,0/16,1\n") != std::string::npos);

    const Run both = run({"measure", "--builtin", "daubechies4", "--level", "4", "--engine", "both"});
    CHECK(both.code == 0);
    CHECK(both.err.find("cross-defect") != std::string::npos);

    const Run json = run({"measure", "--level", "1", "--format", "json", "--engine", "packet", "--vector", "p=1"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"engine\": \"packet\"") != std::string::npos);
}

TEST_CASE("non-unit vectors are normalized with a warning") {
    const std::string path = "qmf_cli_vector.json";
    {
        std::ofstream out(path);
        out << R"({"0": [3, 0], "1": [4, 0]})";
    }
    const Run r = run({"measure", "--builtin", "haar", "--vector", path, "--level", "1"});
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cdf, packets, reconstruct") {
    const Run cdf = run({"cdf", "--builtin", "cantor3", "--level", "1"});
    CHECK(cdf.out == "right,cumulative\n1/3,0.49999999999999989\n2/3,0.49999999999999989\n3/3,0.99999999999999978\n");

    const Run sweep = run({"packets", "--sweep", "k=3"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("PASS") != std::string::npos);
    CHECK(run({"packets", "--sweep", "k=x"}).code == 2);
    CHECK(run({"packets"}).code == 2);
    CHECK(run({"packets", "--dump", "3:2"}).out == "left,re,im\n0/1,1,0\n1/4,-1,0\n1/2,-1,0\n3/4,1,0\n");

    const Run rec = run({"reconstruct", "--builtin", "daubechies4", "--depth", "5", "--seed", "7"});
    CHECK(rec.code == 0);
    CHECK(rec.out.find("PASS") != std::string::npos);
}

TEST_CASE("demos") {
    for (const char* name : {"haar", "cantor", "permutative"}) {
        CAPTURE(name);
        const Run r = run({"demo", name});
        CHECK(r.code == 0);
        CHECK(r.out.find("[FAIL]") == std::string::npos);
    }
    CHECK(run({"demo", "mandelbrot"}).code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"measure", "--level", "notanumber"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

}
