#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lcfano/cli.hpp"

using namespace lcfano;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// Writes content to a unique temp file; removed on scope exit.
struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("lcfano_cli_test_" + std::to_string(++counter) + ".json");
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

struct EnvGuard {
    std::string name;
    EnvGuard(const std::string& n, const std::string& value) : name(n) {
        setenv(name.c_str(), value.c_str(), 1);
    }
    ~EnvGuard() { unsetenv(name.c_str()); }
};

const std::string kCross = R"({"dim":2,"vertices":[[1,0],[-1,0],[0,1],[0,-1]]})";
const std::string kMldThirdTriangle = R"({"dim":2,"vertices":[[1,0],[0,1],[-3,-3]]})";
const std::string kDiagonalSquare = R"({"dim":2,"vertices":[[1,1],[1,-1],[-1,1],[-1,-1]]})";

}  // namespace

TEST_CASE("cli bound emits the frozen report line") {
    const RunResult r = run({"bound", "--d", "3", "--q", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"command\":\"bound\",\"inputs\":{\"d\":3,\"q\":1},\"theorem_tag\":\"Thm1.1\","
          "\"results\":{\"value\":\"72\"},\"status\":\"verified\"}\n");
    CHECK(contains(r.err, "72"));
}

TEST_CASE("cli bound --float keeps the exact field and adds a decimal one") {
    const RunResult r = run({"bound", "--d", "3", "--q", "2", "--float"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"value\":\"441/2\",\"value_float\":220.5"));
}

TEST_CASE("cli useq prints the sequence") {
    const RunResult r = run({"useq", "--q", "2", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"command\":\"useq\",\"inputs\":{\"q\":2,\"n\":4},\"theorem_tag\":\"Sec1.1\","
          "\"results\":{\"values\":[\"2\",\"6\",\"42\",\"1806\"]},\"status\":\"verified\"}\n");
    CHECK(contains(r.err, "2 6 42 1806"));
}

TEST_CASE("cli usage errors exit 3") {
    CHECK(run({"frobnicate"}).code == 3);
    CHECK(run({}).code == 3);
    CHECK(run({"bound", "--d", "3"}).code == 3);
    CHECK(run({"bound", "--d", "1", "--q", "1"}).code == 3);
    CHECK(run({"useq", "--q", "2", "--n", "0"}).code == 3);
    CHECK(run({"useq", "--q", "2", "--n", "25"}).code == 3);
    CHECK(run({"minimize", "--d", "2", "--q", "1", "--target", "x"}).code == 3);
    CHECK(run({"minimize", "--d", "2", "--q", "1", "--target", "d", "--oracle"}).code == 3);
    CHECK(run({"verify-prop44", "--d", "3", "--q", "1"}).code == 3);
    const RunResult r = run({"extremal", "--d", "3", "--q", "1", "--kind", "nonsense"});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "usage error"));
}

TEST_CASE("cli help exits 0") {
    const RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "bound"));
    CHECK(contains(r.out, "sweep5"));
}

TEST_CASE("cli extremal example43 embeds polytope, weights, and beta") {
    const RunResult r = run({"extremal", "--d", "3", "--q", "1", "--kind", "example43"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"theorem_tag\":\"Ex4.3\""));
    CHECK(contains(r.out, "\"kind\":\"example43\""));
    CHECK(contains(r.out, "[1,-1,0]"));
    CHECK(contains(r.out, "[-1,2,0]"));
    CHECK(contains(r.out, "\"weights\":[\"6\",\"4\",\"1\",\"1\"]"));
    CHECK(contains(r.out, "\"beta\":[\"1/2\",\"1/3\",\"1/12\",\"1/12\"]"));
    CHECK(contains(r.out, "\"volume\":\"12\",\"dual_volume\":\"72\""));
}

TEST_CASE("cli extremal thm13 at d=2") {
    const RunResult r = run({"extremal", "--d", "2", "--q", "2", "--kind", "thm13"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"theorem_tag\":\"Thm1.3\""));
    CHECK(contains(r.out, "\"vertices\":[[1,0],[-2,-6],[-2,6]]"));
    CHECK(contains(r.out, "\"volume\":\"36\""));
}

TEST_CASE("cli extremal dual kind emits a rational polytope without weights") {
    const RunResult r = run({"extremal", "--d", "3", "--q", "2", "--kind", "dual"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"theorem_tag\":\"Thm1.2\""));
    CHECK(contains(r.out, "\"3/2\""));
    CHECK(contains(r.out, "\"-21\""));
    CHECK(!contains(r.out, "\"weights\""));
    CHECK(run({"extremal", "--d", "3", "--q", "1", "--kind", "dual"}).code == 3);
}

TEST_CASE("cli weights prints the bare vector on stderr") {
    const TempFile f(R"({"dim":3,"vertices":[[1,-1,0],[-1,2,0],[-1,-1,-1],[-1,-1,1]]})");
    const RunResult r = run({"weights", f.str()});
    CHECK(r.code == 0);
    CHECK(r.err == "6 4 1 1\n");
    // The JSON array stays aligned with the canonical (sorted) vertex order.
    CHECK(contains(r.out, "\"weights\":[\"1\",\"1\",\"4\",\"6\"],\"reduced\":true"));
}

TEST_CASE("cli volume and dual on the cross-polytope") {
    const TempFile f(kCross);
    const RunResult v = run({"volume", f.str()});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "\"results\":{\"volume\":\"4\"}"));
    CHECK(contains(v.out, "\"theorem_tag\":\"Sec2.1\""));

    const RunResult vf = run({"volume", f.str(), "--float"});
    CHECK(contains(vf.out, "\"volume\":\"4\",\"volume_float\":4"));

    const RunResult d = run({"dual", f.str()});
    CHECK(d.code == 0);
    for (const char* corner : {"[\"-1\",\"-1\"]", "[\"-1\",\"1\"]", "[\"1\",\"-1\"]", "[\"1\",\"1\"]"})
        CHECK(contains(d.out, corner));
}

TEST_CASE("cli dual rejects a boundary origin as indecisive") {
    const TempFile f(R"({"dim":2,"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
    const RunResult r = run({"dual", f.str()});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "indecisive"));
}

TEST_CASE("cli check-lc reports the smallest witness") {
    const TempFile f(kMldThirdTriangle);
    const RunResult bad = run({"check-lc", "--q", "1", f.str()});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "\"lc\":false,\"witness\":[\"-1\",\"-1\"]"));
    CHECK(contains(bad.out, "\"status\":\"violated\""));
    CHECK(contains(bad.err, "(-1, -1)"));

    const RunResult good = run({"check-lc", "--q", "3", f.str()});
    CHECK(good.code == 0);
    CHECK(contains(good.out, "\"lc\":true"));
    CHECK(contains(good.out, "\"status\":\"verified\""));
}

TEST_CASE("cli check-lc cap handling") {
    const TempFile f(kDiagonalSquare);
    {
        const EnvGuard env("LCFANO_CAP", "2");
        const RunResult capped = run({"check-lc", "--q", "1", f.str()});
        CHECK(capped.code == 2);
        CHECK(contains(capped.err, "indecisive"));

        // An explicit flag beats the environment.
        const RunResult flagged = run({"check-lc", "--q", "1", "--cap", "100000", f.str()});
        CHECK(flagged.code == 0);
    }
    {
        const EnvGuard env("LCFANO_CAP", "notanumber");
        CHECK(run({"check-lc", "--q", "1", f.str()}).code == 3);
    }
    CHECK(run({"check-lc", "--q", "1", f.str()}).code == 0);
}

TEST_CASE("cli check-fano") {
    const TempFile cross(kCross);
    CHECK(run({"check-fano", cross.str()}).code == 0);

    const TempFile imprimitive(R"({"dim":2,"vertices":[[2,0],[-1,2],[-1,-2]]})");
    const RunResult r = run({"check-fano", imprimitive.str()});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "\"fano\":false"));
    CHECK(contains(r.out, "not primitive"));

    const TempFile shifted(R"({"dim":2,"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
    const RunResult s = run({"check-fano", shifted.str()});
    CHECK(s.code == 1);
    CHECK(contains(s.out, "0 is not strictly interior"));
}

TEST_CASE("cli check-minimal") {
    const TempFile cross(kCross);
    const RunResult good = run({"check-minimal", "--q", "1", cross.str()});
    CHECK(good.code == 0);
    CHECK(contains(good.out, "\"minimal\":true"));
    CHECK(contains(good.out, "\"theorem_tag\":\"Def2.7\""));

    const TempFile square(kDiagonalSquare);
    const RunResult bad = run({"check-minimal", "--q", "1", square.str()});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "\"minimal\":false,\"droppable_vertex\":0,\"vertex\":[\"-1\",\"-1\"]"));
}

TEST_CASE("cli ps-check rows and first failure") {
    const TempFile f(kMldThirdTriangle);
    const RunResult bad = run({"ps-check", "--q", "1", f.str()});
    CHECK(bad.code == 1);
    // Beta is reported in canonical vertex order; the rows sort internally.
    CHECK(contains(bad.out, "\"beta\":[\"1/7\",\"3/7\",\"3/7\"]"));
    CHECK(contains(bad.out, "\"lhs\":\"9/49\",\"rhs\":\"1/7\",\"holds\":false"));
    CHECK(contains(bad.out, "\"all_hold\":false,\"first_failure\":2"));
    CHECK(contains(bad.err, "t=2"));

    const RunResult good = run({"ps-check", "--q", "2", f.str()});
    CHECK(good.code == 0);
    CHECK(contains(good.out, "\"all_hold\":true"));
    CHECK(!contains(good.out, "first_failure"));
}

TEST_CASE("cli ps-witness") {
    const TempFile f(kMldThirdTriangle);
    const RunResult r = run({"ps-witness", "--q", "1", "--radius", "16", f.str()});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "\"witness\":[\"-1\",\"-1\"]"));
    CHECK(contains(r.out, "\"beta_of_scaled_witness\":[\"3/7\",\"2/7\",\"2/7\"]"));
    CHECK(contains(r.out, "\"status\":\"violated\""));

    // All inequalities hold: there is nothing to refute.
    const TempFile ok(R"({"dim":2,"vertices":[[1,0],[0,1],[-1,-1]]})");
    const RunResult none = run({"ps-witness", "--q", "1", "--radius", "16", ok.str()});
    CHECK(none.code == 2);
    CHECK(contains(none.err, "indecisive"));
}

TEST_CASE("cli minimize with the exceptional pair and a grid oracle") {
    const RunResult r = run({"minimize", "--d", "2", "--q", "1", "--target", "d", "--oracle",
                             "--step", "1/4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"theorem_tag\":\"Thm3.7\""));
    CHECK(contains(r.out, "\"optimal_l\":1,\"optimal_value\":\"1/9\""));
    CHECK(contains(r.out, "\"exception\":true"));
    CHECK(contains(r.out,
                   "\"oracle\":{\"step\":\"1/4\",\"value\":\"1/8\",\"argmin\":[\"1/2\",\"1/4\","
                   "\"1/4\"],\"feasible_count\":1}"));

    const RunResult full = run({"minimize", "--d", "2", "--q", "1", "--target", "d1"});
    CHECK(full.code == 0);
    CHECK(contains(full.out, "\"theorem_tag\":\"Thm3.6\""));
    CHECK(contains(full.out, "\"optimal_l\":3,\"optimal_value\":\"1/36\""));
}

TEST_CASE("cli verify-prop44") {
    const RunResult r = run({"verify-prop44", "--d", "3", "--q", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"theorem_tag\":\"Prop4.4\""));
    CHECK(contains(r.out, "\"results\":{\"ok\":true}"));
}

TEST_CASE("cli sweep5 emits one record line per shape plus a summary") {
    const RunResult r = run({"sweep5", "--dmax", "3", "--qmax", "2"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "{\"d\":3,\"q\":2,\"t\":2,\"d_list\":[2,1],\"bound_value\":\"54\","
          "\"target\":\"441/2\",\"strict\":true}");
    CHECK(contains(lines[1], "\"d_list\":[1,1,1]"));
    CHECK(contains(lines[2], "\"command\":\"sweep5\""));
    CHECK(contains(lines[2], "\"records\":2,\"violations\":0"));
    CHECK(contains(lines[2], "\"theorem_tag\":\"Prop5.2\""));
    CHECK(contains(r.err, "2 shapes, 0 violations"));
}

TEST_CASE("cli approx-k sandwich") {
    const RunResult r = run({"approx-k", "--q", "2", "--nmax", "6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"theorem_tag\":\"Lem5.1\""));
    CHECK(contains(r.out, "\"sandwich\":true"));
    CHECK(contains(r.err, "K(2) in [1.59791021"));
    CHECK(run({"approx-k", "--q", "2", "--tol", "0"}).code == 3);
    CHECK(run({"approx-k", "--q", "1"}).code == 3);
}

TEST_CASE("cli decompose on the cross-polytope") {
    const TempFile f(kCross);
    const RunResult r = run({"decompose", "--q", "1", f.str()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"theorem_tag\":\"Thm2.8\""));
    CHECK(contains(r.out, "\"d\":2,\"q\":1,\"t\":2,\"d_list\":[1,1],\"r_list\":[0,0]"));
    CHECK(contains(r.out, "\"beta\":[\"1/2\",\"1/2\"]"));

    const TempFile tri(R"({"dim":2,"vertices":[[1,0],[0,1],[-1,-1]]})");
    const RunResult s = run({"decompose", "--q", "1", tri.str()});
    CHECK(s.code == 2);
    CHECK(contains(s.err, "indecisive"));
}

TEST_CASE("cli file errors exit 3") {
    const RunResult missing = run({"volume", "/nonexistent/path.json"});
    CHECK(missing.code == 3);
    CHECK(contains(missing.err, "cannot read file"));

    // Rational vertices are not accepted where a lattice polytope is required.
    const TempFile rational(R"({"dim":2,"vertices":[["1/2","0"],["0","1"],["-1","-1"]]})");
    CHECK(run({"check-lc", "--q", "1", rational.str()}).code == 3);
    CHECK(run({"volume", rational.str()}).code == 0);
}

TEST_CASE("cli verify-all at reduced scale") {
    const RunResult r = run({"verify-all", "--dmax", "3", "--qmax", "2"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 13);
    for (const auto& line : lines) CHECK(contains(line, "\"command\":\"verify-all\""));
    CHECK(contains(lines.back(), "\"passed\":12,\"total\":12"));
    CHECK(contains(lines.back(), "\"status\":\"verified\""));
    CHECK(contains(r.err, "12/12 checks passed"));
}
