#include "doctest.h"

#include "altkron/cli.hpp"
#include "altkron/io.hpp"

#include <filesystem>
#include <sstream>

using namespace altkron;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    Json report;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    Json report;
    if (!out.str().empty()) report = Json::parse(out.str());
    return {code, report, err.str()};
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& f) const { return (path / f).string(); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("construct and check the octonions") {
    TempDir dir("altkron_cli_oct");
    const Run c = run({"--out", dir.str(), "construct", "octonion", "--base", "rationals"});
    CHECK(c.code == 0);
    CHECK(c.report.at("pass") == true);
    CHECK(c.report.at("result").at("dim") == 8);
    CHECK(fs::exists(dir / "octonion.algebra.json"));
    CHECK(fs::exists(dir / "octonion.units.json"));
    CHECK(fs::exists(dir / "octonion.spec.json"));

    const Run k = run({"check", dir / "octonion.algebra.json", "--identity", "all"});
    CHECK(k.code == 0);
    CHECK(k.report.at("checks").size() == 10);
    CHECK(k.report.at("inputs").at(0).at("fnv1a64").get<std::string>().size() == 16);

    const Run co = run({"--out", dir.str(), "coordinatize", dir / "octonion.algebra.json", "--units",
                        dir / "octonion.units.json"});
    CHECK(co.code == 0);
    CHECK(co.report.at("result").at("dims").at("Z_a") == 1);
    CHECK(co.report.at("result").at("dims").at("V") == 2);
    CHECK(co.report.at("result").at("gram") == Json::parse(R"([[["0"], ["-1"]], [["1"], ["0"]]])"));
    CHECK(fs::exists(dir / "recovered.spec.json"));

    const Run cr = run({"criterion", dir / "octonion.spec.json"});
    CHECK(cr.code == 0);
    CHECK(cr.report.at("result").at("witness") == Json::parse(R"([["1", "0"], ["0", "-1"]])"));
}

TEST_CASE("reports are deterministic") {
    TempDir dir("altkron_cli_det");
    const std::vector<std::string> args{"--out", dir.str(), "construct", "ncd", "--base", "grassmann2",
                                        "--alpha", "e1e2"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.report == b.report);
    CHECK(a.report.at("result").at("dim") == 28);
}

TEST_CASE("exit code 1 for failed checks and premises") {
    TempDir dir("altkron_cli_fail");
    const Run bad_alpha = run({"--out", dir.str(), "construct", "ncd", "--base", "upper2", "--alpha", "1,0,0"});
    CHECK(bad_alpha.code == 1);
    CHECK(bad_alpha.report.at("pass") == false);

    const Run g = run({"--out", dir.str(), "plucker", "grassmann", "--n", "4"});
    CHECK(g.code == 0);
    const Run printed = run({"plucker", "check", dir / "grassmann_4.family.json", "--convention", "printed"});
    CHECK(printed.code == 1);
    CHECK(printed.report.at("checks").at(0).at("witness") == Json::parse("[1, 2, 3, 4]"));
    CHECK(run({"plucker", "check", dir / "grassmann_4.family.json"}).code == 0);
}

TEST_CASE("exit code 2 for malformed input and usage") {
    TempDir dir("altkron_cli_bad");
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", dir / "missing.json"}).code == 2);
    write_json_file(dir / "junk.json", Json::parse(R"({"format": 1, "field": "Q", "dim": 2})"));
    const Run junk = run({"check", dir / "junk.json"});
    CHECK(junk.code == 2);
    CHECK(junk.report.at("error").at("kind") == "input");
    CHECK(run({"check", "octonions", "--mode", "random:5"}).code == 2);
    CHECK(run({"check", "octonions", "--identity", "e99"}).code == 2);
    CHECK(run({"--field", "6", "check", "m2"}).code == 2);
}

TEST_CASE("random mode records its seed") {
    const Run r = run({"--seed", "9", "check", "octonions", "--identity", "nested_associator", "--mode", "random:4"});
    CHECK(r.code == 0);
    CHECK(r.report.at("seed") == 9);
}

TEST_CASE("build refuses invalid specs unless forced") {
    TempDir dir("altkron_cli_build");
    CHECK(run({"--out", dir.str(), "construct", "threegen", "--base", "truncated:2", "--a", "0", "--b", "0", "--c",
               "t"})
              .code == 0);
    Json spec = read_json_file(dir / "threegen.spec.json");
    // Add <e1, e2> = 1 extended B-bilinearly; the cyclic identity then fails.
    auto& form = spec.at("form");
    form[0][2] = Json::parse(R"([[0, "1"]])");
    form[2][0] = Json::parse(R"([[0, "-1"]])");
    form[0][3] = Json::parse(R"([[1, "1"]])");
    form[3][0] = Json::parse(R"([[1, "-1"]])");
    form[1][2] = Json::parse(R"([[1, "1"]])");
    form[2][1] = Json::parse(R"([[1, "-1"]])");
    write_json_file(dir / "bad.spec.json", spec);

    const Run refused = run({"--out", dir.str(), "build", dir / "bad.spec.json"});
    CHECK(refused.code == 1);
    CHECK_FALSE(fs::exists(dir / "built.algebra.json"));

    const Run forced = run({"--out", dir.str(), "build", dir / "bad.spec.json", "--force"});
    CHECK(forced.code == 1);
    CHECK(fs::exists(dir / "built.algebra.json"));
    const Run k = run({"check", dir / "built.algebra.json"});
    CHECK(k.code == 1);
    CHECK_FALSE(k.report.at("checks").at(0).at("witness").empty());
}

TEST_CASE("timing is opt-in") {
    CHECK_FALSE(run({"check", "m2"}).report.contains("timings_ms"));
    CHECK(run({"--timing", "check", "m2"}).report.contains("timings_ms"));
}

TEST_CASE("identity checks and bogus units from the command line") {
    CHECK(run({"check", "m2", "--identity", "e15"}).code == 0);

    TempDir dir("altkron_cli_units");
    write_json_file(dir / "bogus.units.json",
                    Json::parse(R"({"format": 1, "E11": [[0, "1"]], "E12": [], "E21": [], "E22": []})"));
    const Run r = run({"coordinatize", "truncated:4", "--units", dir / "bogus.units.json"});
    CHECK(r.code == 1);
    CHECK(r.report.at("result").at("failed_stage") == "verify_matrix_units");
}
