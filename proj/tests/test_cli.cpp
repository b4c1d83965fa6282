#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "solenoid/io.hpp"

using namespace solenoid;

namespace {

struct Run
{
    int status = -1;
    std::string out;
};

Run run_with_env(const std::string& env, const std::string& args)
{
    const std::string command = env + " " + std::string(SOLENOID_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        r.out.append(buffer, n);
    const int status = pclose(pipe);
    r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Run run(const std::string& args) { return run_with_env("", args); }

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "solenoid_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

} // namespace

TEST_CASE("ergodicity and homology commands")
{
    const Run e = run("ergodicity --sub fibonacci --depth 30");
    REQUIRE(e.status == 0);
    const Json j = Json::parse(e.out);
    CHECK(j.at("verdict") == "unique");
    CHECK(j.at("frequencies").at(0).get<double>() == doctest::Approx(0.6180339887).epsilon(1e-9));
    CHECK(j.get<ErgodicityResult>().verdict == Verdict::unique);

    const Run h = run("homology --sub fibonacci");
    REQUIRE(h.status == 0);
    const Json k = Json::parse(h.out);
    CHECK(k.at("dim_Z1") == 2);
    CHECK(k.at("rays") == Json::parse("[[1,0],[0,1]]"));
}

TEST_CASE("outputs are byte-identical across runs")
{
    for (const char* args : {"ergodicity --sub chair --depth 20", "gen --sub half_hex --depth 3",
                             "voronoi --sub fibonacci --depth 10", "rectify --sub chair --depth 2",
                             "patches --sub chair --depth 3 --radius 1 --radius 2 --group isometries"})
    {
        CAPTURE(args);
        const Run a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("thread count does not change the output")
{
    const std::string args = "patches --sub chair --depth 5 --radius 1.5 --radius 2.5 --group isometries";
    const Run one = run_with_env("SOLENOID_THREADS=1", args);
    const Run four = run_with_env("SOLENOID_THREADS=4", args);
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("emitted JSON reloads into the same value")
{
    const Run gen = run("gen --sub chair --depth 2");
    REQUIRE(gen.status == 0);
    const DeloneSet x = Json::parse(gen.out).get<DeloneSet>();
    CHECK(Json(x).dump(2) + "\n" == gen.out);

    const Run complex = run("complex --sub half_hex");
    REQUIRE(complex.status == 0);
    const Json c = Json::parse(complex.out);
    const BranchedComplex s = c.at("complex").get<BranchedComplex>();
    CHECK(Json(s) == c.at("complex"));
    CHECK(c.at("validation").at("valid") == true);
}

TEST_CASE("spec files, formats and output paths")
{
    const auto spec = scratch("job.json");
    const auto out = scratch("freq.csv");
    write(spec, R"({"version":1,"command":"measures","substitution":"thue_morse","depth":20,"format":"csv"})");
    const Run r = run("measures --spec " + spec.string() + " --out " + out.string());
    CHECK(r.status == 0);
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "label,frequency\na,0.5\nb,0.5\n");

    const auto set = scratch("z.json");
    write(set, R"({"dim":1,"r":0.5,"R":1,"window":{"lo":[0],"hi":[5]},"points":[[0,"a"],[1,"a"],[2,"a"],[3,"a"],[4,"a"]]})");
    const Run v = run("voronoi --input " + set.string());
    REQUIRE(v.status == 0);
    CHECK(Json::parse(v.out).at("translation_classes") == 1);

    CHECK(run("homology --sub fibonacci --format svg").status == 2);
}

TEST_CASE("errors")
{
    const auto bad = scratch("bad.json");
    write(bad, R"({"command":"gen","bogus":true})");
    const Run schema = run("gen --spec " + bad.string());
    CHECK(schema.status == 2);
    CHECK(Json::parse(schema.out).at("error").at("code") == "schema_error");

    write(bad, "{not json");
    CHECK(run("gen --spec " + bad.string()).status == 2);

    const Run unknown = run("gen --sub nothing");
    CHECK(unknown.status == 1);
    CHECK(Json::parse(unknown.out).at("error").at("code") == "unknown_substitution");

    CHECK(run("gen --depth 3").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("complex --sub chair --collared").status == 1);
}
