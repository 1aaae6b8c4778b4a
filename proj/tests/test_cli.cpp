#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " " + SYNTOMIC_CLI + std::string(" ") + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir()
{
    auto d = fs::temp_directory_path() / "syntomic_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("zp examples")
{
    const auto a = run("zp --p 3 --weights 0..3 --format json --samples 10");
    CHECK(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][0]["dims"] == nlohmann::json::array({1, 1, 0}));
    CHECK(j["rows"][1]["dims"] == nlohmann::json::array({0, 1, 0}));
    CHECK(j["rows"][2]["dims"] == nlohmann::json::array({1, 2, 0}));
    CHECK(j["rows"][3]["dims"] == nlohmann::json::array({0, 2, 1}));
    CHECK(j["rows"][3]["generators"]["H2"][0] == "∂λ1");

    const auto b = run("zp --p 2 --weights 2..2 --format csv");
    CHECK(b.code == 0);
    CHECK(b.out.find("2,1,3,1,CERTIFIED") != std::string::npos);

    const auto v = run("zp --p 5 --weights 3..3 --mod-v1 --format csv");
    CHECK(v.code == 0);
    CHECK(v.out.find("3,0,1,0,CERTIFIED,,γ3,") != std::string::npos);
}

TEST_CASE("usage errors exit 1")
{
    CHECK(run("zp --p 4 --weights 0..1").code == 1);
    CHECK(run("zp --p 3 --weights 3..1").code == 1);
    CHECK(run("zp --p 3 --weights x").code == 1);
    CHECK(run("zp --p 3 --weights 0..2 --format xml").code == 1);
    CHECK(run("certify --p 3 --n 1").code == 1);
    CHECK(run("ktable --p 3").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("--help").code == 0);
}

TEST_CASE("certify examples")
{
    const auto a = run("certify --p 2 --n 5");
    CHECK(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["steps"].size() == 4);
    CHECK(j["verified"] == true);
    CHECK(j["independent_check"]["ok"] == true);
    CHECK(j["sampling"]["passed"] == 100);

    const auto b = run("certify --p 3 --n 2 --format md");
    CHECK(b.code == 0);
    CHECK(b.out.find("verified: yes") != std::string::npos);
}

TEST_CASE("ktable examples")
{
    const auto a = run("ktable --p 3 --n 3 --imax 8 --format csv");
    CHECK(a.code == 0);
    CHECK(a.out == "i,nonzero\n0,true\n1,false\n2,true\n3,false\n4,true\n5,false\n6,true\n7,false\n8,false\n");

    const auto b = run("ktable --p 2 --n 2 --imax 4 --format csv");
    CHECK(b.out == "i,nonzero\n0,true\n1,true\n2,false\n3,false\n4,false\n");

    const auto c = run("ktable --p 5 --n 2 --imax 10 --format json");
    CHECK(c.code == 0);
    const auto j = nlohmann::json::parse(c.out);
    for (const char* key : {"p", "n", "rows", "certificates"}) CHECK(j.contains(key));
    std::vector<int> nz;
    for (const auto& r : j["rows"])
        if (r["nonzero"] == true) nz.push_back(r["i"]);
    CHECK(nz == std::vector<int>{0, 4});
}

TEST_CASE("output files, the output-directory variable and determinism")
{
    const auto dir = scratch_dir();
    const auto f1 = dir / "a.json", f2 = dir / "b.json";
    CHECK(run("certify --p 3 --n 4 --seed 7 -o " + f1.string()).code == 0);
    CHECK(run("certify --p 3 --n 4 --seed 7 -o " + f2.string()).code == 0);
    CHECK(slurp(f1) == slurp(f2));
    CHECK_FALSE(slurp(f1).empty());

    const auto env = "SYNTOMIC_OUT_DIR=" + (dir / "out").string();
    CHECK(run("ktable --p 3 --n 2 --format md", env).code == 0);
    CHECK(fs::exists(dir / "out" / "ktable_p3_n2.md"));
    CHECK(run("zp --p 2 --weights 0..4 --format json --seed 3", env).code == 0);
    const auto first = slurp(dir / "out" / "zp_p2.json");
    CHECK(run("zp --p 2 --weights 0..4 --format json --seed 3", env).code == 0);
    CHECK(first == slurp(dir / "out" / "zp_p2.json"));
    fs::remove_all(dir);
}
