#include "polecount/records.hpp"
#include "polecount/sphere.hpp"
#include "polecount/transparent.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() { return POLECOUNT_CLI_PATH; }

int run(const std::string& args)
{
    const std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct TempDir {
    std::string path;
    TempDir()
    {
        char tmpl[] = "/tmp/polecount_test_XXXXXX";
        path = mkdtemp(tmpl);
    }
    ~TempDir() { std::system(("rm -rf " + path).c_str()); }
    std::string file(const std::string& name) const { return path + "/" + name; }
};

} // namespace

TEST_CASE("constant subcommand emits the two-route report")
{
    TempDir td;
    const std::string out = td.file("c.json");
    CHECK(run("constant --n 3 --out " + out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["a_area"].get<double>() > 1.73);
    CHECK(j["a_area"].get<double>() < 1.75);
    CHECK(j["a_boundary"].get<double>() > 1.73);
    CHECK(j["a_boundary"].get<double>() < 1.75);
    CHECK(j["config"]["n"] == 3);
    CHECK(j.contains("version"));
    CHECK(j["identity_residuals"]["two_route_rel"].get<double>() <= 1e-4);
}

TEST_CASE("sphere-count: empty below the first resonance, CSV schema, determinism")
{
    TempDir td;
    const std::string out = td.file("s.json");
    CHECK(run("sphere-count --n 3 --radius 1 --rmax 0.5 --out " + out) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["total"] == 0);

    const std::string csv1 = td.file("z1.csv"), csv2 = td.file("z2.csv");
    const std::string out2 = td.file("s2.json"), out3 = td.file("s3.json");
    CHECK(run("sphere-count --n 3 --radius 1 --rmax 12 --emit-zeros " + csv1 + " --out " + out2) == 0);
    CHECK(run("sphere-count --n 3 --radius 1 --rmax 12 --emit-zeros " + csv2 + " --out " + out3) == 0);
    const std::string body1 = slurp(csv1);
    CHECK(body1 == slurp(csv2));          // byte-identical reruns
    CHECK(slurp(out2) == slurp(out3));
    CHECK(body1.rfind("l,twice_nu,re,im,multiplicity\n", 0) == 0);

    // CSV round trip matches the library table
    std::ifstream is(csv1);
    const auto recs = polecount::read_records_csv(is);
    const auto lib = polecount::sphere_table(3, 1.0, 12.0);
    REQUIRE(recs.size() == lib.size());
    long long total = 0;
    for (const auto& r : recs) total += r.multiplicity;
    const auto j2 = nlohmann::json::parse(slurp(out2));
    CHECK(j2["total"].get<long long>() == total);
}

TEST_CASE("transparent-count CSV carries the family column")
{
    TempDir td;
    const std::string csv = td.file("t.csv"), out = td.file("t.json");
    CHECK(run("transparent-count --n 3 --c 3 --radius 1 --rmax 14 --emit-zeros " + csv +
              " --out " + out) == 0);
    CHECK(slurp(csv).rfind("l,twice_nu,re,im,multiplicity,family\n", 0) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["total"].get<long long>() ==
          j["boundary_family"].get<long long>() + j["interior_family"].get<long long>());

    std::ifstream is(csv);
    const auto recs = polecount::read_records_csv(is);
    const auto lib = polecount::transparent_table(3, 3.0, 1.0, 14.0);
    CHECK(recs.size() == lib.size());
}

TEST_CASE("approx-resonances and eye-boundary")
{
    TempDir td;
    const std::string csv = td.file("a.csv"), out = td.file("a.json");
    CHECK(run("approx-resonances --n 3 --rmax 10 --emit-zeros " + csv + " --out " + out) == 0);
    std::ifstream is(csv);
    const auto recs = polecount::read_records_csv(is);
    CHECK(!recs.empty());
    for (const auto& r : recs) {
        CHECK(r.family == polecount::Family::sphere_olver);
        CHECK(r.lambda.imag() < 0.0);
    }

    const std::string eye = td.file("eye.csv");
    CHECK(run("eye-boundary --samples 16 --out " + eye) == 0);
    const std::string body = slurp(eye);
    CHECK(body.rfind("t,re,im\n", 0) == 0);
    CHECK(std::count(body.begin(), body.end(), '\n') == 17);
}

TEST_CASE("counting-compare consumes an emitted CSV")
{
    TempDir td;
    const std::string csv = td.file("z.csv"), out = td.file("cc.json");
    REQUIRE(run("sphere-count --n 3 --radius 1 --rmax 12 --emit-zeros " + csv) == 0);
    CHECK(run("counting-compare --n 3 --radius 1 --R 1.01 --r 10 --in " + csv + " --out " + out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["r"] == 10.0);
    CHECK(j["N"].get<long long>() > 0);
    CHECK(j["M"].get<double>() > 0.0);
    CHECK(j["weyl"].get<long long>() > 0);
    CHECK(j["lhs"].get<double>() <= j["rhs"].get<double>());
}

TEST_CASE("invalid configurations exit with status 2")
{
    CHECK(run("sphere-count --n 4 --rmax 5") == 2);
    CHECK(run("sphere-count --n 3 --radius -1 --rmax 5") == 2);
    CHECK(run("sphere-count --n 3 --rmax 5 --tol 1") == 2);
    CHECK(run("transparent-count --n 3 --c 1 --rmax 5") == 2);
    CHECK(run("transparent-count --n 3 --c -2 --rmax 5") == 2);
    CHECK(run("counting-compare --n 3 --r 10 --in /nonexistent.csv") == 3);
}
