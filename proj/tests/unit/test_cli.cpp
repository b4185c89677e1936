#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "turan/cli.hpp"
#include "turan/params.hpp"
#include "turan/suite.hpp"

using namespace turan;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("turan subcommand")
{
    const Run r = run({"turan", "--lambda", "0.5", "--n", "2", "--x", "0.5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("delta=0.234375\n") != std::string::npos);
    CHECK(r.out.find("phi=0.3125\n") != std::string::npos);
}

TEST_CASE("negative parameters parse")
{
    const Run r = run({"eval", "--lambda", "-0.25", "--n", "3", "--x", "-0.5", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"x\": -0.5") != std::string::npos);
}

TEST_CASE("zeros as csv")
{
    const Run r = run({"zeros", "--lambda", "0.5", "--n", "2", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header, first, second, extra;
    std::getline(in, header);
    std::getline(in, first);
    std::getline(in, second);
    CHECK(header == "k,zero,residual");
    CHECK_FALSE(std::getline(in, extra));
    const auto zero_of = [](const std::string& row) { return std::stod(row.substr(2, row.rfind(',') - 2)); };
    CHECK(zero_of(first) == doctest::Approx(-0.5773502691896258).epsilon(2e-16));
    CHECK(zero_of(second) == doctest::Approx(0.5773502691896258).epsilon(2e-16));
}

TEST_CASE("bounds subcommand")
{
    const Run r = run({"bounds", "--lambda", "0.5", "--n", "2", "--x", "0", "--family", "szasz", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,value,lower,upper,margin_low,margin_high\n", 0) == 0);

    const Run bad = run({"bounds", "--lambda", "2", "--n", "2", "--x", "0", "--family", "szasz"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("szasz") != std::string::npos);
}

TEST_CASE("usage and domain errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"turan", "--lambda", "0.5", "--n", "2", "--x", "0.5", "--bogus"}).code == 2);
    CHECK(run({"turan", "--lambda", "-0.5", "--n", "2", "--x", "0.5"}).code == 2);
    CHECK(run({"turan", "--lambda", "0.5", "--n", "0", "--x", "0.5"}).code == 2);
    CHECK(run({"eval", "--lambda", "0.5", "--n", "2", "--x", "0.5", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "--grid", "2"}).code == 2);
    CHECK(run({"verify", "--tol", "nonsense=1"}).code == 2);
    CHECK(run({"zeros", "--lambda", "0.5", "--n", "1"}).code == 0);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scan output is deterministic")
{
    const std::vector<std::string> args{"scan", "--lambda", "0.3", "--n", "7", "--grid", "41", "--xmin", "-2",
                                        "--xmax", "2"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("x,delta,phi,dphi,d2phi,lower,upper\n", 0) == 0);
    CHECK(count_lines(a.out) == 42);

    const Run byn = run({"scan", "--lambda", "0.5", "--n", "6", "--vary", "n", "--x", "0.2"});
    CHECK(byn.code == 0);
    CHECK(byn.out.rfind("n,delta\n1,", 0) == 0);
    CHECK(count_lines(byn.out) == 7);

    // Szasz bounds do not apply for lambda >= 1: the columns stay empty.
    const Run empty = run({"scan", "--lambda", "2", "--n", "3", "--grid", "3", "--family", "szasz"});
    CHECK(empty.out.find(",,\n") != std::string::npos);
}

TEST_CASE("certify writes files that re-check")
{
    const auto dir = std::filesystem::temp_directory_path() / "turan_cli_test";
    std::filesystem::remove_all(dir);
    const Run r = run({"certify", "--target", "all", "--out", dir.string()});
    CHECK(r.code == 0);
    const auto ratio = dir / "ratio_inequality.cert";
    const auto bound = dir / "bound_comparison.cert";
    REQUIRE(std::filesystem::exists(ratio));
    REQUIRE(std::filesystem::exists(bound));
    CHECK(run({"certify", "--check", ratio.string()}).code == 0);
    CHECK(run({"certify", "--check", bound.string()}).code == 0);

    std::ifstream in(ratio);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    const auto pos = text.find("coefficients ");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 14, "coefficients 7");
    std::ofstream(ratio) << text;
    CHECK(run({"certify", "--check", ratio.string()}).code == 1);
    CHECK(run({"certify", "--check", (dir / "missing.cert").string()}).code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify exit codes")
{
    const std::vector<std::string> small{"verify", "--lambda", "-0.25,0.5,3", "--n", "8", "--grid", "101"};
    CHECK(run(small).code == 0);

    auto failing = small;
    failing.insert(failing.end(), {"--tol", "ode=0"});
    const Run f = run(failing);
    CHECK(f.code == 1);
    CHECK(f.out.find("FAIL gegenbauer-core/ode_residual") != std::string::npos);

    auto json = small;
    json.insert(json.end(), {"--format", "json"});
    CHECK(run(json).out.find("\"passed\": true") != std::string::npos);
}

TEST_CASE("suite configuration")
{
    SuiteConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.grid = 2;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = SuiteConfig{};
    cfg.n_min = 5;
    cfg.n_max = 4;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = SuiteConfig{};
    cfg.tolerance_overrides["turan"] = 0.5;
    CHECK(cfg.tolerance("turan") == 0.5);
    CHECK(cfg.tolerance("ode") == default_tolerances().at("ode"));

    const auto g = grid_points(-1, 1, 5);
    CHECK(g == std::vector<double>{-1, -0.5, 0, 0.5, 1});
}
