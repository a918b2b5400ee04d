#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "helpers.hpp"
#include "plinear/cli/commands.hpp"
#include "plinear/cli/poly_text.hpp"
#include "plinear/engine/sequences.hpp"
#include "plinear/errors.hpp"
#include "plinear/scheme/schemes.hpp"

using namespace plinear;
using namespace testutil;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "plinear");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path workdir()
{
    auto d = std::filesystem::temp_directory_path() / "plinear_cli_test";
    std::filesystem::create_directories(d);
    return d;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

const char* kApery = "(x+y)*(z+1)*(x+y+z)*(y+z+1)*x^-1*y^-1*z^-1";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("polynomial parsing")
{
    const std::vector<std::string> x{"x"}, xyz{"x", "y", "z"};
    CHECK(parse_poly("x + 2 + x^-1", x) == x1() + c1(2) + x1(-1));
    CHECK(parse_poly("x + 2 + 1/x", x) == x1() + c1(2) + x1(-1));
    CHECK(parse_poly(kApery, xyz) == apery_laurent());
    CHECK(parse_poly("-x + 1", x) == c1(1) - x1());
    CHECK(parse_poly("(x - 1)^3", x) == x1(3) - c1(3) * x1(2) + c1(3) * x1() - c1(1));
    CHECK(parse_poly("2*x*x - 3", x) == c1(2) * x1(2) - c1(3));
    CHECK(parse_poly("x^-2", x) == x1(-2));
    CHECK(parse_poly("0", x).is_zero());

    auto offset_of = [&](const std::string& text) -> std::string {
        try {
            parse_poly(text, x);
        } catch (const ParseError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(offset_of("x + + 1").find("offset 4") != std::string::npos);
    CHECK_THROWS_AS(parse_poly("x + y", x), ParseError);
    CHECK_THROWS_AS(parse_poly("(x + 1", x), ParseError);
    CHECK_THROWS_AS(parse_poly("2/x", x), ParseError);
    CHECK_THROWS_AS(parse_poly("(x+1)^-1", x), ParseError);
    CHECK_THROWS_AS(parse_poly("x ^ ", x), ParseError);
    CHECK_THROWS_AS(parse_poly("", x), ParseError);

    CHECK(parse_var_list("x,y,z") == xyz);
    CHECK_THROWS(parse_var_list("x,,y"));
    CHECK_THROWS(parse_var_list("x,x"));
    CHECK_THROWS(parse_var_list("1x"));
}

TEST_CASE("format and parse are inverse")
{
    const std::vector<IntLaurent> polys{apery_laurent(), franel_laurent(3), franel_laurent(4),
                                        multinomial_square_laurent(3), central_binomial_laurent(),
                                        apery_denominator()};
    for (const auto& p : polys) {
        const auto vars = default_vars(p.nvars());
        CHECK(parse_poly(format_poly(p, vars), vars) == p);
    }
    std::mt19937_64 rng(8);
    for (int it = 0; it < 50; ++it) {
        IntLaurent a = random_laurent(rng, 3, -3, 3, 6, 20);
        const std::vector<std::string> vars{"a", "b2", "c_"};
        CHECK(parse_poly(format_poly(a, vars), vars) == a);
    }
}

TEST_CASE("build, eval and verify")
{
    const auto dir = workdir();
    const std::string f3 = (dir / "b3.json").string(), f9 = (dir / "b9.json").string(),
                      fr = (dir / "r5.json").string();

    Run r = run({"build-ct", "--poly", "x + 2 + 1/x", "--vars", "x", "--p", "3", "--r", "1", "--out", f3});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("states: 1\n") != std::string::npos);
    CHECK(r.out.find("rho: 1\n") != std::string::npos);

    r = run({"build-ct", "--poly", "x + 2 + 1/x", "--vars", "x", "--p", "3", "--r", "2", "--out", f9});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("states: 6\n") != std::string::npos);
    CHECK(r.out.find("rho: 2\n") != std::string::npos);
    CHECK(r.out.find("= 6 (") != std::string::npos);

    r = run({"build-rat", "--den", "1 - x - y", "--vars", "x,y", "--p", "5", "--r", "1", "--out", fr});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("states: 1\n") != std::string::npos);

    r = run({"eval", "--scheme", f3, "--index", "4"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "1\n");
    r = run({"eval", "--scheme", f3, "--index", "4", "--trace"});
    CHECK(r.out == "digit 1: [2]\ndigit 1: [1]\n1\n");
    r = run({"eval", "--scheme", fr, "--index", "3,3"});
    CHECK(r.out == "0\n");

    CHECK(run({"eval", "--scheme", fr, "--index", "3"}).code == kExitUsage);
    CHECK(run({"eval", "--scheme", f3, "--index", "3,3"}).code == kExitUsage);
    CHECK(run({"eval", "--scheme", f3, "--index", "-3"}).code == kExitUsage);

    r = run({"verify", "--scheme", f9, "--kmax", "200"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    r = run({"verify", "--scheme", fr, "--kmax", "30", "--json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["failures"].empty());
}

TEST_CASE("corrupted scheme fails verification")
{
    const auto dir = workdir();
    const auto good = dir / "good.json", bad = dir / "bad.json";
    REQUIRE(run({"build-ct", "--poly", "x + 2 + 1/x", "--vars", "x", "--p", "3", "--r", "2", "--out", good.string()})
                .code == kExitOk);
    auto j = nlohmann::json::parse(slurp(good));
    auto& entry = j["matrix"][0][0];
    if (entry.empty())
        entry.push_back(1);
    else
        entry[0] = (entry[0].get<int>() + 1) % 9;
    std::ofstream(bad) << j.dump();
    Run r = run({"verify", "--scheme", bad.string(), "--kmax", "100"});
    CHECK(r.code == kExitVerifyFailed);
    CHECK(r.out.find("failure: k=") != std::string::npos);
    r = run({"verify", "--scheme", bad.string(), "--kmax", "100", "--json"});
    CHECK(r.code == kExitVerifyFailed);
    auto rep = nlohmann::json::parse(r.out);
    CHECK_FALSE(rep["failures"].empty());
}

TEST_CASE("suites")
{
    CHECK(run({"verify", "--suite", "gessel", "--p", "5", "--kmax", "100"}).code == kExitOk);
    CHECK(run({"verify", "--suite", "lucas", "--p", "7", "--seq", "central-binomial", "--kmax", "300"}).code ==
          kExitOk);
    CHECK(run({"verify", "--suite", "power2", "--p", "7"}).code == kExitOk);
    Run r = run({"verify", "--suite", "hasse-witt", "--p", "5", "--poly", "x^2 + x + 1 + x^-1 + x^-2", "--vars", "x",
                 "--kmax", "30", "--json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["checked"].get<int>() > 0);
    CHECK(run({"verify", "--suite", "gessel", "--p", "2"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "lucas", "--p", "5"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "nope", "--p", "5"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "gessel"}).code == kExitUsage);
}

TEST_CASE("usage and precondition errors")
{
    const auto out = (workdir() / "x.json").string();
    Run r = run({"build-ct", "--poly", "x + + 1", "--vars", "x", "--p", "3", "--r", "1", "--out", out});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("offset 4") != std::string::npos);
    CHECK(run({"build-ct", "--poly", "x + 2 + 1/x", "--vars", "x", "--p", "4", "--r", "1", "--out", out}).code ==
          kExitUsage);
    CHECK(run({"build-ct", "--poly", "x + 2 + 1/x", "--num", "x", "--vars", "x", "--p", "3", "--r", "1", "--out", out})
              .code == kExitUsage);
    CHECK(run({"build-rat", "--den", "5 - x - y", "--vars", "x,y", "--p", "5", "--r", "1", "--out", out}).code ==
          kExitUsage);
    CHECK(run({"build-ct", "--poly", "x"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"eval", "--scheme", "/nonexistent/s.json", "--index", "1"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("deterministic output")
{
    const auto dir = workdir();
    const auto a = (dir / "det_a.json").string(), b = (dir / "det_b.json").string();
    Run ra = run({"build-ct", "--poly", kApery, "--vars", "x,y,z", "--p", "3", "--r", "2", "--out", a});
    Run rb = run({"--threads", "3", "build-ct", "--poly", kApery, "--vars", "x,y,z", "--p", "3", "--r", "2", "--out", b});
    REQUIRE(ra.code == kExitOk);
    REQUIRE(rb.code == kExitOk);
    CHECK(slurp(a) == slurp(b));
    CHECK(ra.out.substr(0, ra.out.find("wrote")) == rb.out.substr(0, rb.out.find("wrote")));
}

TEST_CASE("huge index on the apery scheme mod 5")
{
    const auto f = (workdir() / "ap5.json").string();
    REQUIRE(run({"build-ct", "--poly", kApery, "--vars", "x,y,z", "--p", "5", "--r", "1", "--out", f}).code == kExitOk);
    const std::string N = "31415926535897932384626433832795028841971693993751";
    const auto t0 = std::chrono::steady_clock::now();
    Run r = run({"eval", "--scheme", f, "--index", N});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(r.code == kExitOk);
    CHECK(secs < 1.0);
    // digit product of A_0..A_4 mod 5
    const auto A = apery_numbers(4);
    Integer n(N), prod = 1;
    while (n > 0) {
        prod = prod * A[Integer(n % 5).get_ui()] % 5;
        n /= 5;
    }
    CHECK(r.out == prod.get_str() + "\n");
}

}
