#include "hypfam/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>

using namespace hypfam;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("gen")
{
    Run r = run({"gen", "--family", "laguerre", "--b", "1", "--n", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    json d = r.doc();
    CHECK(d["schema_version"] == "1");
    CHECK(d["command"] == "gen");
    CHECK(d["results"]["polynomials"][2]["n"] == 2);
    CHECK(d["results"]["polynomials"][2]["coeffs"] == json{"2", "-4", "1"});
    CHECK(r.err.empty());

    r = run({"gen", "--family", "e", "--c", "1", "--n", "1"});
    CHECK(r.doc()["results"]["polynomials"][1]["coeffs"] == json{"1/8", "1"});

    r = run({"gen", "--family", "jacobi", "--a", "0", "--b", "1", "--n", "3", "--method", "all"});
    REQUIRE(r.code == 0);
    for (const auto& a : r.doc()["results"]["agreement"])
        CHECK(a["agreement"] == true);

    r = run({"gen", "--family", "laguerre", "--b", "1", "--n", "1", "--format", "csv"});
    CHECK(r.out == "family,n,k,value\n\"laguerre(b=1)\",0,0,1\n\"laguerre(b=1)\",1,0,-1\n\"laguerre(b=1)\",1,1,1\n");

    r = run({"gen", "--family", "laguerre", "--b", "1", "--n", "2", "--normalization", "hyper"});
    CHECK(r.doc()["results"]["polynomials"][2]["coeffs"] == json{"1", "-2", "1/2"});
}

TEST_CASE("gen rejects bad input with exit 2")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"gen", "--family", "f", "--c", "0", "--n", "3"},
             {"gen", "--family", "jacobi", "--a", "-1", "--b", "1", "--n", "3"},
             {"gen", "--family", "laguerre", "--n", "3"},
             {"gen", "--family", "laguerre", "--b", "1", "--c", "2", "--n", "3"},
             {"gen", "--family", "hermite", "--n", "3"},
             {"gen", "--family", "e", "--c", "1/0", "--n", "3"},
             {"gen", "--family", "e", "--c", "1", "--n", "-1"},
             {"gen", "--family", "e", "--c", "1", "--n", "2", "--method", "magic"},
             {"gen", "--family", "e", "--c", "1", "--n", "2", "--rescale", "0"},
             {"gen", "--bogus"},
             {}}) {
        const Run r = run(args);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    const Run r = run({"gen", "--family", "f", "--c", "0", "--n", "3"});
    CHECK(r.err.find("c in Z<=0") != std::string::npos);
}

TEST_CASE("verify")
{
    Run r = run({"verify", "--family", "bessel", "--a", "0", "--max-n", "10"});
    CHECK(r.code == 0);
    CHECK(r.doc()["results"]["beta1_exception"] == true);
    CHECK(r.doc()["results"]["passed"] == true);

    r = run({"verify", "--preset", "appendix-pcl", "--c", "2", "--lambda", "1/2", "--max-n", "12"});
    CHECK(r.code == 0);
    r = run({"verify", "--preset", "appendix-rl", "--l", "1", "--lambda", "2", "--max-n", "8"});
    CHECK(r.code == 0);
    r = run({"verify", "--preset", "lommel", "--c", "3/2", "--max-n", "6"});
    CHECK(r.code == 0);

    r = run({"verify", "--family", "f", "--c", "0", "--max-n", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("c in Z<=0") != std::string::npos);

    // Defined but not quasi-orthogonal: the Gram check fails.
    r = run({"verify", "--family", "jacobi", "--a", "0", "--b", "1", "--max-n", "4"});
    CHECK(r.code == 1);
    CHECK(r.doc()["results"]["passed"] == false);

    CHECK(run({"verify", "--preset", "nope", "--c", "1"}).code == 2);
    CHECK(run({"verify", "--preset", "appendix-pcl", "--c", "2"}).code == 2);
    CHECK(run({"verify", "--preset", "appendix-rl", "--l", "0", "--lambda", "1"}).code == 2);
}

TEST_CASE("classify")
{
    Run r = run({"classify", "--numerator", "(s-u)*(s+u+2)", "--denominator", "(s+1)^2"});
    REQUIRE(r.code == 0);
    json res = r.doc()["results"];
    CHECK(res["family"] == "jacobi");
    CHECK(res["params"]["a"] == "2");
    CHECK(res["params"]["b"] == "1");

    r = run({"classify", "--numerator", "3*(s-u)", "--denominator", "(s+1)*(s+2)"});
    res = r.doc()["results"];
    CHECK(res["family"] == "laguerre");
    CHECK(res["params"]["b"] == "2");
    CHECK(res["rescale"] == "3");

    r = run({"classify", "--numerator", "(s-u)*(s+u+1)", "--denominator", "(s+1)*(u+s+3)"});
    CHECK(r.code == 3);
    CHECK(r.doc()["results"]["error"] == "NotJacobiType");
    CHECK(r.doc()["results"].contains("partial"));

    CHECK(run({"classify", "--numerator", "(s-u)^2", "--denominator", "s+1"}).code == 4);
    CHECK(run({"classify", "--numerator", "s^2+u", "--denominator", "s+1"}).code == 5);
    CHECK(run({"classify", "--numerator", "s+", "--denominator", "s+1"}).code == 2);
    CHECK(run({"classify", "--numerator", "s", "--denominator", "0"}).code == 2);
}

TEST_CASE("ortho")
{
    Run r = run({"ortho", "--family", "e", "--c", "3/2", "--max-n", "2", "--zeros", "10000"});
    REQUIRE(r.code == 0);
    const json res = r.doc()["results"];
    CHECK(res["zeros"] == 10000);
    CHECK(res["entries"][0]["rel_err"].get<double>() <= 2e-4);

    r = run({"ortho", "--family", "f", "--c", "1", "--max-n", "2", "--zeros", "2000"});
    for (const auto& e : r.doc()["results"]["entries"])
        if (e["n"] != e["m"])
            CHECK(std::fabs(e["lhs"].get<double>()) <= 1e-8);

    CHECK(run({"ortho", "--family", "e", "--c", "-1/2", "--max-n", "2", "--zeros", "10"}).code == 2);
    CHECK(run({"ortho", "--family", "f", "--c", "-1", "--max-n", "2", "--zeros", "10"}).code == 2);
    CHECK(run({"ortho", "--family", "jacobi", "--c", "1"}).code == 2);
}

TEST_CASE("output is deterministic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"gen", "--family", "f", "--c", "5/2", "--n", "6", "--method", "all"},
             {"verify", "--preset", "appendix-pcl", "--c", "3/2", "--lambda", "-3", "--max-n", "6"},
             {"ortho", "--family", "f", "--c", "-1/2", "--max-n", "1", "--zeros", "500"}}) {
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
