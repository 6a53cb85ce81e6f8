#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jackcc/config.hpp"
#include "jackcc/errors.hpp"
#include "jackcc/report.hpp"
#include "jackcc/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jackcc;

namespace {

const AlphaPoly a = AlphaPoly::variable();

std::vector<std::string> lines(const std::string & text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

bool has_check(const VerificationReport & r, const std::string & description)
{
    return std::ranges::any_of(r.checks, [&](auto const & c) { return c.description == description && c.pass; });
}

NnTable nn_table(int n)
{
    NnTable t{n, {}};
    for (auto const & lambda : generate_partitions(n))
        t.rows.emplace_back(lambda, a_nn_recurrence(lambda));
    return t;
}

} // namespace

TEST_CASE("pretty forms")
{
    CHECK(pretty(substitute_beta(a_nn_recurrence({3})), "β") == "2β²+β+1");
    CHECK(pretty(a_nn_recurrence({3})) == "2α²-3α+2");
    CHECK(pretty(AlphaPoly()) == "0");
    CHECK(pretty(AlphaPoly(ratio(-1, 2)) * a) == "-1/2α");
    CHECK(pretty_factored(hooks({2}).j) == "2α²(α+1)");
    CHECK(pretty_factored(hooks({1, 1}).j) == "2α(α+1)");
    CHECK(pretty_factored(a_nn_recurrence({2, 1})) == "2α(α-1)");
    CHECK(pretty_factored(a_nn_recurrence({3})) == "(2α²-3α+2)");
    CHECK(pretty_factored(AlphaPoly(ratio(3, 2))) == "3/2");
    CHECK(pretty_factored(-(AlphaPoly(2) * a + AlphaPoly(1)) * a) == "-α(2α+1)");
    CHECK(pretty_factored((a + AlphaPoly(1)) * (a + AlphaPoly(1))) == "(α+1)²");
    CHECK(coefficient_label("c", {5}) == "c⁵₅₅");
    CHECK(coefficient_label("b̃", {1, 1}) == "b̃^(1,1)₂₂");
}

TEST_CASE("polynomial and vector JSON")
{
    Json p = to_json(a_nn_recurrence({3}));
    CHECK(p.dump() == R"([["2","1"],["-3","1"],["2","1"]])");
    CHECK(to_json(AlphaPoly()).dump() == "[]");
    CHECK(to_json(AlphaPoly(ratio(-1, 2))).dump() == R"([["-1","2"]])");
    CHECK(poly_from_json(p) == a_nn_recurrence({3}));

    RatFunc f(a - AlphaPoly(1), a + AlphaPoly(2));
    CHECK(to_json(f).dump() == R"({"num":[["-1","1"],["1","1"]],"den":[["2","1"],["1","1"]]})");
    CHECK(ratfunc_from_json(to_json(f)) == f);

    PSumVector v = jack_in_p({2, 1});
    CHECK(psum_from_json(to_json(v)) == v);
    CHECK(to_json(v)["terms"][0]["mu"] == "3");

    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([["1"]])")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([["1","0"]])")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([["x","1"]])")), std::invalid_argument);
    CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num":[],"den":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(psum_from_json(Json::parse(R"({"degree":2,"terms":[{"mu":"3","coeff":{"num":[["1","1"]],"den":[["1","1"]]}}]})")),
                    DegreeMismatch);
}

TEST_CASE("Jack table JSON round trip")
{
    for (int n : {2, 4}) {
        std::string text = render(*jack_table(n), Format::json);
        JackTable back = jack_table_from_json(Json::parse(text));
        CHECK(back == *jack_table(n));
        CHECK(render(back, Format::json) == text);
    }
}

TEST_CASE("a_nn table output")
{
    auto csv = lines(render(nn_table(3), Format::csv));
    REQUIRE(csv.size() == 4);
    CHECK(csv[0] == "lambda,alpha,beta");
    CHECK(csv[1] == "3,2 - 3*a + 2*a^2,1 + b + 2*b^2");
    CHECK(csv[2] == "\"2,1\",-2*a + 2*a^2,2*b + 2*b^2");
    CHECK(csv[3] == "\"1,1,1\",2*a^2,2 + 4*b + 2*b^2");
    CHECK(lines(render(nn_table(3), Format::text)).size() == 3);
    Json j = Json::parse(render(nn_table(3), Format::json));
    CHECK(j["rows"].size() == 3);
    CHECK(poly_from_json(j["rows"][1]["alpha"]) == a_nn_recurrence({2, 1}));
}

TEST_CASE("partition listings")
{
    PartitionList four{4, generate_partitions(4)};
    auto text = lines(render(four, Format::text));
    CHECK(text.size() == 5);
    CHECK(text[0].starts_with("4 "));
    CHECK(text[4].starts_with("1,1,1,1"));
    CHECK(lines(render(four, Format::csv)).size() == 6);
    CHECK(Json::parse(render(four, Format::json))["partitions"].size() == 5);
}

TEST_CASE("matching listings")
{
    MatchingListing m{enumerate_good({3}), true};
    auto csv = lines(render(m, Format::csv));
    REQUIRE(csv.size() == 5);
    CHECK(csv[0] == "matching,weight,bipartite");
    int bipartite_rows = 0;
    for (std::size_t i = 1; i < csv.size(); ++i) {
        CHECK(csv[i].front() == '"');
        if (csv[i].ends_with(",0,true"))
            ++bipartite_rows;
    }
    CHECK(bipartite_rows == 1);
    MatchingListing plain{enumerate_good({2}), false};
    CHECK(lines(render(plain, Format::csv))[1] == "\"1-2,1^-2^\",,false");
    CHECK(Json::parse(render(m, Format::json))["count"] == 4);
}

TEST_CASE("coefficient output")
{
    CoeffReport c{"a^(3)_{(3),(3)}", make_result(RatFunc(a_nn_recurrence({3})))};
    CHECK(render(c, Format::text) == "a^(3)_{(3),(3)} = 2 - 3*a + 2*a^2\n  at a = b + 1: 1 + b + 2*b^2\n");
    c.prefer_beta = true;
    CHECK(render(c, Format::text) == "a^(3)_{(3),(3)} = 1 + b + 2*b^2  (b = a - 1)\n");
    CHECK(lines(render(c, Format::csv))[1] == "\"a^(3)_{(3),(3)}\",2 - 3*a + 2*a^2,1 + b + 2*b^2");
    CoeffReport r{"x", make_result(RatFunc(AlphaPoly(1), a))};
    CHECK(Json::parse(render(r, Format::json))["beta"].is_null());
}

TEST_CASE("suites")
{
    VerificationReport mj = run_suite("matchings-jack", 3);
    CHECK(mj.passed());
    CHECK(has_check(mj, "(3): 2β²+β+1"));

    VerificationReport comb = run_suite("comb-rec", 5);
    CHECK(comb.passed());
    CHECK(has_check(comb, "c⁵₅₅ = 8"));
    CHECK(has_check(comb, "b̃³₃₃ = 4"));

    VerificationReport orth = run_suite("orthogonality", 2);
    CHECK(orth.passed());
    CHECK(has_check(orth, "⟨J(2),J(2)⟩ = 2α²(α+1)"));

    for (auto const & name : suite_names()) {
        VerificationReport r = run_suite(name, std::min(default_max_n(name), 3));
        CHECK_MESSAGE(r.passed(), name);
        CHECK(!r.checks.empty());
    }

    CHECK(default_max_n("matchings-jack") == 6);
    CHECK(default_max_n("gen-coeff") == 5);
    CHECK_THROWS_AS(run_suite("nope", 3), UnknownSuite);
    CHECK_THROWS_AS(default_max_n("nope"), UnknownSuite);
    int saved = degree_bound();
    set_degree_bound(4);
    CHECK_THROWS_AS(run_suite("thm-rec", 4), DegreeTooLarge);
    set_degree_bound(saved);
}

TEST_CASE("report output is byte-stable")
{
    std::string one = render(run_suite("comb-rec", 4, 1), Format::json);
    std::string many = render(run_suite("comb-rec", 4, 4), Format::json);
    CHECK(one == many);
    CHECK(render(run_suite("thm-rec", 2, 3), Format::csv) == render(run_suite("thm-rec", 2, 1), Format::csv));

    VerificationReport r = run_suite("i-indep", 3);
    CHECK(render(r, Format::text).find("elapsed") == std::string::npos);
    CHECK(render(r, Format::text, {.timing = true}).find("elapsed") != std::string::npos);
    CHECK(!Json::parse(render(r, Format::json)).contains("elapsed_ms"));
    CHECK(Json::parse(render(r, Format::json, {.timing = true})).contains("elapsed_ms"));
    auto text = lines(render(r, Format::text));
    CHECK(text.front() == "suite i-indep, n = 2..3");
    CHECK(text.back() == std::to_string(r.checks.size()) + " checks, 0 failed");
}

TEST_CASE("failed checks show both sides")
{
    VerificationReport r{"demo", 1, 1, {{"x = y", false, "1", "2"}, {"ok", true, "", ""}}, 0};
    CHECK(!r.passed());
    CHECK(r.failures() == 1);
    CHECK(render(r, Format::text) == "suite demo, n = 1..1\nFAIL  x = y\n      lhs: 1\n      rhs: 2\nPASS  ok\n2 checks, 1 failed\n");
    CHECK(lines(render(r, Format::csv))[1] == "x = y,false,1,2");
}

TEST_CASE("formats and files")
{
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS_AS(parse_format("xml"), UnsupportedFormat);
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("2,1") == "\"2,1\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");

    auto path = std::filesystem::temp_directory_path() / "jackcc_report_test.csv";
    emit(nn_table(2), Format::csv, path.string());
    std::ifstream in(path);
    std::stringstream got;
    got << in.rdbuf();
    CHECK(got.str() == render(nn_table(2), Format::csv));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(write_output("x", std::string("/nonexistent-dir/out.txt")), IoError);
}
