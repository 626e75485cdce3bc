#include <doctest.h>

#include <json.hpp>

#include <sepq/errors.hpp>
#include <sepq/report.hpp>

using namespace sepq;

namespace
{

LaurentSeries poly(std::vector<long> c, int trunc)
{
    std::vector<Rational> r(c.begin(), c.end());
    r.resize(static_cast<std::size_t>(trunc));
    return LaurentSeries(0, trunc, std::move(r));
}

} // namespace

TEST_CASE("compare_series finds the earliest disagreement")
{
    const auto a = poly({1, 2, 3, 4}, 6);
    const auto b = poly({1, 2, 3, 5}, 6);
    const auto c = poly({1, 2, 9, 4}, 6);
    const auto r = compare_series("x", 6, {{"a", a}, {"b", b}, {"c", c}});
    CHECK_FALSE(r.pass);
    REQUIRE(r.mismatch.has_value());
    CHECK(r.mismatch->exponent == 2);
    CHECK(r.mismatch->values == std::vector<std::pair<std::string, Rational>>{{"a", 3}, {"b", 3}, {"c", 9}});
    CHECK(compare_series("x", 3, {{"a", a}, {"b", b}}).pass);
    CHECK_THROWS_AS(compare_series("x", 8, {{"a", a}, {"b", b}}), OutOfPrecision);
}

TEST_CASE("passing reports in JSON")
{
    const CheckReport r{"T1.1", 100, true, std::nullopt};
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j.at("id") == "T1.1");
    CHECK(j.at("order") == 100);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("mismatch").is_null());
    CHECK(j.size() == 4);
    CHECK(report_from_json(report_to_json(r)) == r);
    CHECK(report_to_json(r).find('\n') == std::string::npos);
    CHECK(report_to_json(r, 2).find('\n') != std::string::npos);
}

TEST_CASE("failing reports round-trip with rational strings")
{
    CheckReport r{"L-LIM", 20, false, Mismatch{3, 5, {{"top", Rational(-7, 2)}, {"closed", Rational(1)}}}};
    const auto text = report_to_json(r);
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("status") == "fail");
    CHECK(j.at("mismatch").at("exponent") == 3);
    CHECK(j.at("mismatch").at("component") == 5);
    CHECK(j.at("mismatch").at("values").at("top") == "-7/2");
    CHECK(j.at("mismatch").at("values").at("closed") == "1");
    CHECK(report_from_json(text) == r);

    r.mismatch->component.reset();
    const auto j2 = nlohmann::json::parse(report_to_json(r));
    CHECK_FALSE(j2.at("mismatch").contains("component"));
    CHECK(report_from_json(report_to_json(r)) == r);
}

TEST_CASE("malformed reports are rejected")
{
    CHECK_THROWS(report_from_json(R"({"id":"a","order":1,"status":"maybe","mismatch":null})"));
    CHECK_THROWS(report_from_json(R"({"id":"a","order":1,"status":"fail","mismatch":null})"));
    CHECK_THROWS(report_from_json(
        R"({"id":"a","order":1,"status":"pass","mismatch":{"exponent":0,"values":{"x":"1"}}})"));
    CHECK_THROWS(report_from_json(R"({"id":"a","status":"pass","mismatch":null})"));
    CHECK_THROWS(report_from_json("not json"));
}

TEST_CASE("text reports")
{
    CHECK(report_to_text({"T1.1", 100, true, std::nullopt}) == "T1.1  order 100  pass");
    const auto t = report_to_text({"T1.2", 50, false, Mismatch{7, std::nullopt, {{"oracle", 4}, {"closed", 5}}}});
    CHECK(t.find("FAIL") != std::string::npos);
    CHECK(t.find("q^7") != std::string::npos);
    CHECK(t.find("oracle=4") != std::string::npos);
    CHECK(t.find("closed=5") != std::string::npos);
}
