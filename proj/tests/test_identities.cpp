#include <doctest.h>

#include <set>

#include <sepq/errors.hpp>
#include <sepq/identities.hpp>

#include "support.hpp"

using namespace sepq;

TEST_CASE("registry contents")
{
    const std::vector<std::string> expected = {
        "T1.1",      "T1.2",      "T1.3",          "T1.4",          "T1.5",    "T1.6",    "T1.7",
        "T1.8",      "T2.1",      "T2.2",          "T2.3",          "T2.4",    "BG1",     "BG2",
        "RED1",      "RED2",      "RED3",          "RED4",          "X-R2",    "X-IH",    "L-LIM",
        "P-HEINE-1", "P-HEINE-2", "P-HEINE-LIM-1", "P-HEINE-LIM-2", "P-IH-1",  "P-ASV-1", "P-ASV-2",
        "P-ASV-3",   "P-PT-1",    "P-PT-2",        "P-PTC-1",       "P-PTC-2", "P-PTC-3", "P-PTC-4"};
    std::vector<std::string> ids;
    for (const auto &e : registry()) {
        ids.push_back(e.id);
        CHECK_FALSE(e.description.empty());
        CHECK_FALSE(e.anchor.empty());
        CHECK(e.components >= 1);
        const auto exprs = e.expressions(0);
        CHECK(exprs.size() >= 2);
        std::set<std::string> labels;
        for (const auto &x : exprs) {
            labels.insert(x.label);
        }
        CHECK(labels.size() == exprs.size());
    }
    CHECK(ids == expected);
    CHECK(find_identity("T2.3").id == "T2.3");
    CHECK_THROWS_AS(find_identity("T9.9"), UnknownIdentity);
    CHECK_THROWS_AS(check("nope", 10), UnknownIdentity);
}

TEST_CASE("theorem entries carry oracle, construction and closed forms")
{
    for (const auto &e : registry()) {
        if (e.id.rfind("T", 0) != 0) {
            continue;
        }
        const auto exprs = e.expressions(0);
        INFO(e.id);
        CHECK(exprs.front().label == "oracle");
        CHECK(exprs.back().label == "closed");
        CHECK(exprs.size() == (e.id == "T2.4" ? 2u : 3u));
    }
}

TEST_CASE("theorem identities pass")
{
    CHECK(check("T1.1", 50).pass);
    CHECK(check("T1.3", 80).pass);
    CHECK(check("T2.2", 60).pass);
    CHECK(check("BG2", 40).pass);
}

TEST_CASE("a perturbation is reported at its exponent")
{
    const auto r = check("T1.1", 50, 7);
    CHECK_FALSE(r.pass);
    REQUIRE(r.mismatch.has_value());
    CHECK(r.mismatch->exponent == 7);
    CHECK_FALSE(r.mismatch->component.has_value());
    REQUIRE(r.mismatch->values.size() == 3);
    CHECK(r.mismatch->values[0].first == "oracle");
    CHECK(r.mismatch->values[2].first == "closed");
    CHECK(r.mismatch->values[2].second == r.mismatch->values[0].second + 1);
    CHECK_THROWS_AS(check("T1.1", 50, 50), std::invalid_argument);
    CHECK_THROWS_AS(check("T1.1", 0), std::invalid_argument);
}

TEST_CASE("multi-component entries report the component")
{
    CHECK(check("L-LIM", 20).pass);
    const auto r = check("L-LIM", 20, 3);
    CHECK_FALSE(r.pass);
    REQUIRE(r.mismatch.has_value());
    CHECK(r.mismatch->component == 0);
    CHECK(r.mismatch->exponent == 3);
}

TEST_CASE("lattice counts")
{
    CHECK(lattice_r2(0) == 1);
    CHECK(lattice_r2(1) == 4);
    CHECK(lattice_r2(2) == 4);
    CHECK(lattice_r2(3) == 0);
    CHECK(lattice_r2(5) == 8);
    CHECK(lattice_r2(25) == 12);
    CHECK(check("X-R2", 200).pass);
}

TEST_CASE("modified counts refine overlined counts")
{
    for (const auto &cfg : all_configs()) {
        const auto m = series_sep(cfg, Variant::Modified, 60);
        const auto o = series_sep(cfg, Variant::Overlined, 60);
        for (int k = 0; k < 60; ++k) {
            CHECK(m.coefficient(k) <= o.coefficient(k));
        }
    }
}
