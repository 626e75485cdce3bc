#include <doctest.h>

#include <set>

#include <sepq/enumeration.hpp>

#include "support.hpp"

using namespace sepq;

namespace
{

const SepConfig od_eu{Parity::Odd, Restriction::Distinct, Restriction::Unrestricted};

std::vector<std::string> rendered(const std::vector<DecoratedPartition> &ps)
{
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(p.to_string());
    }
    return out;
}

} // namespace

TEST_CASE("family names parse and print")
{
    CHECK(od_eu.name() == "od/eu");
    CHECK(SepConfig::parse("od/eu") == od_eu);
    CHECK(SepConfig::parse("ODEU") == od_eu);
    CHECK(SepConfig::parse("od^eu") == od_eu);
    CHECK_THROWS_AS(SepConfig::parse("od/ou"), std::invalid_argument);
    CHECK_THROWS_AS(SepConfig::parse("xx/yy"), std::invalid_argument);
    CHECK(all_configs().size() == 8);
    std::set<std::string> names;
    for (const auto &c : all_configs()) {
        names.insert(c.name());
        CHECK(SepConfig::parse(c.name()) == c);
    }
    CHECK(names.size() == 8);
    CHECK(parse_variant("over") == Variant::Overlined);
    CHECK(parse_variant("modified") == Variant::Modified);
    CHECK_THROWS_AS(parse_variant("fancy"), std::invalid_argument);
}

TEST_CASE("the six overlined od/eu partitions of 3")
{
    const auto ps = enumerate_sep(od_eu, Variant::Overlined, 3);
    CHECK(rendered(ps) == std::vector<std::string>{"3", "3~", "2+1", "2+1~", "2~+1", "2~+1~"});
    CHECK(count_sep(od_eu, Variant::Overlined, 3) == 6);
}

TEST_CASE("the three modified od/eu partitions of 3")
{
    const auto ps = enumerate_sep(od_eu, Variant::Modified, 3);
    CHECK(rendered(ps) == std::vector<std::string>{"3", "2+1", "2~+1"});
    CHECK(count_sep(od_eu, Variant::Modified, 3) == 3);
}

TEST_CASE("n = 0 gives only the empty partition")
{
    for (const auto &cfg : all_configs()) {
        for (auto v : sepq::testing::all_variants()) {
            const auto ps = enumerate_sep(cfg, v, 0);
            REQUIRE(ps.size() == 1);
            CHECK(ps[0].parts.empty());
            CHECK(ps[0].to_string().empty());
            CHECK(count_sep(cfg, v, 0) == 1);
        }
    }
}

TEST_CASE("small counts")
{
    const auto ou_eu = SepConfig::parse("ou/eu");
    CHECK(count_sep(ou_eu, Variant::Overlined, 1) == 2);
    CHECK(count_sep(od_eu, Variant::Plain, 3) == 2);
    const auto eu_ou = SepConfig::parse("eu/ou");
    const auto s = series_sep(eu_ou, Variant::Overlined, 2);
    CHECK(s.coefficient(0) == 1);
    CHECK(s.coefficient(1) == 2);
    const auto od_ed = SepConfig::parse("od/ed");
    const auto t = series_sep(od_ed, Variant::Overlined, 2);
    CHECK(t.coefficient(0) == 1);
    CHECK(t.coefficient(1) == 2);
    for (const auto &cfg : all_configs()) {
        CHECK(series_sep(cfg, Variant::Plain, 1) == LaurentSeries::one(1));
    }
}

TEST_CASE("overpartition counts")
{
    CHECK(count_overpartitions(0) == 1);
    CHECK(count_overpartitions(3) == 8);
    CHECK(count_overpartitions(4) == 14);
    // Against a brute force over partitions of n.
    for (int n = 0; n <= 15; ++n) {
        mpz_class c = 0;
        std::vector<int> cur;
        sepq::testing::partitions(n, n, cur, [&](const std::vector<int> &p) {
            c += mpz_class(1) << std::set<int>(p.begin(), p.end()).size();
        });
        CHECK(count_overpartitions(n) == c);
    }
}

TEST_CASE("enumeration, weighted DP and naive filter agree")
{
    for (const auto &cfg : all_configs()) {
        for (auto v : sepq::testing::all_variants()) {
            const auto table = count_sep_table(cfg, v, 16);
            for (int n = 0; n <= 16; ++n) {
                const auto ps = enumerate_sep(cfg, v, n);
                INFO(cfg.name(), " ", to_string(v), " n=", n);
                CHECK(mpz_class(static_cast<unsigned long>(ps.size())) == table[static_cast<std::size_t>(n)]);
                CHECK(sepq::testing::naive_count(cfg, v, n) == table[static_cast<std::size_t>(n)]);
            }
        }
    }
}

TEST_CASE("every enumerated partition is valid and distinct")
{
    for (const auto &cfg : all_configs()) {
        for (auto v : sepq::testing::all_variants()) {
            for (int n = 0; n <= 12; ++n) {
                const auto ps = enumerate_sep(cfg, v, n);
                std::set<std::string> seen;
                for (const auto &p : ps) {
                    CHECK(is_valid(p, cfg, v, n));
                    seen.insert(p.to_string());
                }
                CHECK(seen.size() == ps.size());
            }
        }
    }
}

TEST_CASE("the validator rejects broken partitions")
{
    const auto bad = [](std::vector<Part> parts) { return DecoratedPartition{std::move(parts)}; };
    // Even part below an odd part in od/eu.
    CHECK_FALSE(is_valid(bad({{3, false}, {2, false}}), od_eu, Variant::Plain, 5));
    // Repeated odd part in a distinct block.
    CHECK_FALSE(is_valid(bad({{1, false}, {1, false}}), od_eu, Variant::Plain, 2));
    // Overline on a distinct part in the modified variant.
    CHECK_FALSE(is_valid(bad({{1, true}}), od_eu, Variant::Modified, 1));
    // Overline on a repeated copy.
    CHECK_FALSE(is_valid(bad({{2, false}, {2, true}}), od_eu, Variant::Overlined, 4));
    // Any overline in the plain variant.
    CHECK_FALSE(is_valid(bad({{2, true}}), od_eu, Variant::Plain, 2));
    // Increasing sizes and wrong totals.
    CHECK_FALSE(is_valid(bad({{1, false}, {2, false}}), od_eu, Variant::Plain, 3));
    CHECK_FALSE(is_valid(bad({{2, false}}), od_eu, Variant::Plain, 3));
    CHECK(is_valid(bad({{2, true}, {2, false}, {1, false}}), od_eu, Variant::Overlined, 5));
}

TEST_CASE("plain <= modified <= overlined pointwise")
{
    for (const auto &cfg : all_configs()) {
        const auto p = count_sep_table(cfg, Variant::Plain, 40);
        const auto m = count_sep_table(cfg, Variant::Modified, 40);
        const auto o = count_sep_table(cfg, Variant::Overlined, 40);
        for (int n = 0; n <= 40; ++n) {
            const auto k = static_cast<std::size_t>(n);
            CHECK(p[k] <= m[k]);
            CHECK(m[k] <= o[k]);
        }
    }
}

TEST_CASE("modified reduces to overlined or plain")
{
    for (const auto &cfg : all_configs()) {
        const auto m = count_sep_table(cfg, Variant::Modified, 40);
        if (cfg.low == Restriction::Unrestricted && cfg.high == Restriction::Unrestricted) {
            CHECK(m == count_sep_table(cfg, Variant::Overlined, 40));
        }
        if (cfg.low == Restriction::Distinct && cfg.high == Restriction::Distinct) {
            CHECK(m == count_sep_table(cfg, Variant::Plain, 40));
        }
    }
}

TEST_CASE("block helpers and the boundary correction")
{
    const auto eu_ou = SepConfig::parse("eu/ou");
    // Low block with parts <= 0 is the empty block alone.
    const auto empty = detail::low_block_upto(eu_ou, Variant::Plain, 0, 6);
    CHECK(empty[0] == 1);
    for (int n = 1; n <= 6; ++n) {
        CHECK(empty[static_cast<std::size_t>(n)] == 0);
    }
    // Summing (exact max m) * (high above m) over m reproduces the total; a
    // naive sum of (parts <= m) * (high above m) over every boundary would
    // count partitions with no high part more than once.
    const int nmax = 20;
    const auto total = count_sep_table(eu_ou, Variant::Plain, nmax);
    std::vector<mpz_class> naive(nmax + 1);
    for (int m = 0; m <= nmax; m += 2) {
        const auto lo = detail::low_block_upto(eu_ou, Variant::Plain, m, nmax);
        const auto hi = detail::high_block_above(eu_ou, Variant::Plain, m, nmax);
        for (int i = 0; i <= nmax; ++i) {
            for (int j = 0; i + j <= nmax; ++j) {
                naive[static_cast<std::size_t>(i + j)] += lo[static_cast<std::size_t>(i)] * hi[static_cast<std::size_t>(j)];
            }
        }
    }
    CHECK(naive[1] == total[1]);
    CHECK(naive[2] > total[2]);
}
