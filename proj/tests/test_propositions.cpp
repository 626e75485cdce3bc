#include <doctest.h>

#include <sepq/errors.hpp>
#include <sepq/identities.hpp>
#include <sepq/propositions.hpp>

#include "prop_generators.hpp"

using namespace sepq;
using sepq::testing::Rng;

namespace
{

Monomial mono(long c, int e)
{
    return Monomial(Rational(c), e);
}

} // namespace

TEST_CASE("named specializations")
{
    for (const auto &e : registry()) {
        if (e.id.rfind("P-", 0) == 0) {
            INFO(e.id);
            CHECK(e.min_order == 60);
            CHECK(check(e, 120).pass);
        }
    }
}

TEST_CASE("random valid parameters satisfy every transformation")
{
    Rng rng(2024);
    const int trunc = 30;
    for (auto kind : sepq::testing::all_prop_kinds()) {
        int checked = 0;
        for (int i = 0; i < 8; ++i) {
            const auto r = sepq::testing::random_prop_check(rng, kind, trunc);
            INFO(r.id);
            CHECK(r.pass);
            ++checked;
        }
        CHECK(checked == 8);
    }
}

TEST_CASE("parameters outside the valid region are rejected")
{
    const auto one = mono(1, 0);
    const auto q = mono(1, 1);
    CHECK_THROWS_AS(props::heine_sides(mono(-1, 0), q, mono(-1, 1), one), PreconditionViolated);
    CHECK_THROWS_AS(props::heine_sides(mono(-1, 0), Monomial::zero(), mono(-1, 1), q), PreconditionViolated);
    CHECK_THROWS_AS(props::heine_sides(mono(1, -3), q, q, q), PreconditionViolated);
    CHECK_THROWS_AS(props::heine_limit_sides(one, mono(-1, 2), q), PreconditionViolated);
    CHECK_THROWS_AS(props::heine_limit_sides(q, mono(-1, 2), Monomial::zero()), PreconditionViolated);
    CHECK_THROWS_AS(props::iterated_heine_sides(Monomial::zero(), q, mono(-1, 1), q), PreconditionViolated);
    CHECK_THROWS_AS(props::iterated_heine_sides(Monomial::zero(), q, mono(-1, 2), one), PreconditionViolated);
    CHECK_THROWS_AS(props::asv_sides(q, one), PreconditionViolated);
    CHECK_THROWS_AS(props::asv_sides(mono(1, -1), q), PreconditionViolated);
    CHECK_THROWS_AS(props::partial_theta_sides(Monomial::zero(), q, q, q), PreconditionViolated);
    CHECK_THROWS_AS(props::partial_theta_sides(q, q, Monomial::zero(), q), PreconditionViolated);
    CHECK_THROWS_AS(props::ptc_sides(Monomial::zero(), q, q), PreconditionViolated);
    CHECK_THROWS_AS(props::heine_sides(q, q, q, q, 0), PreconditionViolated);
}

TEST_CASE("a vanishing denominator in the two-term evaluation throws")
{
    CHECK_THROWS_AS(props::asv_sides(mono(1, 1), mono(1, 2)), ZeroDivision);
    CHECK_THROWS_AS(props::asv_sides(mono(3, 2), mono(3, 4), 2), ZeroDivision);
}

TEST_CASE("check functions name their transformation")
{
    const auto q = mono(1, 1);
    CHECK(props::check_heine(mono(-1, 0), q, mono(-1, 1), mono(1, 2), 30, 2).id == "heine");
    CHECK(props::check_asv(mono(2, 1), mono(2, 1), 30).pass);
    CHECK(props::check_heine_limit(mono(1, 2), mono(-1, 2), mono(-2, 1), 30).pass);
    CHECK(props::check_iterated_heine(Monomial::zero(), q, mono(-1, 2), q, 30).pass);
}
