#include <sepq/families.hpp>

#include <sepq/errors.hpp>
#include <sepq/qfunctions.hpp>

namespace sepq
{

LaurentSeries build_to_order(const SeriesBuilder &build, int order)
{
    int request = order;
    for (int attempt = 0; attempt < 6; ++attempt) {
        auto s = build(request);
        if (s.trunc() >= order) {
            return s.truncated(order);
        }
        request += order - s.trunc();
    }
    throw OutOfPrecision("expression could not be evaluated below q^" + std::to_string(order));
}

namespace
{

using HT = HyperTerm;

Monomial mono(long c, int e)
{
    return Monomial(Rational(c), e);
}

// (a; q^2)_inf
LaurentSeries pinf(long c, int e, int trunc)
{
    return pochhammer_inf(mono(c, e), 2, trunc);
}

LaurentSeries q_over_one_minus_q(int trunc)
{
    return scale(div_one_plus(LaurentSeries::one(trunc), mono(-1, 1)), mono(1, 1));
}

HT even_sum()
{
    HT t;
    t.base_exp = 2;
    return t;
}

} // namespace

namespace forms
{

LaurentSeries even_overpartitions(int trunc)
{
    return div(pinf(-1, 2, trunc), pinf(1, 2, trunc));
}

LaurentSeries odd_overpartitions(int trunc)
{
    return div(pinf(-1, 1, trunc), pinf(1, 1, trunc));
}

LaurentSeries plain_ed_od_construction(int trunc)
{
    auto t = even_sum();
    t.lin = 4;
    t.constant = 2;
    t.num = {{mono(-1, 2), 0}};
    t.num_tails = {{mono(-1, 3), 0}};
    return pinf(-1, 1, trunc) + sum_hyper(t, trunc);
}

LaurentSeries plain_od_ed_construction(int trunc)
{
    auto t = even_sum();
    t.lin = 4;
    t.constant = 1;
    t.num = {{mono(-1, 1), 0}};
    t.num_tails = {{mono(-1, 2), 0}};
    return pinf(-1, 2, trunc) + sum_hyper(t, trunc);
}

} // namespace forms

namespace
{

using forms::even_overpartitions;
using forms::odd_overpartitions;

// ---- standard overpartitions ----------------------------------------------

LaurentSeries eu_ou_closed(int trunc)
{
    const auto th = theta(trunc);
    return scale(even_overpartitions(trunc) * (LaurentSeries::one(trunc) + th * th), Rational(1, 2));
}

LaurentSeries eu_ou_construction(int trunc)
{
    auto t = even_sum();
    t.scalar = 2;
    t.lin = 4;
    t.num = {{mono(-1, 2), -1}, {mono(1, 1), 0}};
    t.den = {{mono(1, 2), 0}, {mono(-1, 1), 0}};
    return odd_overpartitions(trunc) * sum_hyper(t, trunc);
}

LaurentSeries ou_eu_closed(int trunc)
{
    auto t = even_sum();
    t.lin = 4;
    t.num = {{mono(-1, 1), 0}, {mono(1, 2), 0}};
    t.den = {{mono(1, 3), 0}, {mono(-1, 2), 0}};
    const auto e = even_overpartitions(trunc);
    return e + scale(q_over_one_minus_q(trunc) * e * sum_hyper(t, trunc), Rational(2));
}

LaurentSeries ou_eu_construction(int trunc)
{
    // Largest odd part 2n+1, overlined or not, with the even parts above it.
    auto t = even_sum();
    t.scalar = 2;
    t.lin = 4;
    t.constant = 1;
    t.num = {{mono(-1, 1), 0}};
    t.den = {{mono(1, 1), 1}};
    t.num_tails = {{mono(-1, 2), 0}};
    t.den_tails = {{mono(1, 2), 0}};
    return even_overpartitions(trunc) + sum_hyper(t, trunc);
}

LaurentSeries ed_od_closed(int trunc)
{
    const auto g = q_over_one_minus_q(trunc);
    const auto odd = pinf(-2, 1, trunc);
    return odd - g * pinf(-2, 2, trunc) + g * odd;
}

LaurentSeries ed_od_construction(int trunc)
{
    auto t = even_sum();
    t.lin = 4;
    t.num = {{mono(-2, 2), 0}};
    t.den = {{mono(-2, 3), 0}};
    return pinf(-2, 1, trunc) + scale(pinf(-2, 3, trunc) * sum_hyper(t, trunc), mono(2, 2));
}

LaurentSeries od_ed_closed(int trunc)
{
    const auto even = pinf(-2, 2, trunc);
    return even + q_over_one_minus_q(trunc) * (scale(even, Rational(3)) - pinf(-2, 1, trunc));
}

LaurentSeries od_ed_construction(int trunc)
{
    auto t = even_sum();
    t.lin = 4;
    t.num = {{mono(-2, 1), 0}};
    t.den = {{mono(-2, 2), 0}};
    const auto even = pinf(-2, 2, trunc);
    return even + scale(even * sum_hyper(t, trunc), mono(2, 1));
}

LaurentSeries eu_od_closed(int trunc)
{
    auto t = even_sum();
    t.ratio = mono(2, 0);
    t.quad = 2;
    t.den = {{mono(-1, 2), 0}};
    return even_overpartitions(trunc) * sum_hyper(t, trunc);
}

LaurentSeries eu_od_construction(int trunc)
{
    auto t = even_sum();
    t.scalar = 2;
    t.lin = 4;
    t.num = {{mono(-1, 2), -1}};
    t.num_tails = {{mono(-2, 1), 0}};
    t.den = {{mono(1, 2), 0}};
    return sum_hyper(t, trunc);
}

// sum (-1)^n q^{2n} / (c q; q^2)_{n+1}
LaurentSeries alternating_q2n_sum(long c, int trunc)
{
    auto t = even_sum();
    t.ratio = mono(-1, 0);
    t.lin = 4;
    t.den = {{mono(c, 1), 1}};
    return sum_hyper(t, trunc);
}

LaurentSeries od_eu_closed(int trunc)
{
    // X = -(-2q, q^2; q^2)_inf / (-q^2; q^2)_inf sum (-1)^n q^{2n}/(2q; q^2)_{n+1}
    //     + 2 sum (-1)^n 2^n q^{n^2+2n} / ((1 + q^{2n+2}) (2q; q^2)_{n+1})
    // and the family is E + 2 q E X.
    auto t = even_sum();
    t.scalar = 2;
    t.ratio = mono(-2, 0);
    t.quad = 2;
    t.lin = 4;
    t.den = {{mono(2, 1), 1}};
    t.den_binomials = {{Rational(1), 2, 2}};
    const auto lead = div(pinf(-2, 1, trunc) * pinf(1, 2, trunc), pinf(-1, 2, trunc));
    const auto x = -(lead * alternating_q2n_sum(2, trunc)) + sum_hyper(t, trunc);
    const auto e = even_overpartitions(trunc);
    return e + scale(e * x, mono(2, 1));
}

LaurentSeries od_eu_construction(int trunc)
{
    auto t = even_sum();
    t.scalar = 2;
    t.lin = 4;
    t.constant = 1;
    t.num = {{mono(-2, 1), 0}};
    t.num_tails = {{mono(-1, 2), 0}};
    t.den_tails = {{mono(1, 2), 0}};
    return even_overpartitions(trunc) + sum_hyper(t, trunc);
}

LaurentSeries ed_ou_closed(int trunc)
{
    auto t = even_sum();
    t.ratio = mono(-2, 0);
    t.quad = 2;
    t.lin = 6;
    t.num = {{mono(-1, 1), 0}};
    t.den = {{mono(2, 1), 1}, {mono(-1, 2), 1}};
    const auto middle = scale(pinf(-2, 2, trunc) * alternating_q2n_sum(2, trunc), mono(2, 1));
    const auto last = scale(div(pinf(-1, 1, trunc), pinf(1, 3, trunc)) * sum_hyper(t, trunc), mono(2, 1));
    return odd_overpartitions(trunc) - middle + last;
}

LaurentSeries ed_ou_construction(int trunc)
{
    auto t = even_sum();
    t.scalar = 2;
    t.lin = 4;
    t.constant = 2;
    t.num = {{mono(-2, 2), 0}};
    t.num_tails = {{mono(-1, 3), 0}};
    t.den_tails = {{mono(1, 3), 0}};
    return odd_overpartitions(trunc) + sum_hyper(t, trunc);
}

LaurentSeries ou_ed_closed(int trunc)
{
    auto t = even_sum();
    t.scalar = 2;
    t.lin = 4;
    t.constant = 1;
    t.num = {{mono(-1, 1), 0}};
    t.num_tails = {{mono(-2, 2), 0}};
    t.den = {{mono(1, 1), 1}};
    return pinf(-2, 2, trunc) + sum_hyper(t, trunc);
}

LaurentSeries ou_ed_construction(int trunc)
{
    auto t = even_sum();
    t.lin = 4;
    t.num = {{mono(-1, 1), 0}};
    t.den = {{mono(1, 3), 0}, {mono(-2, 2), 0}};
    const auto inner = scale(q_over_one_minus_q(trunc) * sum_hyper(t, trunc), Rational(2));
    return pinf(-2, 2, trunc) * (LaurentSeries::one(trunc) + inner);
}

// ---- modified overpartitions ------------------------------------------------

LaurentSeries mod_eu_od_closed(int trunc)
{
    return even_overpartitions(trunc) * phi(trunc);
}

LaurentSeries mod_eu_od_construction(int trunc)
{
    auto t = even_sum();
    t.scalar = 2;
    t.lin = 4;
    t.num = {{mono(-1, 2), -1}};
    t.den = {{mono(1, 2), 0}, {mono(-1, 1), 0}};
    return pinf(-1, 1, trunc) * sum_hyper(t, trunc);
}

// sum q^n / (-q^2; q^2)_{n+1}
LaurentSeries shifted_even_sum(int trunc)
{
    auto t = even_sum();
    t.lin = 2;
    t.den = {{mono(-1, 2), 1}};
    return sum_hyper(t, trunc);
}

LaurentSeries mod_od_eu_closed(int trunc)
{
    auto t = even_sum();
    t.ratio = mono(-1, 0);
    t.quad = 2;
    t.lin = 4;
    t.den = {{mono(1, 1), 1}};
    t.den_binomials = {{Rational(1), 2, 2}};
    const auto e = even_overpartitions(trunc);
    return e - scale(pinf(-1, 1, trunc) * shifted_even_sum(trunc), mono(1, 1))
         + scale(e * sum_hyper(t, trunc), mono(2, 1));
}

LaurentSeries mod_od_eu_construction(int trunc)
{
    auto t = even_sum();
    t.lin = 4;
    t.num = {{mono(-1, 1), 0}, {mono(1, 2), 0}};
    t.den = {{mono(-1, 2), 0}};
    return even_overpartitions(trunc) * (LaurentSeries::one(trunc) + scale(sum_hyper(t, trunc), mono(1, 1)));
}

LaurentSeries mod_ed_ou_closed(int trunc)
{
    auto t = even_sum();
    t.ratio = mono(-1, 0);
    t.quad = 2;
    t.lin = 2;
    t.num = {{mono(-1, 1), 1}};
    t.den = {{mono(-1, 2), 1}, {mono(1, 1), 1}};
    const auto o = odd_overpartitions(trunc);
    return scale(o + o * sum_hyper(t, trunc), Rational(1, 2))
         - scale(pinf(-1, 2, trunc) * shifted_even_sum(trunc), mono(1, 1));
}

LaurentSeries mod_ed_ou_construction(int trunc)
{
    // Largest even part 2n+2 (never overlined), distinct evens below it.
    auto t = even_sum();
    t.lin = 4;
    t.constant = 2;
    t.num = {{mono(1, 1), 1}, {mono(-1, 2), 0}};
    t.den = {{mono(-1, 1), 1}};
    return odd_overpartitions(trunc) * (LaurentSeries::one(trunc) + sum_hyper(t, trunc));
}

LaurentSeries mod_ou_ed_closed(int trunc)
{
    auto t = even_sum();
    t.lin = 4;
    t.num = {{mono(-1, 1), 0}};
    t.den = {{mono(1, 1), 1}, {mono(-1, 2), 0}};
    return pinf(-1, 2, trunc) * (LaurentSeries::one(trunc) + scale(sum_hyper(t, trunc), mono(2, 1)));
}

// ---- plain partitions ---------------------------------------------------------

LaurentSeries plain_eu_ou_closed(int trunc)
{
    return invert(mul_one_plus(pinf(1, 2, trunc), mono(-1, 1)));
}

LaurentSeries plain_od_eu_closed(int trunc)
{
    // (-q; -q)_inf built directly with the signed step.
    const auto signed_euler = pochhammer(PochhammerSpec{mono(-1, 1), 1, -1, std::nullopt}, trunc);
    const auto s = substitute_sign(sigma(trunc));
    const auto inner = LaurentSeries::one(trunc) + scale(signed_euler - s, Rational(1, 2));
    return div(inner, pinf(1, 2, trunc));
}

struct FamilyEntry {
    SepConfig cfg;
    Variant variant;
    const char *id;
    LaurentSeries (*closed)(int);
    LaurentSeries (*construction)(int);
};

const SepConfig eu_ou{Parity::Even, Restriction::Unrestricted, Restriction::Unrestricted};
const SepConfig ou_eu{Parity::Odd, Restriction::Unrestricted, Restriction::Unrestricted};
const SepConfig ed_od{Parity::Even, Restriction::Distinct, Restriction::Distinct};
const SepConfig od_ed{Parity::Odd, Restriction::Distinct, Restriction::Distinct};
const SepConfig eu_od{Parity::Even, Restriction::Unrestricted, Restriction::Distinct};
const SepConfig od_eu{Parity::Odd, Restriction::Distinct, Restriction::Unrestricted};
const SepConfig ed_ou{Parity::Even, Restriction::Distinct, Restriction::Unrestricted};
const SepConfig ou_ed{Parity::Odd, Restriction::Unrestricted, Restriction::Distinct};

const FamilyEntry family_table[] = {
    {eu_ou, Variant::Overlined, "T1.1", eu_ou_closed, eu_ou_construction},
    {ou_eu, Variant::Overlined, "T1.2", ou_eu_closed, ou_eu_construction},
    {ed_od, Variant::Overlined, "T1.3", ed_od_closed, ed_od_construction},
    {od_ed, Variant::Overlined, "T1.4", od_ed_closed, od_ed_construction},
    {eu_od, Variant::Overlined, "T1.5", eu_od_closed, eu_od_construction},
    {od_eu, Variant::Overlined, "T1.6", od_eu_closed, od_eu_construction},
    {ed_ou, Variant::Overlined, "T1.7", ed_ou_closed, ed_ou_construction},
    {ou_ed, Variant::Overlined, "T1.8", ou_ed_closed, ou_ed_construction},
    {eu_od, Variant::Modified, "T2.1", mod_eu_od_closed, mod_eu_od_construction},
    {od_eu, Variant::Modified, "T2.2", mod_od_eu_closed, mod_od_eu_construction},
    {ed_ou, Variant::Modified, "T2.3", mod_ed_ou_closed, mod_ed_ou_construction},
    {ou_ed, Variant::Modified, "T2.4", mod_ou_ed_closed, nullptr},
    {eu_ou, Variant::Modified, "RED1", eu_ou_closed, nullptr},
    {ou_eu, Variant::Modified, "RED2", ou_eu_closed, nullptr},
    {ed_od, Variant::Modified, "RED3", nullptr, forms::plain_ed_od_construction},
    {od_ed, Variant::Modified, "RED4", nullptr, forms::plain_od_ed_construction},
    {ed_od, Variant::Plain, "RED3", nullptr, forms::plain_ed_od_construction},
    {od_ed, Variant::Plain, "RED4", nullptr, forms::plain_od_ed_construction},
    {eu_ou, Variant::Plain, "BG1", plain_eu_ou_closed, nullptr},
    {od_eu, Variant::Plain, "BG2", plain_od_eu_closed, nullptr},
};

const FamilyEntry *find_family(const SepConfig &cfg, Variant v)
{
    for (const auto &f : family_table) {
        if (f.cfg == cfg && f.variant == v) {
            return &f;
        }
    }
    return nullptr;
}

} // namespace

std::optional<SeriesBuilder> closed_form(const SepConfig &cfg, Variant v)
{
    const auto *f = find_family(cfg, v);
    if (f == nullptr || f->closed == nullptr) {
        return std::nullopt;
    }
    return SeriesBuilder(f->closed);
}

std::optional<SeriesBuilder> construction_form(const SepConfig &cfg, Variant v)
{
    const auto *f = find_family(cfg, v);
    if (f == nullptr || f->construction == nullptr) {
        return std::nullopt;
    }
    return SeriesBuilder(f->construction);
}

std::optional<std::string> closed_form_id(const SepConfig &cfg, Variant v)
{
    const auto *f = find_family(cfg, v);
    if (f == nullptr || f->closed == nullptr) {
        return std::nullopt;
    }
    return std::string(f->id);
}

} // namespace sepq
