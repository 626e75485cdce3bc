#include <sepq/identities.hpp>

#include <cmath>
#include <stdexcept>

#include <sepq/enumeration.hpp>
#include <sepq/errors.hpp>
#include <sepq/propositions.hpp>
#include <sepq/qfunctions.hpp>

namespace sepq
{

long lattice_r2(long n)
{
    if (n < 0) {
        return 0;
    }
    long count = 0;
    for (long x = 0; x * x <= n; ++x) {
        const long rest = n - x * x;
        auto y = static_cast<long>(std::sqrt(static_cast<double>(rest)));
        while (y * y > rest) {
            --y;
        }
        while ((y + 1) * (y + 1) <= rest) {
            ++y;
        }
        if (y * y != rest) {
            continue;
        }
        // Sign choices for (x, y), counting x = 0 or y = 0 once.
        count += (x == 0 ? 1 : 2) * (y == 0 ? 1 : 2);
    }
    return count;
}

namespace
{

using Exprs = std::vector<Expression>;

Monomial mono(long c, int e)
{
    return Monomial(Rational(c), e);
}

SeriesBuilder oracle(const SepConfig &cfg, Variant v)
{
    return [cfg, v](int trunc) { return series_sep(cfg, v, trunc); };
}

std::string family_label(const SepConfig &cfg, Variant v)
{
    return to_string(v) + " " + cfg.name();
}

IdentityEntry single(std::string id, std::string description, std::string anchor, int min_order, Exprs exprs)
{
    IdentityEntry e;
    e.id = std::move(id);
    e.description = std::move(description);
    e.anchor = std::move(anchor);
    e.min_order = min_order;
    e.expressions = [exprs = std::move(exprs)](int) { return exprs; };
    return e;
}

IdentityEntry family_entry(const std::string &family, Variant v, std::string anchor)
{
    const auto cfg = SepConfig::parse(family);
    Exprs exprs{{"oracle", oracle(cfg, v)}};
    if (auto c = construction_form(cfg, v)) {
        exprs.push_back({"construction", *c});
    }
    exprs.push_back({"closed", *closed_form(cfg, v)});
    const auto id = *closed_form_id(cfg, v);
    const bool three_way = exprs.size() == 3;
    auto desc = "generating function of " + family_label(cfg, v) + " overpartitions: "
              + (three_way ? "enumeration = largest-part construction = closed form"
                           : "enumeration = closed form");
    return single(id, desc, std::move(anchor), 100, std::move(exprs));
}

// 2 sum_{n >= 0} q^n / (1 + q^{2n})
LaurentSeries r2_sum(int trunc)
{
    HyperTerm t;
    t.scalar = 2;
    t.lin = 2;
    t.den_binomials = {{Rational(1), 0, 2}};
    return sum_hyper(t, trunc);
}

// 1 + 2 sum_{n >= 1} (d_{1 mod 4}(n) - d_{3 mod 4}(n)) q^n
LaurentSeries r2_divisors(int trunc)
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max(trunc, 0)));
    if (trunc > 0) {
        c[0] = 1;
    }
    for (int n = 1; n < trunc; ++n) {
        long d = 0;
        for (int k = 1; k <= n; ++k) {
            if (n % k == 0) {
                d += k % 4 == 1 ? 1 : (k % 4 == 3 ? -1 : 0);
            }
        }
        c[static_cast<std::size_t>(n)] = 2 * d;
    }
    return LaurentSeries::from_coefficients(0, std::move(c));
}

// (1 + sum_{n >= 0} r_2(n) q^n) / 2 with r_2 counted on the lattice.
LaurentSeries r2_lattice(int trunc)
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max(trunc, 0)));
    for (int n = 0; n < trunc; ++n) {
        Rational v(lattice_r2(n) + (n == 0 ? 1 : 0), 2);
        v.canonicalize();
        c[static_cast<std::size_t>(n)] = v;
    }
    return LaurentSeries::from_coefficients(0, std::move(c));
}

LaurentSeries r2_theta(int trunc)
{
    const auto th = theta(trunc);
    return scale(LaurentSeries::one(trunc) + th * th, Rational(1, 2));
}

// sum (-1)^n q^{2n} / (q; q^2)_{n+1}
LaurentSeries ih_left(int trunc)
{
    HyperTerm t;
    t.base_exp = 2;
    t.ratio = mono(-1, 0);
    t.lin = 4;
    t.den = {{mono(1, 1), 1}};
    return sum_hyper(t, trunc);
}

// sum q^n / (-q^2; q^2)_{n+1}
LaurentSeries ih_right(int trunc)
{
    HyperTerm t;
    t.base_exp = 2;
    t.lin = 2;
    t.den = {{mono(-1, 2), 1}};
    return sum_hyper(t, trunc);
}

// (1 / (q^2; q^2)_inf) (1 - sigma(-q)/2 + (q; q)_inf(-q)/2): the sign flip
// applied to (q; q)_inf instead of building (-q; -q)_inf directly.
LaurentSeries bg2_via_sign(int trunc)
{
    const auto euler = substitute_sign(pochhammer_inf(mono(1, 1), 1, trunc));
    const auto s = substitute_sign(sigma(trunc));
    const auto inner = LaurentSeries::one(trunc) + scale(euler - s, Rational(1, 2));
    return div(inner, pochhammer_inf(mono(1, 2), 2, trunc));
}

constexpr int lim_components = 21;

IdentityEntry limit_entry()
{
    IdentityEntry e;
    e.id = "L-LIM";
    e.description = "top a-coefficient of (a; q)_n is (-1)^n q^{n(n-1)/2}, n = 0..20 (compared after dividing by "
                    "q^{n(n-1)/2})";
    e.anchor = "\\lim_{a \\to \\infty} \\frac{(a;q)_n}{a^n}=(-1)^n q^{\\frac{n(n-1)}{2}}";
    e.min_order = 20;
    e.components = lim_components;
    e.expressions = [](int n) {
        const int shift = n * (n - 1) / 2;
        return Exprs{
            {"top",
             [n, shift](int trunc) {
                 auto top = pochhammer_in_a(n, trunc + shift)[static_cast<std::size_t>(n)];
                 return scale(top, Monomial::q(-shift));
             }},
            {"closed",
             [n](int trunc) { return LaurentSeries::from_monomial(mono(n % 2 == 0 ? 1 : -1, 0), trunc); }},
        };
    };
    return e;
}

IdentityEntry prop_entry(std::string id, std::string description, std::string anchor, Exprs sides)
{
    return single(std::move(id), std::move(description), std::move(anchor), 60, std::move(sides));
}

std::vector<IdentityEntry> build_registry()
{
    std::vector<IdentityEntry> r;
    const auto over = Variant::Overlined;
    const auto mod = Variant::Modified;

    r.push_back(family_entry("eu/ou", over, "1 + \\Theta^2(\\tau)"));
    r.push_back(family_entry("ou/eu", over, "\\frac{2q}{1-q}"));
    r.push_back(family_entry("ed/od", over, "\\left( -2q;q^2 \\right)_\\infty - \\dfrac{q}{1-q}"));
    r.push_back(family_entry("od/ed", over, "3 \\left( -2q^2;q^2 \\right)_\\infty"));
    r.push_back(family_entry("eu/od", over, "\\dfrac{2^n q^{n^2}}{\\left( -q^2;q^2 \\right)_n}"));
    r.push_back(family_entry("od/eu", over, "(-1)^n 2^n q^{n^2+2n}"));
    r.push_back(family_entry("ed/ou", over, "(-1)^n 2^n\\left(-q;q^2\\right)_n q^{n^2+3n}"));
    r.push_back(family_entry("ou/ed", over, "\\left( -2q^{2n+2};q^2 \\right)_\\infty"));
    r.push_back(family_entry("eu/od", mod, "\\phi(q) := \\sum_{n \\geq 0} \\dfrac{q^{n^2}}{\\left( -q^2;q^2 \\right)_n}"));
    r.push_back(family_entry("od/eu", mod, "\\dfrac{(-1)^n q^{n^2 + 2n}}{\\left( 1 + q^{2n+2} \\right)"));
    r.push_back(family_entry("ed/ou", mod, "(-1)^n \\left( -q;q^2 \\right)_{n+1} q^{n^2+n}"));
    r.push_back(family_entry("ou/ed", mod, "1 + 2q \\sum_{n \\geq 0}"));

    const auto eu_ou = SepConfig::parse("eu/ou");
    const auto od_eu = SepConfig::parse("od/eu");
    r.push_back(single("BG1", "plain eu/ou partitions: enumeration = 1/((1-q)(q^2;q^2)_inf)",
                       "\\frac{1}{(1-q)(q^2;q^2)_\\infty}", 100,
                       {{"oracle", oracle(eu_ou, Variant::Plain)}, {"closed", *closed_form(eu_ou, Variant::Plain)}}));
    r.push_back(single("BG2",
                       "plain od/eu partitions: enumeration = (1 - sigma(-q)/2 + (-q;-q)_inf/2)/(q^2;q^2)_inf, "
                       "with (-q;-q)_inf built directly and by q -> -q",
                       "1 - \\dfrac{\\sigma(-q)}{2}", 100,
                       {{"oracle", oracle(od_eu, Variant::Plain)},
                        {"closed-sign", bg2_via_sign},
                        {"closed", *closed_form(od_eu, Variant::Plain)}}));

    const std::string red_anchor = "boil down to either $\\overline{F}$ or $F$";
    for (const auto &[id, fam] : {std::pair{"RED1", "eu/ou"}, std::pair{"RED2", "ou/eu"}}) {
        const auto cfg = SepConfig::parse(fam);
        r.push_back(single(id, std::string("mod ") + fam + " = over " + fam + " (no distinct block)", red_anchor, 100,
                           {{"oracle-mod", oracle(cfg, mod)},
                            {"oracle-over", oracle(cfg, over)},
                            {"closed", *closed_form(cfg, mod)}}));
    }
    for (const auto &[id, fam] : {std::pair{"RED3", "ed/od"}, std::pair{"RED4", "od/ed"}}) {
        const auto cfg = SepConfig::parse(fam);
        r.push_back(single(id, std::string("mod ") + fam + " = plain " + fam + " (both blocks distinct)", red_anchor,
                           100,
                           {{"oracle-mod", oracle(cfg, mod)},
                            {"oracle-plain", oracle(cfg, Variant::Plain)},
                            {"construction", *construction_form(cfg, mod)}}));
    }

    r.push_back(single("X-R2", "2 sum q^n/(1+q^{2n}) = 1 + 2 sum (d_1(n) - d_3(n)) q^n = (1 + Theta^2)/2 with r_2 "
                               "from a lattice count",
                       "\\frac{q^n}{1 + q^{2n}}", 100,
                       {{"sum", r2_sum}, {"divisor", r2_divisors}, {"lattice", r2_lattice}, {"closed", r2_theta}}));
    r.push_back(single("X-IH", "sum (-1)^n q^{2n}/(q;q^2)_{n+1} = sum q^n/(-q^2;q^2)_{n+1}",
                       "\\sum_{n \\geq 0} \\dfrac{q^n}{\\left( -q^2;q^2 \\right)_{n+1}}", 100,
                       {{"lhs", ih_left}, {"rhs", ih_right}}));
    r.push_back(limit_entry());

    using namespace props;
    const std::string heine_anchor =
        "\\sum_{n\\geq0} \\frac{\\left( a, b\\right) _n}{\\left( q, c\\right) _n} t^n = \\frac{\\left( b, "
        "at\\right) _\\infty}{\\left( c, t\\right) _\\infty}";
    r.push_back(prop_entry("P-HEINE-1", "Heine transformation, q -> q^2, (a, b, c, t) = (-1, q, -q, q^2)",
                           heine_anchor, heine_sides(mono(-1, 0), mono(1, 1), mono(-1, 1), mono(1, 2), 2)));
    r.push_back(prop_entry("P-HEINE-2", "Heine transformation, q -> q^2, (a, b, c, t) = (-1, q^2, -q^2, 2q)",
                           heine_anchor, heine_sides(mono(-1, 0), mono(1, 2), mono(-1, 2), mono(2, 1), 2)));
    const std::string limit_anchor = "\\sum_{n \\geq 0} \\dfrac{2^n \\left( b;q^2 \\right)_n q^{n^2}}";
    r.push_back(prop_entry("P-HEINE-LIM-1", "a -> infinity Heine form, (b, c) = (q^2, -q^2), t = -2q/a",
                           limit_anchor, heine_limit_sides(mono(1, 2), mono(-1, 2), mono(-2, 1))));
    r.push_back(prop_entry("P-HEINE-LIM-2", "a -> infinity Heine form, (b, c) = (q^2, -q^2), t = -q/a",
                           "\\left( b, -q;q^2 \\right)_\\infty",
                           heine_limit_sides(mono(1, 2), mono(-1, 2), mono(-1, 1))));
    r.push_back(prop_entry("P-IH-1", "iterated Heine transformation, (a, b, c, t) = (0, q, -q^2, q)",
                           "\\dfrac{\\left(\\frac{c}{b},bt\\right)_\\infty}{(c,t)_\\infty}",
                           iterated_heine_sides(Monomial::zero(), mono(1, 1), mono(-1, 2), mono(1, 1))));
    const std::string asv_anchor = "\\dfrac{q(x)_\\infty}{y\\left( 1 - \\frac{xq}{y} \\right) (y)_\\infty}";
    r.push_back(prop_entry("P-ASV-1", "sum (x)_n/(y)_n q^n two-term evaluation, q -> q^2, (x, y) = (-2q^2, -2q^3)",
                           asv_anchor, asv_sides(mono(-2, 2), mono(-2, 3), 2)));
    r.push_back(prop_entry("P-ASV-2", "sum (x)_n/(y)_n q^n two-term evaluation, q -> q^2, (x, y) = (-2q, -2q^2)",
                           asv_anchor, asv_sides(mono(-2, 1), mono(-2, 2), 2)));
    r.push_back(prop_entry("P-ASV-3", "sum (x)_n/(y)_n q^n two-term evaluation at x = y = 2q (geometric series)",
                           asv_anchor, asv_sides(mono(2, 1), mono(2, 1), 1)));
    const std::string pt_anchor = "\\sum_{n\\ge0} \\frac{(B, -Abq)_n q^n}{(-aq, -bq)_n}";
    r.push_back(prop_entry("P-PT-1", "three-sum partial theta transformation, (a, b, A, B) = (q, q^2, -q, 2q)",
                           pt_anchor, partial_theta_sides(mono(1, 1), mono(1, 2), mono(-1, 1), mono(2, 1))));
    r.push_back(prop_entry("P-PT-2", "three-sum partial theta transformation, (a, b, A, B) = (q, 0, q, q)",
                           pt_anchor, partial_theta_sides(mono(1, 1), Monomial::zero(), mono(1, 1), mono(1, 1))));
    const std::string ptc_anchor = "\\dfrac{\\left( -a^{-1}; q^2 \\right)_{n+1}}{\\left( \\frac{Bq^2}{a}, "
                                   "\\frac{Aq^2}{a}; q^2 \\right)_{n+1}} \\left( \\frac{AB}{a} \\right)^n q^{n^2+3n}";
    r.push_back(prop_entry("P-PTC-1", "two-term partial theta corollary, (a, A, B) = (1, -1, 2q^-1)", ptc_anchor,
                           ptc_sides(mono(1, 0), mono(-1, 0), mono(2, -1))));
    r.push_back(prop_entry("P-PTC-2", "two-term partial theta corollary, (a, A, B) = (q, -q, 2)", ptc_anchor,
                           ptc_sides(mono(1, 1), mono(-1, 1), mono(2, 0))));
    r.push_back(prop_entry("P-PTC-3", "two-term partial theta corollary, (a, A, B) = (1, -1, q^-1)", ptc_anchor,
                           ptc_sides(mono(1, 0), mono(-1, 0), mono(1, -1))));
    r.push_back(prop_entry("P-PTC-4", "two-term partial theta corollary, (a, A, B) = (q^-1, q^-2, -q^-1)",
                           ptc_anchor, ptc_sides(mono(1, -1), mono(1, -2), mono(-1, -1))));
    return r;
}

} // namespace

const std::vector<IdentityEntry> &registry()
{
    static const std::vector<IdentityEntry> r = build_registry();
    return r;
}

const IdentityEntry &find_identity(std::string_view id)
{
    for (const auto &e : registry()) {
        if (e.id == id) {
            return e;
        }
    }
    throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

CheckReport check(const IdentityEntry &entry, int order, std::optional<int> perturb)
{
    if (order < 1) {
        throw std::invalid_argument("check: order must be >= 1");
    }
    if (perturb && *perturb >= order) {
        throw std::invalid_argument("check: perturbation q^" + std::to_string(*perturb) + " lies beyond order "
                                    + std::to_string(order));
    }
    for (int c = 0; c < entry.components; ++c) {
        const auto exprs = entry.expressions(c);
        LabelledSeries values;
        std::size_t target = exprs.size() - 1;
        for (std::size_t i = 0; i < exprs.size(); ++i) {
            values.emplace_back(exprs[i].label, build_to_order(exprs[i].build, order));
            if (exprs[i].label == "closed") {
                target = i;
            }
        }
        if (perturb) {
            auto &s = values[target].second;
            s = s + LaurentSeries::from_monomial(Monomial::q(*perturb), s.trunc());
        }
        const auto component = entry.components > 1 ? std::optional<int>(c) : std::nullopt;
        auto report = compare_series(entry.id, order, values, component);
        if (!report.pass) {
            return report;
        }
    }
    return CheckReport{entry.id, order, true, std::nullopt};
}

CheckReport check(std::string_view id, int order, std::optional<int> perturb)
{
    return check(find_identity(id), order, perturb);
}

} // namespace sepq
