#include <sepq/propositions.hpp>

#include <sepq/errors.hpp>
#include <sepq/qfunctions.hpp>

namespace sepq::props
{

namespace
{

using HT = HyperTerm;

void require(bool ok, const std::string &what)
{
    if (!ok) {
        throw PreconditionViolated(what);
    }
}

bool zero_or_positive(const Monomial &x)
{
    return x.is_zero() || x.exp >= 1;
}

// Whether x Q^k = 1 for some k >= 0, i.e. (x; Q) has a vanishing factor.
bool hits_one(const Monomial &x, int m)
{
    return !x.is_zero() && x.coeff == 1 && x.exp <= 0 && (-x.exp) % m == 0;
}

Monomial q_pow(int e)
{
    return Monomial::q(e);
}

Monomial neg(const Monomial &x)
{
    return -x;
}

// Drops zero bases: (0; Q)_n = 1.
std::vector<HT::Pochhammer> pochs(std::initializer_list<HT::Pochhammer> list)
{
    std::vector<HT::Pochhammer> out;
    for (const auto &p : list) {
        if (!p.base.is_zero()) {
            out.push_back(p);
        }
    }
    return out;
}

LaurentSeries inf_product(std::initializer_list<Monomial> num, std::initializer_list<Monomial> den, int m, int trunc)
{
    auto r = LaurentSeries::one(trunc);
    for (const auto &x : num) {
        r = r * pochhammer_inf(x, m, trunc);
    }
    for (const auto &x : den) {
        r = div(r, pochhammer_inf(x, m, trunc));
    }
    return r;
}

void require_base(int base)
{
    require(base >= 1, "base exponent must be >= 1");
}

void require_converges(const HT &t, const std::string &which)
{
    require(hyper_converges(t), which + " does not converge formally at these parameters");
}

} // namespace

std::vector<Expression> heine_sides(const Monomial &a, const Monomial &b, const Monomial &c, const Monomial &t,
                                    int base)
{
    require_base(base);
    require(!t.is_zero() && t.exp >= 1, "t must be nonzero with exponent >= 1");
    require(!b.is_zero() && b.exp >= 1, "b must be nonzero with exponent >= 1");
    require(zero_or_positive(c), "c must be zero or have exponent >= 1");
    require(zero_or_positive(a * t), "at must be zero or have exponent >= 1");
    const int m = base;
    const auto Q = q_pow(m);

    HT lhs;
    lhs.base_exp = m;
    lhs.ratio = t;
    lhs.num = pochs({{a, 0}, {b, 0}});
    lhs.den = pochs({{Q, 0}, {c, 0}});
    require_converges(lhs, "left-hand sum");

    HT rhs;
    rhs.base_exp = m;
    rhs.ratio = b;
    rhs.num = pochs({{c / b, 0}, {t, 0}});
    rhs.den = pochs({{Q, 0}, {a * t, 0}});
    require_converges(rhs, "right-hand sum");

    return {
        {"lhs", [lhs](int trunc) { return sum_hyper(lhs, trunc); }},
        {"rhs",
         [=](int trunc) { return inf_product({b, a * t}, {c, t}, m, trunc) * sum_hyper(rhs, trunc); }},
    };
}

std::vector<Expression> heine_limit_sides(const Monomial &b, const Monomial &c, const Monomial &twist)
{
    require(!b.is_zero() && b.exp >= 1, "b must be nonzero with exponent >= 1");
    require(zero_or_positive(c), "c must be zero or have exponent >= 1");
    require(!twist.is_zero() && twist.exp >= 1, "twist must be nonzero with exponent >= 1");
    const auto Q = q_pow(2);
    const Monomial w = twist;

    HT body;
    body.base_exp = 2;
    body.num = pochs({{b, 0}});
    body.den = pochs({{Q, 0}, {c, 0}});

    // Same summand in closed shape; used only for its certified bound.
    HT shape = body;
    shape.ratio = -w;
    shape.quad = 2;
    shape.lin = -2;

    HT rhs;
    rhs.base_exp = 2;
    rhs.ratio = b;
    rhs.num = pochs({{c / b, 0}});
    rhs.den = pochs({{Q, 0}, {w, 0}});

    auto lhs_build = [=](int trunc) {
        auto term = [&](long n, int tr) {
            const auto k = static_cast<int>(n);
            const auto top = pochhammer_in_a(k, tr, 2)[static_cast<std::size_t>(k)];
            return scale(top * hyper_term(body, n, tr), w.pow(n)).truncated(tr);
        };
        auto bound = [&](long n) { return hyper_val_bound(shape, n); };
        return sum_series(term, bound, trunc);
    };
    return {
        {"lhs", lhs_build},
        {"rhs", [=](int trunc) { return inf_product({b, w}, {c}, 2, trunc) * sum_hyper(rhs, trunc); }},
    };
}

std::vector<Expression> iterated_heine_sides(const Monomial &a, const Monomial &b, const Monomial &c,
                                             const Monomial &t, int base)
{
    require_base(base);
    require(!t.is_zero() && t.exp >= 1, "t must be nonzero with exponent >= 1");
    require(!b.is_zero(), "b must be nonzero");
    require(!c.is_zero(), "c must be nonzero");
    require((c / b).exp >= 1, "c/b must have exponent >= 1");
    require((b * t).exp >= 1, "bt must have exponent >= 1");
    require(c.exp >= 1, "c must have exponent >= 1");
    const int m = base;
    const auto Q = q_pow(m);

    HT lhs;
    lhs.base_exp = m;
    lhs.ratio = t;
    lhs.num = pochs({{a, 0}, {b, 0}});
    lhs.den = pochs({{Q, 0}, {c, 0}});
    require_converges(lhs, "left-hand sum");

    HT rhs;
    rhs.base_exp = m;
    rhs.ratio = c / b;
    rhs.num = pochs({{a * b * t / c, 0}, {b, 0}});
    rhs.den = pochs({{Q, 0}, {b * t, 0}});
    require_converges(rhs, "right-hand sum");

    return {
        {"lhs", [lhs](int trunc) { return sum_hyper(lhs, trunc); }},
        {"rhs",
         [=](int trunc) { return inf_product({c / b, b * t}, {c, t}, m, trunc) * sum_hyper(rhs, trunc); }},
    };
}

std::vector<Expression> asv_sides(const Monomial &x, const Monomial &y, int base)
{
    require_base(base);
    require(!y.is_zero() && y.exp >= 1, "y must be nonzero with exponent >= 1");
    require(zero_or_positive(x), "x must be zero or have exponent >= 1");
    const int m = base;
    const auto Q = q_pow(m);
    const auto u = x * Q / y;
    if (u.is_one()) {
        throw ZeroDivision("1 - xQ/y vanishes identically");
    }

    HT lhs;
    lhs.base_exp = m;
    lhs.lin = 2L * m;
    lhs.num = pochs({{x, 0}});
    lhs.den = pochs({{y, 0}});

    auto rhs = [=](int trunc) {
        const auto first = div_one_plus(scale(inf_product({x}, {y}, m, trunc), Q / y), -u);
        const auto second = div_one_plus(mul_one_plus(LaurentSeries::one(trunc), -(Q / y)), -u);
        return first + second;
    };
    return {
        {"lhs", [lhs](int trunc) { return sum_hyper(lhs, trunc); }},
        {"rhs", rhs},
    };
}

std::vector<Expression> partial_theta_sides(const Monomial &a, const Monomial &b, const Monomial &A,
                                            const Monomial &B)
{
    require(!a.is_zero(), "a must be nonzero (the identity divides by a)");
    require(!A.is_zero(), "A must be nonzero (the identity uses 1/A)");
    const auto q = q_pow(1);
    const auto ainv = a.inverse();
    const auto Abq_a = A * b * q * ainv;
    const auto mB_a = neg(B * ainv);

    for (const auto &[x, what] : {std::pair{neg(a * q), "(-aq)_n"}, std::pair{neg(b * q), "(-bq)_n"},
                                  std::pair{mB_a, "(-B/a)_{n+1}"}, std::pair{Abq_a, "(Abq/a)_{n+1}"},
                                  std::pair{B, "(B)_inf"}, std::pair{neg(A * b * q), "(-Abq)_inf"}}) {
        require(!hits_one(x, 1), std::string(what) + " has a vanishing factor");
    }

    HT lhs;
    lhs.lin = 2;
    lhs.num = pochs({{B, 0}, {neg(A * b * q), 0}});
    lhs.den = pochs({{neg(a * q), 0}, {neg(b * q), 0}});
    require_converges(lhs, "left-hand sum");

    HT first;
    first.ratio = Abq_a;
    first.num = pochs({{A.inverse(), 0}});
    first.den = pochs({{mB_a, 1}});
    require_converges(first, "first right-hand sum");

    HT second;
    second.ratio = neg(b);
    second.num = pochs({{neg(ainv), 1}, {neg(A * B * q * ainv), 0}});
    second.den = pochs({{mB_a, 1}, {Abq_a, 1}});
    require_converges(second, "second right-hand sum");

    auto rhs = [=](int trunc) {
        const auto prod = inf_product({B, neg(A * b * q)}, {neg(b * q), neg(a * q)}, 1, trunc);
        auto r = scale(prod * sum_hyper(first, trunc), neg(ainv));
        auto s = sum_hyper(second, trunc);
        if (!b.is_zero()) {
            s = mul_one_plus(s, b);
        }
        return r + s;
    };
    return {
        {"lhs", [lhs](int trunc) { return sum_hyper(lhs, trunc); }},
        {"rhs", rhs},
    };
}

std::vector<Expression> ptc_sides(const Monomial &a, const Monomial &A, const Monomial &B)
{
    require(!a.is_zero(), "a must be nonzero (the identity divides by a)");
    const auto q2 = q_pow(2);
    const auto ainv = a.inverse();
    const auto mBq2 = neg(B * q2);
    const auto mAq2 = neg(A * q2);
    const auto maq2 = neg(a * q2);
    const auto Bq2_a = B * q2 * ainv;
    const auto Aq2_a = A * q2 * ainv;

    for (const auto &[x, what] : {std::pair{maq2, "(-aq^2; q^2)"}, std::pair{Bq2_a, "(Bq^2/a; q^2)_{n+1}"},
                                  std::pair{Aq2_a, "(Aq^2/a; q^2)_{n+1}"}, std::pair{mBq2, "(-Bq^2; q^2)_inf"},
                                  std::pair{mAq2, "(-Aq^2; q^2)_inf"}}) {
        require(!hits_one(x, 2), std::string(what) + " has a vanishing factor");
    }

    HT lhs;
    lhs.base_exp = 2;
    lhs.lin = 4;
    lhs.num = pochs({{mBq2, 0}, {mAq2, 0}});
    lhs.den = pochs({{maq2, 0}});
    require_converges(lhs, "left-hand sum");

    HT first;
    first.base_exp = 2;
    first.ratio = Aq2_a;
    first.den = pochs({{Bq2_a, 1}});
    require_converges(first, "first right-hand sum");

    HT second;
    second.base_exp = 2;
    second.ratio = A * B * ainv;
    second.quad = 2;
    second.lin = 6;
    second.num = pochs({{neg(ainv), 1}});
    second.den = pochs({{Bq2_a, 1}, {Aq2_a, 1}});
    require_converges(second, "second right-hand sum");

    auto rhs = [=](int trunc) {
        const auto prod = inf_product({mBq2, mAq2}, {maq2}, 2, trunc);
        return scale(prod * sum_hyper(first, trunc), neg(ainv)) + sum_hyper(second, trunc);
    };
    return {
        {"lhs", [lhs](int trunc) { return sum_hyper(lhs, trunc); }},
        {"rhs", rhs},
    };
}

CheckReport check_sides(const std::string &id, const std::vector<Expression> &sides, int trunc)
{
    LabelledSeries values;
    for (const auto &e : sides) {
        values.emplace_back(e.label, build_to_order(e.build, trunc));
    }
    return compare_series(id, trunc, values);
}

CheckReport check_heine(const Monomial &a, const Monomial &b, const Monomial &c, const Monomial &t, int trunc,
                        int base)
{
    return check_sides("heine", heine_sides(a, b, c, t, base), trunc);
}

CheckReport check_heine_limit(const Monomial &b, const Monomial &c, const Monomial &twist, int trunc)
{
    return check_sides("heine-limit", heine_limit_sides(b, c, twist), trunc);
}

CheckReport check_iterated_heine(const Monomial &a, const Monomial &b, const Monomial &c, const Monomial &t,
                                 int trunc, int base)
{
    return check_sides("iterated-heine", iterated_heine_sides(a, b, c, t, base), trunc);
}

CheckReport check_asv(const Monomial &x, const Monomial &y, int trunc, int base)
{
    return check_sides("asv", asv_sides(x, y, base), trunc);
}

CheckReport check_partial_theta(const Monomial &a, const Monomial &b, const Monomial &A, const Monomial &B,
                                int trunc)
{
    return check_sides("partial-theta", partial_theta_sides(a, b, A, B), trunc);
}

CheckReport check_ptc(const Monomial &a, const Monomial &A, const Monomial &B, int trunc)
{
    return check_sides("ptc", ptc_sides(a, A, B), trunc);
}

} // namespace sepq::props
