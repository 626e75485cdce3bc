#include <sepq/qfunctions.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <sepq/errors.hpp>

namespace sepq
{

namespace
{

// The k-th factor of (a; sign q^m)_n is 1 + factor_monomial(...).
Monomial negated_factor(const Monomial &a, int m, int sign, long k)
{
    Rational c = -a.coeff;
    if (sign < 0 && k % 2 != 0) {
        c = -c;
    }
    return Monomial(c, static_cast<int>(a.exp + m * k));
}

bool vanishes(const Monomial &neg_factor)
{
    return neg_factor.exp == 0 && neg_factor.coeff == -1;
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

} // namespace

LaurentSeries pochhammer(const PochhammerSpec &spec, int trunc)
{
    if (spec.step_exp < 1 || (spec.step_sign != 1 && spec.step_sign != -1)) {
        throw std::invalid_argument("pochhammer: step must be +-q^m with m >= 1");
    }
    if (spec.length && *spec.length < 0) {
        throw std::invalid_argument("pochhammer: negative length");
    }
    if (spec.base.is_zero() || (spec.length && *spec.length == 0)) {
        return LaurentSeries::one(trunc);
    }
    const auto &a = spec.base;
    const int m = spec.step_exp;
    const long n = spec.length ? *spec.length : std::numeric_limits<long>::max();

    // Factors with non-positive exponent are finitely many and must be applied
    // exactly; each negative exponent lowers the window by its magnitude.
    long deficit = 0;
    for (long k = 0; k < n && a.exp + m * k <= 0; ++k) {
        const auto f = negated_factor(a, m, spec.step_sign, k);
        if (vanishes(f)) {
            throw ZeroFactor("factor 1 - (" + to_string(Monomial(-f.coeff, f.exp)) + ") of the product is zero");
        }
        deficit += -f.exp;
    }
    const int work = static_cast<int>(trunc + deficit);
    auto r = LaurentSeries::one(work);
    for (long k = 0; k < n; ++k) {
        const long e = a.exp + m * k;
        if (e >= work) {
            break;
        }
        r = mul_one_plus(r, negated_factor(a, m, spec.step_sign, k));
    }
    return r.truncated(trunc);
}

LaurentSeries pochhammer(const Monomial &a, int m, int n, int trunc)
{
    return pochhammer(PochhammerSpec{a, m, 1, n}, trunc);
}

LaurentSeries pochhammer_inf(const Monomial &a, int m, int trunc)
{
    return pochhammer(PochhammerSpec{a, m, 1, std::nullopt}, trunc);
}

LaurentSeries theta(int trunc)
{
    if (trunc < 1) {
        throw std::invalid_argument("theta: trunc must be >= 1");
    }
    std::vector<Rational> c(static_cast<std::size_t>(trunc));
    c[0] = 1;
    for (long n = 1; n * n < trunc; ++n) {
        c[static_cast<std::size_t>(n * n)] = 2;
    }
    return LaurentSeries::from_coefficients(0, std::move(c));
}

LaurentSeries sigma(int trunc)
{
    HyperTerm t;
    t.quad = 1;
    t.lin = 1;
    t.den = {{Monomial(-1, 1), 0}};
    return sum_hyper(t, trunc);
}

LaurentSeries phi(int trunc)
{
    HyperTerm t;
    t.base_exp = 2;
    t.quad = 2;
    t.den = {{Monomial(-1, 2), 0}};
    return sum_hyper(t, trunc);
}

long default_iteration_cap(int trunc)
{
    return 10L * std::max(trunc, 0) + 64;
}

LaurentSeries sum_series(const TermFn &term, const BoundFn &val_bound, int trunc, std::optional<long> cap)
{
    const long limit = cap.value_or(default_iteration_cap(trunc));
    LaurentSeries acc(trunc);
    for (long n = 0;; ++n) {
        const long bound = val_bound(n);
        if (bound >= trunc) {
            break;
        }
        if (n >= limit) {
            throw NonConvergent("summation did not reach q^" + std::to_string(trunc) + " within " + std::to_string(limit)
                                + " terms (valuation bound " + std::to_string(bound) + ")");
        }
        const auto t = term(n, trunc);
        const int v = t.valuation();
        if (v < t.trunc() && v < bound) {
            throw std::logic_error("term " + std::to_string(n) + " has valuation " + std::to_string(v)
                                   + " below its certified bound " + std::to_string(bound));
        }
        acc += t;
    }
    return acc;
}

std::vector<LaurentSeries> pochhammer_in_a(int n, int trunc, int m)
{
    if (n < 0) {
        throw std::invalid_argument("pochhammer_in_a: n must be >= 0");
    }
    std::vector<LaurentSeries> e(static_cast<std::size_t>(n + 1), LaurentSeries(trunc));
    e[0] = LaurentSeries::one(trunc);
    for (int k = 0; k < n; ++k) {
        const Monomial step(-1, m * k);
        for (auto j = static_cast<std::size_t>(k + 1); j >= 1; --j) {
            e[j] += scale(e[j - 1], step);
        }
    }
    return e;
}

long HyperTerm::power_exponent(long n) const
{
    const long twice = quad * n * n + lin * n;
    if (twice % 2 != 0) {
        throw std::invalid_argument("HyperTerm: (quad n^2 + lin n)/2 must be an integer");
    }
    return twice / 2 + constant + n * ratio.exp;
}

namespace
{

// Sum over all factors (a Q^k), k >= from, of min(0, exponent).
long negative_exponent_mass(const Monomial &a, int m, long from)
{
    if (a.is_zero()) {
        return 0;
    }
    long total = 0;
    for (long k = from; a.exp + m * k < 0; ++k) {
        total += a.exp + m * k;
    }
    return total;
}

long body_lower_bound(const HyperTerm &t)
{
    const int m = t.base_exp;
    long c = 0;
    for (const auto &p : t.num) {
        c += negative_exponent_mass(p.base, m, 0);
    }
    for (const auto &p : t.num_tails) {
        c += negative_exponent_mass(p.base, m, std::min(0, p.offset));
    }
    for (const auto &p : t.den) {
        // (a; Q)_{n+o} with n + o < 0 puts factors (1 - a Q^{-j}) upstairs.
        if (p.offset < 0 && !p.base.is_zero()) {
            for (int j = 1; j <= -p.offset; ++j) {
                c += std::min(0L, static_cast<long>(p.base.exp) - static_cast<long>(m) * j);
            }
        }
    }
    for (const auto &b : t.num_binomials) {
        if (b.exp_step < 0) {
            throw std::invalid_argument("HyperTerm: numerator binomials need a nonnegative exponent step");
        }
        c += std::min(0, b.exp0);
    }
    return c;
}

// Pochhammer parts (everything except binomials and the power factor) for a
// given n, from scratch. Positive-exponent factors are applied first, while
// the product still has nonnegative valuation, so factors at or beyond
// `work` can be dropped; the finitely many factors with non-positive
// exponent are applied exactly afterwards.
LaurentSeries hyper_body(const HyperTerm &t, long n, int work)
{
    const int m = t.base_exp;
    std::vector<std::pair<Monomial, bool>> factors;
    auto add = [&](const Monomial &a, long k, bool upstairs) {
        if (!a.is_zero()) {
            factors.emplace_back(negated_factor(a, m, 1, k), upstairs);
        }
    };
    for (const auto &p : t.num) {
        const long len = n + p.offset;
        for (long k = 0; k < len; ++k) {
            add(p.base, k, true);
        }
        for (long j = 1; j <= -len; ++j) {
            add(p.base, -j, false);
        }
    }
    for (const auto &p : t.den) {
        const long len = n + p.offset;
        for (long k = 0; k < len; ++k) {
            add(p.base, k, false);
        }
        for (long j = 1; j <= -len; ++j) {
            add(p.base, -j, true);
        }
    }
    for (const auto &p : t.num_tails) {
        for (long k = n + p.offset; !p.base.is_zero() && p.base.exp + m * k < work; ++k) {
            add(p.base, k, true);
        }
    }
    for (const auto &p : t.den_tails) {
        for (long k = n + p.offset; !p.base.is_zero() && p.base.exp + m * k < work; ++k) {
            add(p.base, k, false);
        }
    }
    std::stable_partition(factors.begin(), factors.end(), [](const auto &f) { return f.first.exp > 0; });
    auto r = LaurentSeries::one(work);
    for (const auto &[f, upstairs] : factors) {
        if (f.exp > 0 && f.exp + r.vmin() >= r.trunc()) {
            continue;
        }
        r = upstairs ? mul_one_plus(r, f) : div_one_plus(r, f);
    }
    return r;
}

LaurentSeries apply_binomials(const HyperTerm &t, LaurentSeries body, long n)
{
    for (const auto &b : t.num_binomials) {
        body = mul_one_plus(body, Monomial(b.coeff, static_cast<int>(b.exp0 + b.exp_step * n)));
    }
    for (const auto &b : t.den_binomials) {
        body = div_one_plus(body, Monomial(b.coeff, static_cast<int>(b.exp0 + b.exp_step * n)));
    }
    return body;
}

Monomial power_factor(const HyperTerm &t, long n)
{
    const auto r = t.ratio.pow(n);
    const long twice = t.quad * n * n + t.lin * n;
    return Monomial(t.scalar * r.coeff, static_cast<int>(twice / 2 + t.constant + r.exp));
}

} // namespace

long hyper_val_bound(const HyperTerm &t, long n)
{
    if (sgn(t.scalar) == 0 || (t.ratio.is_zero() && n >= 1)) {
        return unbounded_valuation;
    }
    // Envelope min_{j >= n} P(j) of the power exponent P.
    long env = t.power_exponent(n);
    if (t.quad < 0) {
        return -unbounded_valuation;
    }
    const long twice_slope = t.lin + 2L * t.ratio.exp; // P(j) = (quad j^2 + twice_slope j)/2 + c
    if (t.quad == 0) {
        if (twice_slope < 0) {
            return -unbounded_valuation;
        }
    } else {
        // Vertex at -twice_slope / (2 quad).
        const long lo = floor_div(-twice_slope, 2 * t.quad);
        for (long j : {lo, lo + 1}) {
            if (j > n) {
                env = std::min(env, t.power_exponent(j));
            }
        }
    }
    return env + body_lower_bound(t);
}

bool hyper_converges(const HyperTerm &t)
{
    if (sgn(t.scalar) == 0 || t.ratio.is_zero()) {
        return true;
    }
    return t.quad > 0 || (t.quad == 0 && t.lin + 2L * t.ratio.exp > 0);
}

LaurentSeries hyper_term(const HyperTerm &t, long n, int trunc)
{
    if (sgn(t.scalar) == 0 || (t.ratio.is_zero() && n >= 1)) {
        return LaurentSeries(trunc);
    }
    const auto pf = power_factor(t, n);
    const long target = static_cast<long>(trunc) - pf.exp;
    long slack = -body_lower_bound(t);
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto body = apply_binomials(t, hyper_body(t, n, static_cast<int>(target + slack)), n);
        if (body.trunc() >= target) {
            return scale(body, pf).truncated(trunc);
        }
        slack += target - body.trunc();
    }
    throw OutOfPrecision("hyper_term: could not reach the requested window");
}

namespace
{

LaurentSeries sum_hyper_once(const HyperTerm &t, int trunc, int work, long limit)
{
    const int m = t.base_exp;
    auto body = hyper_body(t, 0, work);
    LaurentSeries acc(trunc);
    auto step = [&](const Monomial &a, long k, bool upstairs) {
        if (a.is_zero()) {
            return;
        }
        const auto f = negated_factor(a, m, 1, k);
        if (f.exp > 0 && f.exp + body.vmin() >= body.trunc()) {
            return;
        }
        body = upstairs ? mul_one_plus(body, f) : div_one_plus(body, f);
    };
    for (long n = 0;; ++n) {
        const long bound = hyper_val_bound(t, n);
        if (bound >= trunc) {
            break;
        }
        if (n >= limit) {
            throw NonConvergent("hypergeometric sum did not reach q^" + std::to_string(trunc) + " within "
                                + std::to_string(limit) + " terms");
        }
        if (n > 0) {
            for (const auto &p : t.num) {
                step(p.base, n - 1 + p.offset, true);
            }
            for (const auto &p : t.den) {
                step(p.base, n - 1 + p.offset, false);
            }
            for (const auto &p : t.num_tails) {
                step(p.base, n - 1 + p.offset, false);
            }
            for (const auto &p : t.den_tails) {
                step(p.base, n - 1 + p.offset, true);
            }
        }
        auto term = scale(apply_binomials(t, body, n), power_factor(t, n));
        const int v = term.valuation();
        if (v < term.trunc() && v < bound) {
            throw std::logic_error("hypergeometric term " + std::to_string(n) + " has valuation " + std::to_string(v)
                                   + " below its certified bound " + std::to_string(bound));
        }
        acc += term;
    }
    return acc;
}

} // namespace

LaurentSeries sum_hyper(const HyperTerm &t, int trunc, std::optional<long> cap)
{
    if (sgn(t.scalar) == 0) {
        return LaurentSeries(trunc);
    }
    const long limit = cap.value_or(default_iteration_cap(trunc));
    // Enough room for the lowest power factor and all negative-exponent
    // numerator factors; widened below if the window still falls short.
    long slack = -body_lower_bound(t) + std::max(0L, body_lower_bound(t) - hyper_val_bound(t, 0));
    slack = std::min<long>(slack, 4L * trunc + 4096);
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto r = sum_hyper_once(t, trunc, static_cast<int>(trunc + slack), limit);
        if (r.trunc() >= trunc) {
            return r;
        }
        slack += trunc - r.trunc();
    }
    throw OutOfPrecision("sum_hyper: could not reach the requested window");
}

} // namespace sepq
