#ifndef SEPQ_TESTS_SUPPORT_HPP
#define SEPQ_TESTS_SUPPORT_HPP

// Independent oracles and hand-rolled generators shared by the tests. Nothing
// here calls into the series core, so it can be used to check it.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <sepq/enumeration.hpp>
#include <sepq/laurent_series.hpp>

namespace sepq::testing
{

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }
    bool coin()
    {
        return integer(0, 1) == 1;
    }
    // Small nonzero rational p/q with |p| <= 5, 1 <= q <= 4.
    Rational nonzero_rational()
    {
        long p = 0;
        while (p == 0) {
            p = integer(-5, 5);
        }
        Rational r(p, integer(1, 4));
        r.canonicalize();
        return r;
    }
    Rational rational()
    {
        return integer(0, 3) == 0 ? Rational(0) : nonzero_rational();
    }
    // Random series with vmin in [lo, lo + 3], `len` tracked coefficients.
    LaurentSeries series(int lo, int len, bool nonzero_lead = false)
    {
        const int vmin = static_cast<int>(integer(lo, lo + 3));
        std::vector<Rational> c(static_cast<std::size_t>(len));
        for (auto &x : c) {
            x = rational();
        }
        if (nonzero_lead && len > 0) {
            c[0] = nonzero_rational();
        }
        return LaurentSeries(vmin, vmin + len, std::move(c));
    }
    Monomial monomial(int lo_exp, int hi_exp)
    {
        return Monomial(nonzero_rational(), static_cast<int>(integer(lo_exp, hi_exp)));
    }

private:
    std::mt19937_64 gen_;
};

// Dense polynomial in q with exponents 0..size-1, used as an exact oracle.
using Poly = std::vector<mpq_class>;

inline Poly poly_mul(const Poly &a, const Poly &b, std::size_t limit)
{
    Poly r(limit);
    for (std::size_t i = 0; i < a.size() && i < limit; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j < limit; ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// 1 / p for p with p[0] != 0, to `limit` terms.
inline Poly poly_inverse(const Poly &p, std::size_t limit)
{
    Poly r(limit);
    r[0] = 1 / p[0];
    for (std::size_t k = 1; k < limit; ++k) {
        mpq_class s = 0;
        for (std::size_t j = 1; j <= k && j < p.size(); ++j) {
            s += p[j] * r[k - j];
        }
        r[k] = -s / p[0];
    }
    return r;
}

// prod_{k=0}^{count-1} (1 - c q^{e + step k}) with e >= 0 and step >= 1.
inline Poly poly_pochhammer(const mpq_class &c, int e, int step, int count, std::size_t limit)
{
    Poly r(limit);
    r[0] = 1;
    for (int k = 0; k < count; ++k) {
        const auto ex = static_cast<std::size_t>(e + step * k);
        if (ex >= limit) {
            break;
        }
        Poly f(ex + 1);
        f[0] += 1;
        f[ex] -= c;
        r = poly_mul(r, f, limit);
    }
    return r;
}

inline std::vector<mpq_class> coefficients(const LaurentSeries &f, int from, int to)
{
    std::vector<mpq_class> out;
    for (int k = from; k < to; ++k) {
        out.push_back(f.coefficient(k));
    }
    return out;
}

// All partitions of n as non-increasing size lists.
inline void partitions(int n, int max_part, std::vector<int> &cur, const std::function<void(const std::vector<int> &)> &f)
{
    if (n == 0) {
        f(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, f);
        cur.pop_back();
    }
}

// Third, naive count: filter every partition of n, weight 2^{#sizes that may
// be overlined}.
inline mpz_class naive_count(const SepConfig &cfg, Variant v, int n)
{
    mpz_class total = 0;
    const int low_bit = cfg.low_parity == Parity::Odd ? 1 : 0;
    const bool low_distinct = cfg.low == Restriction::Distinct;
    const bool high_distinct = cfg.high == Restriction::Distinct;
    std::vector<int> cur;
    partitions(n, n, cur, [&](const std::vector<int> &p) {
        int max_low = 0;
        int min_high = 0;
        std::multiset<int> low;
        std::multiset<int> high;
        for (int s : p) {
            if (s % 2 == low_bit) {
                low.insert(s);
                max_low = std::max(max_low, s);
            } else {
                high.insert(s);
                min_high = min_high == 0 ? s : std::min(min_high, s);
            }
        }
        if (max_low != 0 && min_high != 0 && min_high < max_low) {
            return;
        }
        if (low_distinct && std::set<int>(low.begin(), low.end()).size() != low.size()) {
            return;
        }
        if (high_distinct && std::set<int>(high.begin(), high.end()).size() != high.size()) {
            return;
        }
        if (v == Variant::Plain) {
            total += 1;
            return;
        }
        int w = 0;
        for (int s : std::set<int>(p.begin(), p.end())) {
            const bool distinct_block = s % 2 == low_bit ? low_distinct : high_distinct;
            if (v == Variant::Modified && distinct_block) {
                continue;
            }
            ++w;
        }
        total += mpz_class(1) << w;
    });
    return total;
}

inline std::vector<Variant> all_variants()
{
    return {Variant::Plain, Variant::Overlined, Variant::Modified};
}

} // namespace sepq::testing

#endif
