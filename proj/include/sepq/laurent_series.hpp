#ifndef SEPQ_LAURENT_SERIES_HPP
#define SEPQ_LAURENT_SERIES_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sepq
{

// Canonical arbitrary-precision rational (reduced, positive denominator).
using Rational = mpq_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &r);
Rational parse_rational(std::string_view text);

// coeff * q^exp. A zero coefficient is the designated zero parameter.
struct Monomial {
    Rational coeff{1};
    int exp = 0;

    Monomial() = default;
    Monomial(Rational c, int e) : coeff(std::move(c)), exp(e)
    {
        coeff.canonicalize();
    }

    static Monomial zero()
    {
        return Monomial(0, 0);
    }
    static Monomial q(int e = 1)
    {
        return Monomial(1, e);
    }

    bool is_zero() const
    {
        return sgn(coeff) == 0;
    }
    // True iff the monomial is identically 1.
    bool is_one() const
    {
        return exp == 0 && coeff == 1;
    }

    Monomial operator-() const
    {
        return Monomial(-coeff, exp);
    }
    // Throws ZeroDivision for the zero monomial.
    Monomial inverse() const;
    // m^n; 0^0 = 1.
    Monomial pow(long n) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        return Monomial(a.coeff * b.coeff, a.exp + b.exp);
    }
    friend Monomial operator/(const Monomial &a, const Monomial &b)
    {
        return a * b.inverse();
    }
    friend bool operator==(const Monomial &a, const Monomial &b)
    {
        return a.coeff == b.coeff && (a.exp == b.exp || a.is_zero());
    }
};

std::string to_string(const Monomial &m);
std::ostream &operator<<(std::ostream &os, const Monomial &m);

// Truncated Laurent series in q over the rationals.
//
// Coefficients are stored densely for exponents vmin, ..., trunc - 1. Every
// exponent below vmin is known to be zero; every exponent >= trunc is
// unknown. Operations propagate the known window pessimistically and never
// extend it.
class LaurentSeries
{
public:
    // The zero series known everywhere below trunc.
    explicit LaurentSeries(int trunc = 0);
    LaurentSeries(int vmin, int trunc, std::vector<Rational> coeffs);

    static LaurentSeries zero(int trunc)
    {
        return LaurentSeries(trunc);
    }
    static LaurentSeries one(int trunc);
    static LaurentSeries from_monomial(const Monomial &m, int trunc);
    // Coefficients for exponents vmin, vmin + 1, ...; trunc = vmin + size.
    static LaurentSeries from_coefficients(int vmin, std::vector<Rational> coeffs);

    int vmin() const
    {
        return vmin_;
    }
    int trunc() const
    {
        return trunc_;
    }
    std::span<const Rational> coeffs() const
    {
        return coeffs_;
    }

    // Exponent of the lowest nonzero coefficient, or trunc if the series is
    // zero on its whole window.
    int valuation() const;
    bool is_zero() const
    {
        return valuation() >= trunc_;
    }

    // Zero below vmin. Throws OutOfPrecision when k >= trunc.
    Rational coefficient(int k) const;

    // Same series with the window cut down to min(trunc(), t).
    LaurentSeries truncated(int t) const;
    // Same series with leading zeros dropped (vmin raised to the valuation).
    LaurentSeries trimmed() const;

    LaurentSeries operator-() const;
    LaurentSeries &operator+=(const LaurentSeries &g);
    LaurentSeries &operator-=(const LaurentSeries &g);
    LaurentSeries &operator*=(const LaurentSeries &g);

    friend LaurentSeries operator+(LaurentSeries f, const LaurentSeries &g)
    {
        return f += g;
    }
    friend LaurentSeries operator-(LaurentSeries f, const LaurentSeries &g)
    {
        return f -= g;
    }
    friend LaurentSeries operator*(const LaurentSeries &f, const LaurentSeries &g);

    // Mathematical equality: coefficients agree below the common truncation.
    friend bool operator==(const LaurentSeries &f, const LaurentSeries &g);

    std::string to_string(int max_terms = 12) const;

private:
    Rational &at(int k)
    {
        return coeffs_[static_cast<std::size_t>(k - vmin_)];
    }
    const Rational &at(int k) const
    {
        return coeffs_[static_cast<std::size_t>(k - vmin_)];
    }

    int vmin_;
    int trunc_;
    std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const LaurentSeries &f);

LaurentSeries add(const LaurentSeries &f, const LaurentSeries &g);
LaurentSeries sub(const LaurentSeries &f, const LaurentSeries &g);
LaurentSeries neg(const LaurentSeries &f);
LaurentSeries mul(const LaurentSeries &f, const LaurentSeries &g);

// Multiplicative inverse. If f = c q^v + ..., the result has valuation -v and
// is known below f.trunc() - 2v. Throws ZeroDivision if f vanishes on its
// window.
LaurentSeries invert(const LaurentSeries &f);
LaurentSeries div(const LaurentSeries &f, const LaurentSeries &g);

// Multiply by the monomial m; exponents and window shift by m.exp.
LaurentSeries scale(const LaurentSeries &f, const Monomial &m);
LaurentSeries scale(const LaurentSeries &f, const Rational &c);
inline LaurentSeries shift(const LaurentSeries &f, const Monomial &m)
{
    return scale(f, m);
}

// f * (1 + m) and f / (1 + m) with the binomial treated as exact. These are
// O(length) and agree with mul/div against the binomial expanded to a large
// enough order.
LaurentSeries mul_one_plus(const LaurentSeries &f, const Monomial &m);
LaurentSeries div_one_plus(const LaurentSeries &f, const Monomial &m);

// q -> -q.
LaurentSeries substitute_sign(const LaurentSeries &f);
// q -> q^m, m >= 1. The window becomes m * trunc.
LaurentSeries substitute_power(const LaurentSeries &f, int m);

// Lowest exponent below min(f.trunc(), g.trunc(), limit) where f and g
// differ, if any.
std::optional<int> first_mismatch(const LaurentSeries &f, const LaurentSeries &g,
                                  std::optional<int> limit = std::nullopt);

} // namespace sepq

#endif
