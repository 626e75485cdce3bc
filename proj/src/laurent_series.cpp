#include <sepq/laurent_series.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <sepq/errors.hpp>

namespace sepq
{

std::string to_string(const Rational &r)
{
    return r.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid = !s.empty();
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < s.size() && valid; ++i) {
        const auto ch = static_cast<unsigned char>(s[i]);
        if (s[i] == '/') {
            ++slashes;
            valid = i > 0 && i + 1 < s.size() && slashes == 1;
        } else if (s[i] == '-' || s[i] == '+') {
            valid = i == 0 || s[i - 1] == '/';
        } else {
            valid = std::isdigit(ch) != 0;
        }
    }
    if (!valid) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    if (s.front() == '+') {
        s.erase(0, 1);
    }
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

Monomial Monomial::inverse() const
{
    if (is_zero()) {
        throw ZeroDivision("inverse of the zero monomial");
    }
    return Monomial(1 / coeff, -exp);
}

Monomial Monomial::pow(long n) const
{
    if (n < 0) {
        return inverse().pow(-n);
    }
    if (n == 0) {
        return Monomial(1, 0);
    }
    if (is_zero()) {
        return zero();
    }
    Rational c = 1;
    mpz_pow_ui(c.get_num_mpz_t(), coeff.get_num_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(c.get_den_mpz_t(), coeff.get_den_mpz_t(), static_cast<unsigned long>(n));
    return Monomial(c, static_cast<int>(exp * n));
}

std::string to_string(const Monomial &m)
{
    if (m.is_zero()) {
        return "0";
    }
    if (m.exp == 0) {
        return to_string(m.coeff);
    }
    std::string out;
    if (m.coeff == -1) {
        out = "-";
    } else if (m.coeff != 1) {
        out = to_string(m.coeff) + "*";
    }
    out += "q";
    if (m.exp != 1) {
        out += "^" + std::to_string(m.exp);
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const Monomial &m)
{
    return os << to_string(m);
}

LaurentSeries::LaurentSeries(int trunc) : vmin_(trunc), trunc_(trunc) {}

LaurentSeries::LaurentSeries(int vmin, int trunc, std::vector<Rational> coeffs)
    : vmin_(std::min(vmin, trunc)), trunc_(trunc), coeffs_(std::move(coeffs))
{
    coeffs_.resize(static_cast<std::size_t>(trunc_ - vmin_));
    for (auto &c : coeffs_) {
        c.canonicalize();
    }
}

LaurentSeries LaurentSeries::one(int trunc)
{
    return from_monomial(Monomial(1, 0), trunc);
}

LaurentSeries LaurentSeries::from_monomial(const Monomial &m, int trunc)
{
    if (m.is_zero() || m.exp >= trunc) {
        return LaurentSeries(trunc);
    }
    std::vector<Rational> c(static_cast<std::size_t>(trunc - m.exp));
    c[0] = m.coeff;
    return LaurentSeries(m.exp, trunc, std::move(c));
}

LaurentSeries LaurentSeries::from_coefficients(int vmin, std::vector<Rational> coeffs)
{
    const int trunc = vmin + static_cast<int>(coeffs.size());
    return LaurentSeries(vmin, trunc, std::move(coeffs));
}

int LaurentSeries::valuation() const
{
    for (int k = vmin_; k < trunc_; ++k) {
        if (sgn(at(k)) != 0) {
            return k;
        }
    }
    return trunc_;
}

Rational LaurentSeries::coefficient(int k) const
{
    if (k >= trunc_) {
        throw OutOfPrecision("coefficient of q^" + std::to_string(k) + " requested; series known below q^"
                             + std::to_string(trunc_));
    }
    if (k < vmin_) {
        return 0;
    }
    return at(k);
}

LaurentSeries LaurentSeries::truncated(int t) const
{
    if (t >= trunc_) {
        return *this;
    }
    const int v = std::min(vmin_, t);
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (t - v));
    return LaurentSeries(v, t, std::move(c));
}

LaurentSeries LaurentSeries::trimmed() const
{
    const int v = valuation();
    std::vector<Rational> c(coeffs_.begin() + (v - vmin_), coeffs_.end());
    return LaurentSeries(v, trunc_, std::move(c));
}

LaurentSeries LaurentSeries::operator-() const
{
    auto r = *this;
    for (auto &c : r.coeffs_) {
        mpq_neg(c.get_mpq_t(), c.get_mpq_t());
    }
    return r;
}

namespace
{

template <typename Op>
LaurentSeries pointwise(const LaurentSeries &f, const LaurentSeries &g, Op op)
{
    const int t = std::min(f.trunc(), g.trunc());
    const int v = std::min({f.vmin(), g.vmin(), t});
    std::vector<Rational> c(static_cast<std::size_t>(t - v));
    for (int k = std::max(f.vmin(), v); k < std::min(f.trunc(), t); ++k) {
        c[static_cast<std::size_t>(k - v)] = f.coeffs()[static_cast<std::size_t>(k - f.vmin())];
    }
    for (int k = std::max(g.vmin(), v); k < std::min(g.trunc(), t); ++k) {
        op(c[static_cast<std::size_t>(k - v)], g.coeffs()[static_cast<std::size_t>(k - g.vmin())]);
    }
    return LaurentSeries(v, t, std::move(c));
}

} // namespace

LaurentSeries &LaurentSeries::operator+=(const LaurentSeries &g)
{
    *this = pointwise(*this, g, [](Rational &a, const Rational &b) { a += b; });
    return *this;
}

LaurentSeries &LaurentSeries::operator-=(const LaurentSeries &g)
{
    *this = pointwise(*this, g, [](Rational &a, const Rational &b) { a -= b; });
    return *this;
}

LaurentSeries &LaurentSeries::operator*=(const LaurentSeries &g)
{
    *this = *this * g;
    return *this;
}

LaurentSeries operator*(const LaurentSeries &f, const LaurentSeries &g)
{
    const int vf = f.valuation();
    const int vg = g.valuation();
    const int t = std::min(f.trunc() + vg, g.trunc() + vf);
    const int v = std::min(f.vmin() + g.vmin(), t);
    std::vector<Rational> c(static_cast<std::size_t>(t - v));
    Rational tmp;
    for (int i = vf; i < f.trunc(); ++i) {
        const auto &a = f.at(i);
        if (sgn(a) == 0) {
            continue;
        }
        const int jmax = std::min(g.trunc(), t - i);
        for (int j = vg; j < jmax; ++j) {
            const auto &b = g.at(j);
            if (sgn(b) == 0) {
                continue;
            }
            mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
            auto &dst = c[static_cast<std::size_t>(i + j - v)];
            mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
        }
    }
    return LaurentSeries(v, t, std::move(c));
}

bool operator==(const LaurentSeries &f, const LaurentSeries &g)
{
    return !first_mismatch(f, g).has_value();
}

std::string LaurentSeries::to_string(int max_terms) const
{
    std::ostringstream os;
    int shown = 0;
    for (int k = vmin_; k < trunc_ && shown < max_terms; ++k) {
        const auto &c = at(k);
        if (sgn(c) == 0) {
            continue;
        }
        if (shown > 0) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << "-";
        }
        const Rational a = abs(c);
        if (k == 0 || a != 1) {
            os << sepq::to_string(a);
        }
        if (k != 0) {
            os << "q";
            if (k != 1) {
                os << "^" << k;
            }
        }
        ++shown;
    }
    if (shown == 0) {
        os << "0";
    }
    os << " + O(q^" << trunc_ << ")";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const LaurentSeries &f)
{
    return os << f.to_string();
}

LaurentSeries add(const LaurentSeries &f, const LaurentSeries &g)
{
    return f + g;
}

LaurentSeries sub(const LaurentSeries &f, const LaurentSeries &g)
{
    return f - g;
}

LaurentSeries neg(const LaurentSeries &f)
{
    return -f;
}

LaurentSeries mul(const LaurentSeries &f, const LaurentSeries &g)
{
    return f * g;
}

LaurentSeries invert(const LaurentSeries &f)
{
    const int v = f.valuation();
    if (v >= f.trunc()) {
        throw ZeroDivision("inverting a series that vanishes below q^" + std::to_string(f.trunc()));
    }
    const auto a = f.coeffs().subspan(static_cast<std::size_t>(v - f.vmin()));
    const auto len = a.size();
    const Rational lead_inv = 1 / a[0];
    std::vector<Rational> h(len);
    h[0] = lead_inv;
    Rational acc, tmp;
    for (std::size_t k = 1; k < len; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(a[j]) == 0 || sgn(h[k - j]) == 0) {
                continue;
            }
            mpq_mul(tmp.get_mpq_t(), a[j].get_mpq_t(), h[k - j].get_mpq_t());
            mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
        }
        if (sgn(acc) != 0) {
            h[k] = -acc * lead_inv;
        }
    }
    return LaurentSeries(-v, f.trunc() - 2 * v, std::move(h));
}

LaurentSeries div(const LaurentSeries &f, const LaurentSeries &g)
{
    return f * invert(g);
}

LaurentSeries scale(const LaurentSeries &f, const Monomial &m)
{
    if (m.is_zero()) {
        return LaurentSeries(f.trunc());
    }
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    if (m.coeff != 1) {
        for (auto &x : c) {
            if (sgn(x) != 0) {
                mpq_mul(x.get_mpq_t(), x.get_mpq_t(), m.coeff.get_mpq_t());
            }
        }
    }
    return LaurentSeries(f.vmin() + m.exp, f.trunc() + m.exp, std::move(c));
}

LaurentSeries scale(const LaurentSeries &f, const Rational &c)
{
    return scale(f, Monomial(c, 0));
}

LaurentSeries mul_one_plus(const LaurentSeries &f, const Monomial &m)
{
    if (m.is_zero()) {
        return f;
    }
    if (m.exp < 0) {
        return scale(mul_one_plus(f, m.inverse()), m);
    }
    if (m.exp == 0) {
        return scale(f, Rational(1 + m.coeff));
    }
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    const auto e = static_cast<std::size_t>(m.exp);
    Rational tmp;
    for (std::size_t k = c.size(); k-- > e;) {
        const auto &src = f.coeffs()[k - e];
        if (sgn(src) == 0) {
            continue;
        }
        mpq_mul(tmp.get_mpq_t(), src.get_mpq_t(), m.coeff.get_mpq_t());
        mpq_add(c[k].get_mpq_t(), c[k].get_mpq_t(), tmp.get_mpq_t());
    }
    return LaurentSeries(f.vmin(), f.trunc(), std::move(c));
}

LaurentSeries div_one_plus(const LaurentSeries &f, const Monomial &m)
{
    if (m.is_zero()) {
        return f;
    }
    if (m.exp < 0) {
        // 1 + c q^e = c q^e (1 + c^{-1} q^{-e})
        const auto inv = m.inverse();
        return scale(div_one_plus(f, inv), inv);
    }
    if (m.exp == 0) {
        const Rational d = 1 + m.coeff;
        if (sgn(d) == 0) {
            throw ZeroDivision("division by the vanishing factor 1 + (" + to_string(m) + ")");
        }
        return scale(f, Rational(1 / d));
    }
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    const auto e = static_cast<std::size_t>(m.exp);
    Rational tmp;
    for (std::size_t k = e; k < c.size(); ++k) {
        if (sgn(c[k - e]) == 0) {
            continue;
        }
        mpq_mul(tmp.get_mpq_t(), c[k - e].get_mpq_t(), m.coeff.get_mpq_t());
        mpq_sub(c[k].get_mpq_t(), c[k].get_mpq_t(), tmp.get_mpq_t());
    }
    return LaurentSeries(f.vmin(), f.trunc(), std::move(c));
}

LaurentSeries substitute_sign(const LaurentSeries &f)
{
    std::vector<Rational> c(f.coeffs().begin(), f.coeffs().end());
    for (int k = f.vmin(); k < f.trunc(); ++k) {
        if (k % 2 != 0) {
            auto &x = c[static_cast<std::size_t>(k - f.vmin())];
            mpq_neg(x.get_mpq_t(), x.get_mpq_t());
        }
    }
    return LaurentSeries(f.vmin(), f.trunc(), std::move(c));
}

LaurentSeries substitute_power(const LaurentSeries &f, int m)
{
    if (m < 1) {
        throw std::invalid_argument("substitute_power: exponent must be >= 1");
    }
    const int v = f.vmin() * m;
    const int t = f.trunc() * m;
    std::vector<Rational> c(static_cast<std::size_t>(t - v));
    for (int k = f.vmin(); k < f.trunc(); ++k) {
        c[static_cast<std::size_t>(k * m - v)] = f.coeffs()[static_cast<std::size_t>(k - f.vmin())];
    }
    return LaurentSeries(v, t, std::move(c));
}

std::optional<int> first_mismatch(const LaurentSeries &f, const LaurentSeries &g, std::optional<int> limit)
{
    int t = std::min(f.trunc(), g.trunc());
    if (limit) {
        t = std::min(t, *limit);
    }
    for (int k = std::min(f.vmin(), g.vmin()); k < t; ++k) {
        const bool fz = k < f.vmin();
        const bool gz = k < g.vmin();
        if (fz && gz) {
            continue;
        }
        if (fz || gz) {
            const auto &x = fz ? g.coeffs()[static_cast<std::size_t>(k - g.vmin())]
                               : f.coeffs()[static_cast<std::size_t>(k - f.vmin())];
            if (sgn(x) != 0) {
                return k;
            }
            continue;
        }
        if (f.coeffs()[static_cast<std::size_t>(k - f.vmin())] != g.coeffs()[static_cast<std::size_t>(k - g.vmin())]) {
            return k;
        }
    }
    return std::nullopt;
}

} // namespace sepq
