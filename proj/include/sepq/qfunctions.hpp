#ifndef SEPQ_QFUNCTIONS_HPP
#define SEPQ_QFUNCTIONS_HPP

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include <sepq/laurent_series.hpp>

namespace sepq
{

// (base; Q)_length with Q = step_sign * q^step_exp. An empty length means
// the infinite product.
struct PochhammerSpec {
    Monomial base;
    int step_exp = 1;
    int step_sign = 1;
    std::optional<int> length;
};

// Exact product known below trunc. Infinite products stop at the first
// factor whose exponent reaches the working window. Throws ZeroFactor when a
// factor is identically zero.
LaurentSeries pochhammer(const PochhammerSpec &spec, int trunc);

// (a; q^m)_n and (a; q^m)_inf.
LaurentSeries pochhammer(const Monomial &a, int m, int n, int trunc);
LaurentSeries pochhammer_inf(const Monomial &a, int m, int trunc);

// sum_{n in Z} q^{n^2}
LaurentSeries theta(int trunc);
// sum_{n >= 0} q^{n(n+1)/2} / (-q; q)_n
LaurentSeries sigma(int trunc);
// sum_{n >= 0} q^{n^2} / (-q^2; q^2)_n
LaurentSeries phi(int trunc);

inline constexpr long unbounded_valuation = std::numeric_limits<long>::max() / 4;

using TermFn = std::function<LaurentSeries(long n, int trunc)>;
using BoundFn = std::function<long(long n)>;

long default_iteration_cap(int trunc);

// Sum of term(n) over every n with val_bound(n) < trunc. val_bound must be
// a certified lower bound on the valuation of term(n) that is nondecreasing
// and tends to infinity. The result is known below min(trunc, window of every
// included term). Throws NonConvergent if the bound has not reached trunc
// after `cap` terms, and std::logic_error if a term violates its bound.
LaurentSeries sum_series(const TermFn &term, const BoundFn &val_bound, int trunc,
                         std::optional<long> cap = std::nullopt);

// Coefficients of a^j, j = 0..n, in prod_{k<n} (1 - a q^{m k}).
std::vector<LaurentSeries> pochhammer_in_a(int n, int trunc, int m = 1);

// One q-hypergeometric summand
//
//   scalar * ratio^n * q^{(quad*n^2 + lin*n)/2 + constant}
//     * prod num (a; Q)_{n+o} * prod num_tails (a Q^{n+o}; Q)_inf
//     / prod den (a; Q)_{n+o} / prod den_tails (a Q^{n+o}; Q)_inf
//     * prod num_binomials (1 + c q^{e0 + e1 n}) / prod den_binomials (...)
//
// with Q = q^base_exp. Offsets may be negative: (a; Q)_{-k} = 1/(a Q^{-k}; Q)_k.
struct HyperTerm {
    struct Pochhammer {
        Monomial base;
        int offset = 0;
    };
    struct Binomial {
        Rational coeff;
        int exp0 = 0;
        int exp_step = 0;
    };

    int base_exp = 1;
    Rational scalar{1};
    Monomial ratio{1, 0};
    long quad = 0;
    long lin = 0;
    long constant = 0;
    std::vector<Pochhammer> num, den, num_tails, den_tails;
    std::vector<Binomial> num_binomials, den_binomials;

    // Valuation of q^{(quad n^2 + lin n)/2 + constant} * ratio^n.
    long power_exponent(long n) const;
};

// Certified lower bound on the valuation of term n; nondecreasing in n.
long hyper_val_bound(const HyperTerm &t, long n);

// Whether hyper_val_bound(t, n) tends to infinity, i.e. the sum is formally
// convergent as far as the certified bound can tell.
bool hyper_converges(const HyperTerm &t);

// Term n computed from scratch.
LaurentSeries hyper_term(const HyperTerm &t, long n, int trunc);

// Sum over n >= 0, updating the Pochhammer parts incrementally. Agrees with
// sum_series(hyper_term, hyper_val_bound).
LaurentSeries sum_hyper(const HyperTerm &t, int trunc, std::optional<long> cap = std::nullopt);

} // namespace sepq

#endif
