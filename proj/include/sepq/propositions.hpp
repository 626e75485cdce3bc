#ifndef SEPQ_PROPOSITIONS_HPP
#define SEPQ_PROPOSITIONS_HPP

#include <vector>

#include <sepq/families.hpp>
#include <sepq/laurent_series.hpp>
#include <sepq/report.hpp>

// Transformation formulas for q-hypergeometric series, checked at monomial
// parameter values. Throughout, Q = q^base and (x)_n = (x; Q)_n. Every *_sides
// function validates its parameters (PreconditionViolated names the failed
// condition) and returns the two sides tagged "lhs" and "rhs".
namespace sepq::props
{

// sum (a, b)_n / (Q, c)_n t^n
//   = (b, at)_inf / (c, t)_inf sum (c/b, t)_n / (Q, at)_n b^n.
// Requires t, b nonzero with exponent >= 1, and c, at zero or exponent >= 1.
std::vector<Expression> heine_sides(const Monomial &a, const Monomial &b, const Monomial &c, const Monomial &t,
                                    int base = 1);

// The a -> infinity form of heine_sides with Q = q^2 and t = w/a:
//   sum (b; q^2)_n (-w)^n q^{n^2-n} / (q^2, c; q^2)_n
//   = (b, w; q^2)_inf / (c; q^2)_inf sum (c/b; q^2)_n / (q^2, w; q^2)_n b^n.
// The left side takes (-1)^n q^{n^2-n} from the top a-coefficient of
// (a; q^2)_n. Requires b, w nonzero with exponent >= 1 and c zero or
// exponent >= 1.
std::vector<Expression> heine_limit_sides(const Monomial &b, const Monomial &c, const Monomial &twist);

// sum (a, b)_n / (Q, c)_n t^n
//   = (c/b, bt)_inf / (c, t)_inf sum (abt/c, b)_n / (Q, bt)_n (c/b)^n.
// Requires t, c/b and bt of exponent >= 1 and b, c nonzero; a may be zero.
std::vector<Expression> iterated_heine_sides(const Monomial &a, const Monomial &b, const Monomial &c,
                                             const Monomial &t, int base = 1);

// sum (x)_n / (y)_n Q^n = Q (x)_inf / (y (1 - xQ/y) (y)_inf) + (1 - Q/y) / (1 - xQ/y).
// Requires y nonzero, x zero or exponent >= 1, y exponent >= 1. Throws
// ZeroDivision when xQ/y = 1.
std::vector<Expression> asv_sides(const Monomial &x, const Monomial &y, int base = 1);

// With Q = q:
//   sum (B, -Abq)_n q^n / (-aq, -bq)_n
//   = -a^{-1} (B, -Abq)_inf / (-bq, -aq)_inf sum (A^{-1})_n / (-B/a)_{n+1} (Abq/a)^n
//     + (1 + b) sum (-a^{-1})_{n+1} (-ABq/a)_n / (-B/a, Abq/a)_{n+1} (-b)^n.
// Requires a, A nonzero, no identically vanishing denominator factor, and
// formally convergent sums.
std::vector<Expression> partial_theta_sides(const Monomial &a, const Monomial &b, const Monomial &A,
                                            const Monomial &B);

// With Q = q^2:
//   sum (-Bq^2, -Aq^2)_n / (-aq^2)_n q^{2n}
//   = -a^{-1} (-Bq^2, -Aq^2)_inf / (-aq^2)_inf sum (Aq^2/a)^n / (Bq^2/a)_{n+1}
//     + sum (-a^{-1})_{n+1} / (Bq^2/a, Aq^2/a)_{n+1} (AB/a)^n q^{n^2+3n}.
// Requires a nonzero and the conditions of partial_theta_sides on the q^2
// lattice; negative exponents are allowed where the sums still converge.
std::vector<Expression> ptc_sides(const Monomial &a, const Monomial &A, const Monomial &B);

// Evaluates both sides to `trunc` and compares them.
CheckReport check_sides(const std::string &id, const std::vector<Expression> &sides, int trunc);

CheckReport check_heine(const Monomial &a, const Monomial &b, const Monomial &c, const Monomial &t, int trunc,
                        int base = 1);
CheckReport check_heine_limit(const Monomial &b, const Monomial &c, const Monomial &twist, int trunc);
CheckReport check_iterated_heine(const Monomial &a, const Monomial &b, const Monomial &c, const Monomial &t,
                                 int trunc, int base = 1);
CheckReport check_asv(const Monomial &x, const Monomial &y, int trunc, int base = 1);
CheckReport check_partial_theta(const Monomial &a, const Monomial &b, const Monomial &A, const Monomial &B,
                                int trunc);
CheckReport check_ptc(const Monomial &a, const Monomial &A, const Monomial &B, int trunc);

} // namespace sepq::props

#endif
