#ifndef CPGENUS_LAURENT_HPP
#define CPGENUS_LAURENT_HPP

#include <map>
#include <string>

#include "cpgenus/poly.hpp"

namespace cpgenus {

/// Truncated Laurent series sum_{k=v..N} c_k x^k with Poly coefficients and a
/// possibly negative valuation. Every coefficient with exponent <= trunc() is
/// known exactly (those below the valuation are zero); nothing is claimed
/// beyond trunc(). Arithmetic reduces the truncation per the propagation rules
/// documented on each operation; coefficients are never fabricated.
class LaurentSeries {
public:
    LaurentSeries(VarSet vars, int trunc) : vars_(std::move(vars)), trunc_(trunc) {}

    static LaurentSeries zero(const VarSet& vs, int trunc) { return LaurentSeries(vs, trunc); }
    // c * x^exp, known through x^trunc.
    static LaurentSeries term(const Poly& c, int exp, int trunc);
    static LaurentSeries constant(const Poly& c, int trunc) { return term(c, 0, trunc); }
    static LaurentSeries from_coeffs(VarSet vars, std::map<int, Poly> coeffs, int trunc);

    const VarSet& vars() const { return vars_; }
    int trunc() const { return trunc_; }
    // Lowest exponent with a nonzero coefficient; trunc()+1 when the series is
    // identically zero as far as it is known.
    int valuation() const { return coeffs_.empty() ? trunc_ + 1 : coeffs_.begin()->first; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Poly>& coeffs() const { return coeffs_; }

    // truncation_error above trunc(); known zeros (including below the
    // valuation) are returned as the zero Poly.
    Poly coeff(int k) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    // trunc_out = min(N_a + v_b, N_b + v_a)
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries scaled(const Rational& c) const;
    LaurentSeries scaled_by(const Poly& p) const;   // exact; truncation unchanged
    LaurentSeries shifted(int k) const;             // multiply by x^k exactly
    LaurentSeries pow(unsigned e) const;
    // Forget knowledge above n (n must not exceed trunc()).
    LaurentSeries truncated(int n) const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }
    // Coefficient-wise agreement through x^upto (upto must be within both truncations).
    bool agrees_with(const LaurentSeries& o, int upto) const;

    std::string str() const;

private:
    void put(int k, const Poly& c);   // accumulate, drop zeros, respect trunc_

    VarSet vars_;
    std::map<int, Poly> coeffs_;      // ascending exponent, no zero entries
    int trunc_;

    friend LaurentSeries reciprocal(const LaurentSeries& s);
    friend LaurentSeries derivative(const LaurentSeries& s, unsigned n);
    friend LaurentSeries negate_arg(const LaurentSeries& s);
    friend LaurentSeries exp_linear(const Poly& c, int n);
};

/// Multiplicative inverse. Requires the leading coefficient to be a nonzero
/// rational constant (unit_error otherwise). Result has valuation -v and
/// truncation N - 2v.
LaurentSeries reciprocal(const LaurentSeries& s);

/// n-th derivative; truncation drops by n.
LaurentSeries derivative(const LaurentSeries& s, unsigned n = 1);

/// s(-x): coefficient at x^k picks up (-1)^k.
LaurentSeries negate_arg(const LaurentSeries& s);

/// sum_{k=0..n} c^k x^k / k! for a Poly c of total degree <= 1.
LaurentSeries exp_linear(const Poly& c, int n);

} // namespace cpgenus

#endif
