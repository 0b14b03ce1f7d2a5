#ifndef CPGENUS_RATIONAL_HPP
#define CPGENUS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cpgenus/errors.hpp"

namespace cpgenus {

// Unbounded integer. Everything in the library is exact; no floating point anywhere.
using Integer = mpz_class;

Integer factorial(unsigned n);
Integer int_lcm(const Integer& a, const Integer& b);

/// Exact fraction of unbounded integers. Always normalized: den > 0,
/// gcd(|num|, den) = 1, zero is 0/1. The ground field for every coefficient
/// ring in the library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(static_cast<signed long>(v)) {}
    Rational(int v) : q_(v) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& n, const Integer& d);
    Rational(long n, long d);

    // Accepts "p", "-p", "p/q" with optional sign on p; nothing else (no decimals).
    static Rational parse(std::string_view text);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const;
    Rational abs() const;

    // "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    mpq_class q_;   // kept canonical at all times
};

} // namespace cpgenus

#endif
