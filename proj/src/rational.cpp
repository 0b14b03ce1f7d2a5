#include "cpgenus/rational.hpp"

#include <cctype>

namespace cpgenus {

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer int_lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Rational::Rational(const Integer& n, const Integer& d) : q_(n, d) {
    if (sgn(d) == 0) throw usage_error("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_int(den) || den.front() == '-' || den.front() == '+')
            throw usage_error("bad rational literal: '" + std::string(text) + "'");
    }
    if (!is_int(num))
        throw usage_error("bad rational literal: '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    if (den.empty()) return Rational(n);
    Integer d(std::string(den), 10);
    return Rational(n, d);
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw usage_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw usage_error("inverse of zero rational");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

std::string Rational::str() const {
    return q_.get_str();
}

} // namespace cpgenus
