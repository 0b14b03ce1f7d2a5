#ifndef CPGENUS_POLY_HPP
#define CPGENUS_POLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cpgenus/rational.hpp"
#include "cpgenus/varset.hpp"

namespace cpgenus {

// Exponent vector over a VarSet; length always equals the VarSet arity.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

// Graded-lexicographic order, highest first: higher total degree wins, ties
// broken lexicographically on the exponent vector in VarSet order. Map
// iteration in this order is the canonical term order used by the printer.
struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Rational in a fixed VarSet.
/// Invariants: no stored zero coefficients; all exponent vectors have the
/// VarSet's arity. Immutable value semantics; all operations are pure.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDesc>;

    Poly() = default;                                // zero over the empty VarSet
    explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

    static Poly zero(const VarSet& vs) { return Poly(vs); }
    static Poly constant(const VarSet& vs, const Rational& c);
    static Poly generator(const VarSet& vs, std::string_view name);
    static Poly generator(const VarSet& vs, std::size_t index);
    static Poly from_terms(const VarSet& vs, std::vector<std::pair<Exponents, Rational>> terms);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // The constant value of a constant polynomial; usage_error otherwise.
    Rational as_rational() const;

    int degree() const;                      // total degree; -1 for the zero poly
    unsigned degree_in(std::size_t var) const;
    bool occurs(std::size_t var) const { return degree_in(var) > 0; }

    const Rational& coeff(const Exponents& e) const;   // zero Rational if absent

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly scaled(const Rational& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Canonical text form: terms in graded-lex descending order, explicit '*',
    /// e.g. "15*f1^4 - 25*f1^2*f2 + 7*f1*f3 + 4*f2^2". Zero prints "0".
    std::string str() const;

    /// Parses the text grammar: integer and p/q rational literals, generator
    /// names from `vs`, + - * ^ and parentheses. Round-trips str().
    static Poly parse(const VarSet& vs, std::string_view text);

private:
    void add_term(const Exponents& e, const Rational& c);  // merges, drops zeros
    static void require_same_vars(const Poly& a, const Poly& b, const char* op);

    VarSet vars_;
    TermMap terms_;

    friend class PolyBuilder;
};

/// Exact polynomial composition. Every generator of p that occurs must either
/// be bound or exist (by name) in the target VarSet, where it is carried
/// through. All bindings must share the target VarSet.
Poly substitute(const Poly& p, const std::vector<std::pair<std::string, Poly>>& bindings,
                const VarSet& target);

// Convenience: target deduced from the first binding's VarSet (usage_error if
// there are no bindings).
Poly substitute(const Poly& p, const std::vector<std::pair<std::string, Poly>>& bindings);

/// Exact evaluation; every occurring generator must be bound.
Rational eval(const Poly& p, const std::vector<std::pair<std::string, Rational>>& point);

/// Returns q with q*d == p exactly; divisibility_error when p is not a
/// multiple of d (itself a meaningful outcome), usage_error when d is zero.
Poly divide_exact(const Poly& p, const Poly& d);

// Least common multiple of all coefficient denominators (1 for the zero poly).
Integer denominator_lcm(const Poly& p);

} // namespace cpgenus

#endif
