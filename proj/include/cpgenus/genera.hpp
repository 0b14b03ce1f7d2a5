#ifndef CPGENUS_GENERA_HPP
#define CPGENUS_GENERA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cpgenus/biseries.hpp"

namespace cpgenus {

/// The series of a Hirzebruch genus, normalized as
///   f(x) = x + sum_{k>=1} f_k x^{k+1} / (k+1)!
/// with Poly coefficients f_k. Wraps a LaurentSeries with valuation 1 and
/// leading coefficient 1.
class GenusSeries {
public:
    explicit GenusSeries(LaurentSeries f);

    const LaurentSeries& f() const { return f_; }
    const VarSet& vars() const { return f_.vars(); }
    int order() const { return f_.trunc(); }

    /// f_k = (k+1)! * [x^{k+1}] f, for k >= 1.
    Poly fk(int k) const;

private:
    LaurentSeries f_;
};

/// Builds f = x + sum_{k=1..n} fk[k] x^{k+1}/(k+1)! truncated at x^order,
/// where fk is 1-based (fk[0] ignored).
GenusSeries genus_from_coeffs(const VarSet& vs, const std::vector<Poly>& fk, int order);

/// Elliptic-curve data attached to the parameter pair (a, b).
struct CurveParams {
    Poly a, b, g2, g3, delta;
};

/// g2 = -(1/4)(8b - 3a^3)a, g3 = (1/24)(8b^2 - 12a^3 b + 3a^6),
/// delta = -b^3(3b - a^3); satisfies delta = g2^3 - 27 g3^2.
CurveParams curve_params(const Poly& a, const Poly& b);

/// Two-parameter Todd family over Q[alpha, beta]:
///   f(x) = (e^{alpha x} - e^{beta x}) / (alpha e^{alpha x} - beta e^{beta x})
/// constructed through the complete homogeneous symmetric polynomials h_k so
/// the common (alpha - beta) factor is cancelled before division.
GenusSeries todd_series(int order);

/// Same family, driven by the elementary symmetric values e1 = alpha + beta
/// and e2 = alpha*beta through the recurrence h_k = e1 h_{k-1} - e2 h_{k-2}.
/// Works over any coefficient ring, including plain rationals.
GenusSeries todd_series_from_sym(int order, const Poly& e1, const Poly& e2);

/// Laurent expansion of the Weierstrass p-function, x^-2 + sum c_k x^{2k-2}
/// with c_2 = g2/20, c_3 = g3/28 and the classical quadratic recurrence
/// c_k = 3 (sum_{m=2}^{k-2} c_m c_{k-m}) / ((2k+1)(k-3)).
LaurentSeries weierstrass_p(int order, const CurveParams& cp);

/// Elliptic family over Q[a, b]:
///   f(x) = -(2 p(x) + a^2/2) / (p'(x) - a p(x) + b - a^3/4).
GenusSeries elliptic_series(int order);
GenusSeries elliptic_series_with(int order, const Poly& a, const Poly& b);

/// Genus series with free coefficients: generators f1..f_{order-1}.
GenusSeries generic_series(int order);

/// C = (3 f1^2 - f2) / 2, the value of the genus on CP(2).
Poly cp2_constant(const Poly& f1, const Poly& f2);

/// K = 3 f1^3 - 4 f1 f2 + f3; K = 0 characterizes the Todd family.
Poly obstruction_poly(const Poly& f1, const Poly& f2, const Poly& f3);

/// Residual of the three-term functional equation
///   q(x) q(x+y) + q(-x) q(y) + q(-x-y) q(-y) - C,   q = 1/f,
/// as a BiSeries whose exactness region covers all i+j <= total_order.
/// Requires f known through x^{total_order+4}.
BiSeries functional_equation_residual(const GenusSeries& g, const Poly& c_value, int total_order);

/// Residual of the y^0 layer, q(x)^2 - f1 q(-x) + q'(-x) - C, through x^order.
/// Requires f known through x^{order+3}.
LaurentSeries residual_y0(const GenusSeries& g, const Poly& c_value, int order);

/// Residual of the y^2 layer (scaled by 12):
///   6 q q'' - K q(-x) + (3f1^2 - 2f2) q'(-x) - 3f1 q''(-x) + 2 q'''(-x)
/// through x^order. Requires f known through x^{order+5}.
LaurentSeries residual_y2(const GenusSeries& g, int order);

/// Treats f4..fn as unknowns over Q[f1,f2,f3] with C = (3f1^2 - f2)/2 and
/// solves the x^k coefficient of the y^0-layer equation for f_{k+2},
/// k = 2..n-2. Returns f4..fn (index 0 = f4), each fully expanded.
std::vector<Poly> solve_generic_coefficients(int n);

/// f8 determined from the x^4 coefficient of the y^2-layer equation instead,
/// with f4..f7 substituted from solve_generic_coefficients.
struct F8Alternate {
    Poly f8;            // over Q[f1,f2,f3]
    Integer denom;      // lcm of coefficient denominators
    Poly cleared;       // denom * f8, integer coefficients
};
F8Alternate f8_alternate();

/// The two f8 determinations differ by factor * C * K^2: the exact-division
/// witness behind the classification (divisibility_error if the identity
/// failed, which would falsify the classification).
struct Obstruction {
    Rational factor;    // nonzero rational c with difference = c * C * K^2
    Poly difference;    // f8 (y^0 route) - f8 (y^2 route)
    Poly c_poly;        // C over Q[f1,f2,f3]
    Poly k_poly;        // K over Q[f1,f2,f3]
};
Obstruction obstruction_identity();

/// L_f[CP(n)]: coefficient of x^n in (x / f(x))^{n+1}. Requires f known
/// through x^{n+1}.
Poly cp_genus(const GenusSeries& g, int n);

enum class FamilyTag { Todd, Elliptic, Degenerate, NotMultiplicative };

std::string family_tag_name(FamilyTag tag);

/// Classification of a genus from its first three coefficients. Todd implies
/// K = 0, Elliptic implies C = 0, Degenerate has both (both parameter sets
/// apply), NotMultiplicative has neither.
struct Classification {
    FamilyTag tag;
    Rational c_value, k_value;
    std::optional<std::pair<Rational, Rational>> todd_params;      // (alpha+beta, alpha*beta)
    std::optional<std::pair<Rational, Rational>> elliptic_params;  // (a, b)
};

Classification classify(const Rational& f1, const Rational& f2, const Rational& f3);

} // namespace cpgenus

#endif
