#include <doctest.h>

#include <random>

#include "cpgenus/genera.hpp"

using namespace cpgenus;

namespace {

const VarSet ab({"alpha", "beta"});
const VarSet ell({"a", "b"});
const VarSet none;

Poly P(const VarSet& vs, const char* text) { return Poly::parse(vs, text); }

CurveParams symbolic_curve() {
    return curve_params(Poly::generator(ell, "a"), Poly::generator(ell, "b"));
}

} // namespace

TEST_CASE("todd family coefficient dictionary") {
    GenusSeries g = todd_series(6);
    const Poly f1 = g.fk(1), f2 = g.fk(2), f3 = g.fk(3);
    CHECK(f1 == P(ab, "-alpha - beta"));
    CHECK(f2 == P(ab, "2*alpha*beta") + f1 * f1);
    // f3 = 4 f1 f2 - 3 f1^3, i.e. K vanishes identically on the family
    CHECK(f3 == (f1 * f2).scaled(Rational(4)) - f1.pow(3).scaled(Rational(3)));
    CHECK(obstruction_poly(f1, f2, f3).is_zero());
}

TEST_CASE("todd family specializes to f = x at alpha = beta = 0") {
    GenusSeries g = todd_series_from_sym(6, Poly::zero(none), Poly::zero(none));
    CHECK(g.f() == LaurentSeries::term(Poly::constant(none, Rational(1)), 1, 6));
}

TEST_CASE("direct and recurrence constructions of the todd family agree") {
    GenusSeries direct = todd_series(9);
    GenusSeries recur = todd_series_from_sym(9, P(ab, "alpha + beta"), P(ab, "alpha*beta"));
    CHECK(direct.f() == recur.f());
}

TEST_CASE("todd family is symmetric under swapping alpha and beta") {
    GenusSeries g = todd_series(8);
    std::vector<std::pair<std::string, Poly>> swap = {
        {"alpha", Poly::generator(ab, "beta")}, {"beta", Poly::generator(ab, "alpha")}};
    for (int k = 1; k <= 7; ++k) CHECK(substitute(g.fk(k), swap, ab) == g.fk(k));
}

TEST_CASE("curve parameters and discriminant normalization") {
    CurveParams cp = symbolic_curve();
    CHECK(cp.g2 == P(ell, "-1/4*(8*b - 3*a^3)*a"));
    CHECK(cp.g3 == P(ell, "1/24*(8*b^2 - 12*a^3*b + 3*a^6)"));
    CHECK(cp.delta == P(ell, "-b^3*(3*b - a^3)"));
    // Delta = g2^3 - 27 g3^2 (full symbolic expansion as the oracle)
    CHECK(cp.g2.pow(3) - cp.g3.pow(2).scaled(Rational(27)) == cp.delta);

    CurveParams num = curve_params(Poly::zero(none), Poly::constant(none, Rational(1)));
    CHECK(num.g2.is_zero());
    CHECK(num.g3 == Poly::constant(none, Rational(1, 3)));
    CHECK(num.delta == Poly::constant(none, Rational(-3)));

    CurveParams zero = curve_params(Poly::zero(none), Poly::zero(none));
    CHECK(zero.g2.is_zero());
    CHECK(zero.g3.is_zero());
    CHECK(zero.delta.is_zero());
}

TEST_CASE("weierstrass expansion starts with the classical coefficients") {
    CurveParams cp = symbolic_curve();
    LaurentSeries p = weierstrass_p(8, cp);
    CHECK(p.coeff(-2).is_one());
    CHECK(p.coeff(0).is_zero());
    CHECK(p.coeff(2) == cp.g2.scaled(Rational(1, 20)));
    CHECK(p.coeff(4) == cp.g3.scaled(Rational(1, 28)));
    CHECK(p.coeff(6) == (cp.g2 * cp.g2).scaled(Rational(1, 1200)));
    for (int k = -1; k <= 7; k += 2) CHECK(p.coeff(k).is_zero());   // even function
    CHECK(negate_arg(p) == p);
    CHECK(negate_arg(derivative(p)) == -derivative(p));
}

TEST_CASE("weierstrass series satisfies its differential equation") {
    CurveParams cp = symbolic_curve();
    LaurentSeries p = weierstrass_p(14, cp);
    LaurentSeries dp = derivative(p);
    LaurentSeries lhs = dp * dp;
    LaurentSeries rhs = p.pow(3).scaled(Rational(4)) - p.scaled_by(cp.g2) -
                        LaurentSeries::constant(cp.g3, p.trunc());
    LaurentSeries residual = lhs - rhs;
    CHECK(residual.is_zero());
    CHECK(residual.trunc() >= 8);

    // degenerate curve: p collapses to x^-2 and p'' = 6 p^2
    CurveParams flat = curve_params(Poly::zero(none), Poly::zero(none));
    LaurentSeries p0 = weierstrass_p(8, flat);
    CHECK(p0 == LaurentSeries::term(Poly::constant(none, Rational(1)), -2, 8));
    CHECK(derivative(p0, 2).agrees_with((p0 * p0).scaled(Rational(6)), 4));
}

TEST_CASE("elliptic family coefficient dictionary") {
    GenusSeries g = elliptic_series(7);
    CHECK(g.fk(1) == P(ell, "-a"));
    CHECK(g.fk(2) == P(ell, "3*a^2"));
    CHECK(g.fk(3) == P(ell, "12*b - 9*a^3"));
    CHECK(cp2_constant(g.fk(1), g.fk(2)).is_zero());    // C = 0 on the family
}

TEST_CASE("elliptic family specializes to f = x at a = b = 0") {
    GenusSeries g = elliptic_series_with(6, Poly::zero(none), Poly::zero(none));
    CHECK(g.f() == LaurentSeries::term(Poly::constant(none, Rational(1)), 1, 6));
}

TEST_CASE("functional equation residual vanishes for the todd family") {
    const int order = 6;
    GenusSeries g = todd_series(order + 4);
    const Poly c = cp2_constant(g.fk(1), g.fk(2));
    CHECK(c == P(ab, "alpha^2 + alpha*beta + beta^2"));
    BiSeries r = functional_equation_residual(g, c, order);
    CHECK(r.is_zero());
    // a wrong constant leaves a residual: the (0,0) coefficient is the true C
    BiSeries bad = functional_equation_residual(g, Poly::zero(ab), order);
    CHECK(!bad.is_zero());
    CHECK(bad.coeff(0, 0) == c);
}

TEST_CASE("functional equation residual vanishes for the elliptic family") {
    const int order = 6;
    GenusSeries g = elliptic_series(order + 4);
    BiSeries r = functional_equation_residual(g, Poly::zero(ell), order);
    CHECK(r.is_zero());
}

TEST_CASE("functional equation residual vanishes for f = x with C = 0") {
    std::vector<Poly> fk = {Poly::zero(none)};
    GenusSeries g = genus_from_coeffs(none, fk, 10);
    BiSeries r = functional_equation_residual(g, Poly::zero(none), 6);
    CHECK(r.is_zero());
}

TEST_CASE("residual demands enough input order") {
    GenusSeries g = todd_series(8);
    CHECK_THROWS_AS(functional_equation_residual(g, Poly::zero(ab), 6), truncation_error);
    CHECK_THROWS_AS(residual_y0(g, Poly::zero(ab), 6), truncation_error);
    CHECK_THROWS_AS(residual_y2(g, 4), truncation_error);
}

TEST_CASE("y^0 layer at x^0 encodes 2C = 3 f1^2 - f2") {
    // free f1, f2, f3 and a free constant C in one ring
    const VarSet vs({"f1", "f2", "f3", "C"});
    std::vector<Poly> fk = {Poly::zero(vs), Poly::generator(vs, "f1"), Poly::generator(vs, "f2"),
                            Poly::generator(vs, "f3")};
    GenusSeries g = genus_from_coeffs(vs, fk, 5);
    LaurentSeries r = residual_y0(g, Poly::generator(vs, "C"), 2);
    CHECK(r.coeff(0).scaled(Rational(2)) == P(vs, "3*f1^2 - f2 - 2*C"));
}

TEST_CASE("y^0 residual vanishes on the todd family") {
    GenusSeries g = todd_series(10);
    const Poly c = cp2_constant(g.fk(1), g.fk(2));
    CHECK(residual_y0(g, c, 7).is_zero());
}

TEST_CASE("y^0 and y^2 residuals vanish for f = x") {
    std::vector<Poly> fk = {Poly::zero(none)};
    GenusSeries g = genus_from_coeffs(none, fk, 12);
    CHECK(residual_y0(g, Poly::zero(none), 8).is_zero());
    CHECK(residual_y2(g, 6).is_zero());
}

TEST_CASE("y^2 residual vanishes on the elliptic family") {
    GenusSeries g = elliptic_series(11);
    CHECK(residual_y2(g, 6).is_zero());
}

TEST_CASE("layers of the functional equation match the reduced residuals") {
    const int order = 5;
    GenusSeries g = generic_series(order + 4);
    const Poly c = cp2_constant(g.fk(1), g.fk(2));
    BiSeries r = functional_equation_residual(g, c, order);

    // y^0 layer is exactly the one-variable residual
    LaurentSeries l0 = r.layer(0);
    CHECK(l0 == residual_y0(g, c, l0.trunc()));

    // y^1 layer is half the derivative of the y^0 layer
    LaurentSeries l1 = r.layer(1);
    LaurentSeries d0 = derivative(residual_y0(g, c, l1.trunc() + 1));
    CHECK(l1.scaled(Rational(2)) == d0.truncated(l1.trunc()));

    // y^2 layer times 12 is the second reduced equation
    LaurentSeries l2 = r.layer(2);
    CHECK(l2.scaled(Rational(12)) == residual_y2(g, l2.trunc()));
}

TEST_CASE("cp_genus reproduces the CP(2) constant") {
    GenusSeries generic = generic_series(6);
    const VarSet& vs = generic.vars();
    CHECK(cp_genus(generic, 2) == cp2_constant(generic.fk(1), generic.fk(2)));
    CHECK(cp_genus(generic, 2) == Poly::parse(vs, "3/2*f1^2 - 1/2*f2"));

    GenusSeries todd = todd_series(5);
    CHECK(cp_genus(todd, 2) == P(ab, "alpha^2 + alpha*beta + beta^2"));

    std::vector<Poly> fk = {Poly::zero(none)};
    GenusSeries triv = genus_from_coeffs(none, fk, 8);
    for (int n = 1; n <= 6; ++n) CHECK(cp_genus(triv, n).is_zero());

    CHECK_THROWS_AS(cp_genus(todd, 5), truncation_error);
    CHECK_THROWS_AS(cp_genus(todd, 0), usage_error);
}

TEST_CASE("cp_genus of cp1 matches the first coefficient relation") {
    // [x^1] (x/f)^2 = -f1: a direct expansion check on both families
    GenusSeries todd = todd_series(4);
    CHECK(cp_genus(todd, 1) == -todd.fk(1));
    GenusSeries e = elliptic_series(4);
    CHECK(cp_genus(e, 1) == -e.fk(1));
}

TEST_CASE("classification of the three reference triples") {
    Classification todd = classify(Rational(1), Rational(1), Rational(1));
    CHECK(todd.tag == FamilyTag::Todd);
    CHECK(todd.c_value == Rational(1));
    CHECK(todd.k_value == Rational(0));
    REQUIRE(todd.todd_params.has_value());
    CHECK(todd.todd_params->first == Rational(-1));     // alpha + beta
    CHECK(todd.todd_params->second == Rational(0));     // alpha * beta
    CHECK(!todd.elliptic_params.has_value());

    Classification ell_c = classify(Rational(-1), Rational(3), Rational(3));
    CHECK(ell_c.tag == FamilyTag::Elliptic);
    CHECK(ell_c.c_value == Rational(0));
    REQUIRE(ell_c.elliptic_params.has_value());
    CHECK(ell_c.elliptic_params->first == Rational(1));
    CHECK(ell_c.elliptic_params->second == Rational(1));

    Classification zero = classify(Rational(0), Rational(0), Rational(0));
    CHECK(zero.tag == FamilyTag::Degenerate);
    REQUIRE(zero.todd_params.has_value());
    REQUIRE(zero.elliptic_params.has_value());

    Classification nm = classify(Rational(1), Rational(1), Rational(2));
    CHECK(nm.tag == FamilyTag::NotMultiplicative);
    CHECK(!nm.todd_params.has_value());
    CHECK(!nm.elliptic_params.has_value());
}

TEST_CASE("classify round-trips the family dictionaries") {
    std::mt19937 rng(60601);
    std::uniform_int_distribution<long> num(-8, 8), den(1, 5);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    for (int iter = 0; iter < 40; ++iter) {
        // todd side: f1, f2, f3 from (alpha+beta, alpha*beta)
        Rational s = rnd(), p = rnd();
        Rational f1 = -s, f2 = p * Rational(2) + f1 * f1;
        Rational f3 = f1 * f2 * Rational(4) - f1 * f1 * f1 * Rational(3);
        Classification ct = classify(f1, f2, f3);
        REQUIRE(ct.todd_params.has_value());
        CHECK(ct.todd_params->first == s);
        CHECK(ct.todd_params->second == p);

        // elliptic side: f1, f2, f3 from (a, b)
        Rational a = rnd(), b = rnd();
        Rational g1 = -a, g2v = a * a * Rational(3);
        Rational g3v = b * Rational(12) - a * a * a * Rational(9);
        Classification ce = classify(g1, g2v, g3v);
        REQUIRE(ce.elliptic_params.has_value());
        CHECK(ce.elliptic_params->first == a);
        CHECK(ce.elliptic_params->second == b);
    }
}

TEST_CASE("degenerate triples admit both parameterizations") {
    // C = K = 0 with f1 != 0: both dictionaries describe the same genus
    Rational f1(2), f2(12), f3(72);
    Classification c = classify(f1, f2, f3);
    CHECK(c.tag == FamilyTag::Degenerate);
    REQUIRE(c.todd_params.has_value());
    REQUIRE(c.elliptic_params.has_value());

    GenusSeries todd = todd_series_from_sym(
        8, Poly::constant(none, c.todd_params->first),
        Poly::constant(none, c.todd_params->second));
    GenusSeries ell_g = elliptic_series_with(
        8, Poly::constant(none, c.elliptic_params->first),
        Poly::constant(none, c.elliptic_params->second));
    CHECK(todd.f().agrees_with(ell_g.f(), 8));
}
