#include "cpgenus/genera.hpp"

#include <algorithm>

namespace cpgenus {

namespace {

const VarSet& todd_vars() {
    static const VarSet vs({"alpha", "beta"});
    return vs;
}

const VarSet& elliptic_vars() {
    static const VarSet vs({"a", "b"});
    return vs;
}

const VarSet& coeff3_vars() {
    static const VarSet vs({"f1", "f2", "f3"});
    return vs;
}

Rational inv_factorial(unsigned n) {
    return Rational(Integer(1), factorial(n));
}

// Complete homogeneous symmetric polynomial h_k = sum alpha^i beta^{k-i}.
Poly complete_homogeneous(const VarSet& vs, unsigned k) {
    std::vector<std::pair<Exponents, Rational>> terms;
    for (unsigned i = 0; i <= k; ++i)
        terms.push_back({Exponents{i, k - i}, Rational(1)});
    return Poly::from_terms(vs, std::move(terms));
}

GenusSeries quotient_of_h(const VarSet& vs, const std::vector<Poly>& h, int order) {
    // f = (sum_{k>=1} h_{k-1} x^k / k!) / (sum_{k>=0} h_k x^k / k!); the
    // denominator leads with 1, so the reciprocal stays over Q[vars].
    std::map<int, Poly> num, den;
    for (int k = 0; k <= order; ++k) {
        const Rational inv = inv_factorial(static_cast<unsigned>(k));
        if (k >= 1) num.emplace(k, h[static_cast<std::size_t>(k) - 1].scaled(inv));
        den.emplace(k, h[static_cast<std::size_t>(k)].scaled(inv));
    }
    LaurentSeries n = LaurentSeries::from_coeffs(vs, std::move(num), order);
    LaurentSeries d = LaurentSeries::from_coeffs(vs, std::move(den), order);
    return GenusSeries((n * reciprocal(d)).truncated(order));
}

} // namespace

GenusSeries::GenusSeries(LaurentSeries f) : f_(std::move(f)) {
    if (f_.valuation() != 1 || !f_.coeff(1).is_one())
        throw usage_error("genus series must start with x (valuation 1, leading coefficient 1)");
}

Poly GenusSeries::fk(int k) const {
    if (k < 1) throw usage_error("fk index must be >= 1");
    return f_.coeff(k + 1).scaled(Rational(factorial(static_cast<unsigned>(k) + 1)));
}

GenusSeries genus_from_coeffs(const VarSet& vs, const std::vector<Poly>& fk, int order) {
    std::map<int, Poly> cs;
    cs.emplace(1, Poly::constant(vs, Rational(1)));
    for (std::size_t k = 1; k < fk.size() && static_cast<int>(k) + 1 <= order; ++k)
        cs.emplace(static_cast<int>(k) + 1, fk[k].scaled(inv_factorial(static_cast<unsigned>(k) + 1)));
    return GenusSeries(LaurentSeries::from_coeffs(vs, std::move(cs), order));
}

CurveParams curve_params(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw usage_error("curve_params over mixed VarSets");
    const Poly a3 = a.pow(3);
    Poly g2 = ((b.scaled(Rational(8)) - a3.scaled(Rational(3))) * a).scaled(Rational(-1, 4));
    Poly g3 = ((b * b).scaled(Rational(8)) - (a3 * b).scaled(Rational(12)) + (a3 * a3).scaled(Rational(3)))
                  .scaled(Rational(1, 24));
    Poly delta = -(b.pow(3) * (b.scaled(Rational(3)) - a3));
    return CurveParams{a, b, std::move(g2), std::move(g3), std::move(delta)};
}

GenusSeries todd_series(int order) {
    if (order < 3) throw usage_error("todd series needs order >= 3");
    const VarSet& vs = todd_vars();
    std::vector<Poly> h;
    for (int k = 0; k <= order; ++k)
        h.push_back(complete_homogeneous(vs, static_cast<unsigned>(k)));
    return quotient_of_h(vs, h, order);
}

GenusSeries todd_series_from_sym(int order, const Poly& e1, const Poly& e2) {
    if (order < 3) throw usage_error("todd series needs order >= 3");
    if (e1.vars() != e2.vars()) throw usage_error("symmetric values over mixed VarSets");
    const VarSet& vs = e1.vars();
    std::vector<Poly> h;
    h.push_back(Poly::constant(vs, Rational(1)));
    h.push_back(e1);
    for (int k = 2; k <= order; ++k)
        h.push_back(e1 * h[static_cast<std::size_t>(k) - 1] - e2 * h[static_cast<std::size_t>(k) - 2]);
    return quotient_of_h(vs, h, order);
}

LaurentSeries weierstrass_p(int order, const CurveParams& cp) {
    if (order < 4) throw usage_error("weierstrass_p needs order >= 4");
    const VarSet& vs = cp.g2.vars();
    // c_k multiplies x^{2k-2}.
    const int kmax = (order + 2) / 2;
    std::vector<Poly> c(static_cast<std::size_t>(kmax) + 1, Poly::zero(vs));
    if (kmax >= 2) c[2] = cp.g2.scaled(Rational(1, 20));
    if (kmax >= 3) c[3] = cp.g3.scaled(Rational(1, 28));
    for (int k = 4; k <= kmax; ++k) {
        Poly acc = Poly::zero(vs);
        for (int m = 2; m <= k - 2; ++m) acc += c[m] * c[k - m];
        c[static_cast<std::size_t>(k)] = acc.scaled(Rational(3, (2L * k + 1) * (k - 3)));
    }
    std::map<int, Poly> cs;
    cs.emplace(-2, Poly::constant(vs, Rational(1)));
    for (int k = 2; k <= kmax; ++k)
        if (!c[static_cast<std::size_t>(k)].is_zero() && 2 * k - 2 <= order)
            cs.emplace(2 * k - 2, c[static_cast<std::size_t>(k)]);
    return LaurentSeries::from_coeffs(vs, std::move(cs), order);
}

GenusSeries elliptic_series(int order) {
    const VarSet& vs = elliptic_vars();
    return elliptic_series_with(order, Poly::generator(vs, "a"), Poly::generator(vs, "b"));
}

GenusSeries elliptic_series_with(int order, const Poly& a, const Poly& b) {
    if (order < 3) throw usage_error("elliptic series needs order >= 3");
    const CurveParams cp = curve_params(a, b);
    const int p_order = std::max(order - 3, 4);
    const LaurentSeries p = weierstrass_p(p_order, cp);
    const LaurentSeries dp = derivative(p);

    const Poly a2_half = (a * a).scaled(Rational(1, 2));
    const Poly a3_quarter = a.pow(3).scaled(Rational(1, 4));
    LaurentSeries num = -(p.scaled(Rational(2)) + LaurentSeries::constant(a2_half, p.trunc()));
    LaurentSeries den = dp - p.scaled_by(a) + LaurentSeries::constant(b - a3_quarter, dp.trunc());
    return GenusSeries((num * reciprocal(den)).truncated(order));
}

GenusSeries generic_series(int order) {
    if (order < 2) throw usage_error("generic series needs order >= 2");
    std::vector<std::string> names;
    for (int k = 1; k <= order - 1; ++k) names.push_back("f" + std::to_string(k));
    const VarSet vs(names);
    std::vector<Poly> fk;
    fk.push_back(Poly::zero(vs));
    for (int k = 1; k <= order - 1; ++k)
        fk.push_back(Poly::generator(vs, static_cast<std::size_t>(k) - 1));
    return genus_from_coeffs(vs, fk, order);
}

Poly cp2_constant(const Poly& f1, const Poly& f2) {
    return (f1 * f1).scaled(Rational(3, 2)) - f2.scaled(Rational(1, 2));
}

Poly obstruction_poly(const Poly& f1, const Poly& f2, const Poly& f3) {
    return f1.pow(3).scaled(Rational(3)) - (f1 * f2).scaled(Rational(4)) + f3;
}

BiSeries functional_equation_residual(const GenusSeries& g, const Poly& c_value, int total_order) {
    if (c_value.vars() != g.vars())
        throw usage_error("constant C must live over the genus coefficient ring");
    if (g.order() < total_order + 4)
        throw truncation_error("functional equation residual at total order " +
                               std::to_string(total_order) + " needs f through x^" +
                               std::to_string(total_order + 4) + ", have x^" +
                               std::to_string(g.order()));
    const int jmax = total_order + 2;
    const LaurentSeries q = reciprocal(g.f());
    const LaurentSeries qn = negate_arg(q);

    const BiSeries t1 = BiSeries::embed_x(q) * shift_expand(q, jmax);
    const BiSeries t2 = BiSeries::embed_x(qn) * BiSeries::embed_y(q);
    const BiSeries t3 = shift_expand(qn, jmax) * BiSeries::embed_neg_y(q);
    return t1 + t2 + t3 - BiSeries::constant(c_value);
}

LaurentSeries residual_y0(const GenusSeries& g, const Poly& c_value, int order) {
    if (c_value.vars() != g.vars())
        throw usage_error("constant C must live over the genus coefficient ring");
    if (g.order() < order + 3)
        throw truncation_error("y^0 residual at order " + std::to_string(order) +
                               " needs f through x^" + std::to_string(order + 3) + ", have x^" +
                               std::to_string(g.order()));
    const LaurentSeries q = reciprocal(g.f());
    const LaurentSeries qn = negate_arg(q);
    LaurentSeries r = q * q - qn.scaled_by(g.fk(1)) + negate_arg(derivative(q)) -
                      LaurentSeries::constant(c_value, g.order());
    return r.truncated(order);
}

LaurentSeries residual_y2(const GenusSeries& g, int order) {
    if (g.order() < order + 5)
        throw truncation_error("y^2 residual at order " + std::to_string(order) +
                               " needs f through x^" + std::to_string(order + 5) + ", have x^" +
                               std::to_string(g.order()));
    const Poly f1 = g.fk(1), f2 = g.fk(2), f3 = g.fk(3);
    const Poly k_poly = obstruction_poly(f1, f2, f3);
    const LaurentSeries q = reciprocal(g.f());
    const LaurentSeries qn = negate_arg(q);
    const LaurentSeries q1 = derivative(q), q2 = derivative(q, 2), q3 = derivative(q, 3);

    LaurentSeries r = (q * q2).scaled(Rational(6)) - qn.scaled_by(k_poly) +
                      negate_arg(q1).scaled_by((f1 * f1).scaled(Rational(3)) - f2.scaled(Rational(2))) -
                      negate_arg(q2).scaled_by(f1.scaled(Rational(3))) +
                      negate_arg(q3).scaled(Rational(2));
    return r.truncated(order);
}

namespace {

// Splits p = base + slope * t for the auxiliary unknown t (last generator);
// usage_error if t appears nonlinearly, solver_error if the slope is not a
// nonzero rational.
std::pair<Poly, Rational> split_linear_unknown(const Poly& p, const VarSet& reduced) {
    const std::size_t t_index = p.vars().size() - 1;
    Poly base(reduced);
    Poly slope(reduced);
    for (const auto& [e, c] : p.terms()) {
        Exponents cut(e.begin(), e.end() - 1);
        if (e[t_index] == 0)
            base += Poly::from_terms(reduced, {{cut, c}});
        else if (e[t_index] == 1)
            slope += Poly::from_terms(reduced, {{cut, c}});
        else
            throw solver_error("unknown appears nonlinearly in coefficient equation");
    }
    if (!slope.is_constant() || slope.is_zero())
        throw solver_error("unknown does not appear with a nonzero rational coefficient: " +
                           slope.str());
    return {std::move(base), slope.as_rational()};
}

// f_{target} from the x^{target-2} coefficient of the y^0-layer equation,
// given f4..f_{target-1} already solved over Q[f1,f2,f3].
Poly solve_next_coefficient(const std::vector<Poly>& solved, int target) {
    const VarSet& vs3 = coeff3_vars();
    const VarSet vs4({"f1", "f2", "f3", "t"});
    std::vector<Poly> fk;
    fk.push_back(Poly::zero(vs4));
    for (int m = 1; m <= 3; ++m) fk.push_back(Poly::generator(vs4, static_cast<std::size_t>(m) - 1));
    for (int m = 4; m < target; ++m)
        fk.push_back(substitute(solved[static_cast<std::size_t>(m) - 4], {}, vs4));
    fk.push_back(Poly::generator(vs4, "t"));

    const GenusSeries g = genus_from_coeffs(vs4, fk, target + 1);
    const Poly c4 = cp2_constant(fk[1], fk[2]);
    const LaurentSeries r = residual_y0(g, c4, target - 2);
    const auto [base, slope] = split_linear_unknown(r.coeff(target - 2), vs3);
    return base.scaled(-slope.inverse());
}

} // namespace

std::vector<Poly> solve_generic_coefficients(int n) {
    if (n < 4) throw usage_error("generic solve needs order >= 4");
    std::vector<Poly> solved;
    for (int target = 4; target <= n; ++target)
        solved.push_back(solve_next_coefficient(solved, target));
    return solved;
}

F8Alternate f8_alternate() {
    const VarSet& vs3 = coeff3_vars();
    const VarSet vs4({"f1", "f2", "f3", "t"});
    const std::vector<Poly> low = solve_generic_coefficients(7);

    std::vector<Poly> fk;
    fk.push_back(Poly::zero(vs4));
    for (int m = 1; m <= 3; ++m) fk.push_back(Poly::generator(vs4, static_cast<std::size_t>(m) - 1));
    for (const Poly& p : low) fk.push_back(substitute(p, {}, vs4));
    fk.push_back(Poly::generator(vs4, "t"));          // f8

    const GenusSeries g = genus_from_coeffs(vs4, fk, 9);
    const LaurentSeries r = residual_y2(g, 4);
    const auto [base, slope] = split_linear_unknown(r.coeff(4), vs3);
    Poly f8 = base.scaled(-slope.inverse());
    Integer denom = denominator_lcm(f8);
    Poly cleared = f8.scaled(Rational(denom));
    return F8Alternate{std::move(f8), std::move(denom), std::move(cleared)};
}

Obstruction obstruction_identity() {
    const VarSet& vs3 = coeff3_vars();
    const Poly f8_direct = solve_generic_coefficients(8).back();
    const Poly f8_alt = f8_alternate().f8;
    const Poly diff = f8_direct - f8_alt;

    const Poly f1 = Poly::generator(vs3, "f1");
    const Poly f2 = Poly::generator(vs3, "f2");
    const Poly f3 = Poly::generator(vs3, "f3");
    const Poly c_poly = cp2_constant(f1, f2);
    const Poly k_poly = obstruction_poly(f1, f2, f3);

    const Poly quotient = divide_exact(diff, c_poly * k_poly * k_poly);
    if (!quotient.is_constant() || quotient.is_zero())
        throw divisibility_error("difference of f8 determinations is not a rational multiple of C*K^2");
    return Obstruction{quotient.as_rational(), diff, c_poly, k_poly};
}

Poly cp_genus(const GenusSeries& g, int n) {
    if (n < 1) throw usage_error("cp_genus needs n >= 1");
    if (g.order() < n + 1)
        throw truncation_error("cp_genus at n = " + std::to_string(n) + " needs f through x^" +
                               std::to_string(n + 1));
    // (x / f)^{n+1} = (x * (1/f))^{n+1}
    const LaurentSeries unit = reciprocal(g.f()).shifted(1);
    return unit.pow(static_cast<unsigned>(n) + 1).coeff(n);
}

std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Todd: return "ToddFamily";
        case FamilyTag::Elliptic: return "EllipticFamily";
        case FamilyTag::Degenerate: return "Degenerate";
        case FamilyTag::NotMultiplicative: return "NotMultiplicative";
    }
    return "?";
}

Classification classify(const Rational& f1, const Rational& f2, const Rational& f3) {
    const Rational c = (f1 * f1 * Rational(3) - f2) / Rational(2);
    const Rational k = f1 * f1 * f1 * Rational(3) - f1 * f2 * Rational(4) + f3;

    Classification out;
    out.c_value = c;
    out.k_value = k;
    if (k.is_zero())
        out.todd_params = std::make_pair(-f1, (f2 - f1 * f1) / Rational(2));
    if (c.is_zero())
        out.elliptic_params = std::make_pair(-f1, (f3 - f1 * f1 * f1 * Rational(9)) / Rational(12));

    if (c.is_zero() && k.is_zero()) out.tag = FamilyTag::Degenerate;
    else if (k.is_zero()) out.tag = FamilyTag::Todd;
    else if (c.is_zero()) out.tag = FamilyTag::Elliptic;
    else out.tag = FamilyTag::NotMultiplicative;
    return out;
}

} // namespace cpgenus
