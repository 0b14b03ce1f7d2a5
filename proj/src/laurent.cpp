#include "cpgenus/laurent.hpp"

#include <algorithm>

namespace cpgenus {

namespace {

void require_same_vars(const LaurentSeries& a, const LaurentSeries& b, const char* op) {
    if (a.vars() != b.vars())
        throw usage_error(std::string("VarSet mismatch in series ") + op);
}

} // namespace

LaurentSeries LaurentSeries::term(const Poly& c, int exp, int trunc) {
    LaurentSeries s(c.vars(), trunc);
    if (!c.is_zero() && exp <= trunc) s.coeffs_.emplace(exp, c);
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(VarSet vars, std::map<int, Poly> coeffs, int trunc) {
    LaurentSeries s(std::move(vars), trunc);
    for (auto& [k, c] : coeffs) {
        if (c.vars() != s.vars_) throw usage_error("coefficient VarSet mismatch");
        if (k <= trunc && !c.is_zero()) s.coeffs_.emplace(k, std::move(c));
    }
    return s;
}

Poly LaurentSeries::coeff(int k) const {
    if (k > trunc_)
        throw truncation_error("series coefficient x^" + std::to_string(k) +
                               " beyond truncation x^" + std::to_string(trunc_));
    auto it = coeffs_.find(k);
    return it != coeffs_.end() ? it->second : Poly::zero(vars_);
}

void LaurentSeries::put(int k, const Poly& c) {
    if (k > trunc_ || c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r(vars_, trunc_);
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_vars(a, b, "add");
    LaurentSeries r(a.vars_, std::min(a.trunc_, b.trunc_));
    for (const auto& [k, c] : a.coeffs_) r.put(k, c);
    for (const auto& [k, c] : b.coeffs_) r.put(k, c);
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_vars(a, b, "sub");
    LaurentSeries r(a.vars_, std::min(a.trunc_, b.trunc_));
    for (const auto& [k, c] : a.coeffs_) r.put(k, c);
    for (const auto& [k, c] : b.coeffs_) r.put(k, -c);
    return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_vars(a, b, "mul");
    const int va = a.valuation(), vb = b.valuation();
    const int n = std::min(a.trunc_ + vb, b.trunc_ + va);
    LaurentSeries r(a.vars_, n);
    for (const auto& [i, ci] : a.coeffs_) {
        if (i + vb > n) break;
        for (const auto& [j, cj] : b.coeffs_) {
            if (i + j > n) break;
            r.put(i + j, ci * cj);
        }
    }
    return r;
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    LaurentSeries r(vars_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [k, p] : coeffs_) r.coeffs_.emplace(k, p.scaled(c));
    return r;
}

LaurentSeries LaurentSeries::scaled_by(const Poly& p) const {
    if (p.vars() != vars_) throw usage_error("VarSet mismatch in series scaled_by");
    LaurentSeries r(vars_, trunc_);
    for (const auto& [k, c] : coeffs_) r.put(k, c * p);
    return r;
}

LaurentSeries LaurentSeries::shifted(int n) const {
    LaurentSeries r(vars_, trunc_ + n);
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k + n, c);
    return r;
}

LaurentSeries LaurentSeries::pow(unsigned e) const {
    // Plain repeated multiplication keeps the truncation bookkeeping exact.
    if (e == 0) return constant(Poly::constant(vars_, Rational(1)), trunc_);
    LaurentSeries acc = *this;
    for (unsigned i = 1; i < e; ++i) acc = acc * *this;
    return acc;
}

LaurentSeries LaurentSeries::truncated(int n) const {
    if (n > trunc_)
        throw truncation_error("cannot extend truncation from x^" + std::to_string(trunc_) +
                               " to x^" + std::to_string(n));
    LaurentSeries r(vars_, n);
    for (const auto& [k, c] : coeffs_) {
        if (k > n) break;
        r.coeffs_.emplace(k, c);
    }
    return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o, int upto) const {
    if (vars_ != o.vars_) return false;
    if (upto > trunc_ || upto > o.trunc_)
        throw truncation_error("agreement check beyond a truncation");
    return std::equal(coeffs_.begin(), coeffs_.upper_bound(upto),
                      o.coeffs_.begin(), o.coeffs_.upper_bound(upto));
}

std::string LaurentSeries::str() const {
    std::string out;
    for (const auto& [k, c] : coeffs_) {
        const std::string xpart = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        const std::string body = c.str();
        std::string piece;
        if (c.term_count() > 1)
            piece = xpart.empty() ? "(" + body + ")" : "(" + body + ")*" + xpart;
        else if (xpart.empty())
            piece = body;
        else if (c.is_one())
            piece = xpart;
        else if ((-c).is_one())
            piece = "-" + xpart;
        else
            piece = body + "*" + xpart;
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    if (out.empty()) out = "0";
    out += " + O(x^" + std::to_string(trunc_ + 1) + ")";
    return out;
}

LaurentSeries reciprocal(const LaurentSeries& s) {
    if (s.is_zero())
        throw unit_error("reciprocal of a series with no nonzero coefficient up to truncation");
    const int v = s.valuation();
    const Poly& lead = s.coeffs_.begin()->second;
    if (!lead.is_constant())
        throw unit_error("leading coefficient is not a rational unit: " + lead.str());
    const Rational c0 = lead.as_rational();

    const int m = s.trunc_ - v;       // relative order of the normalized tail
    // b with (sum a_k x^k)(sum b_k x^k) = 1, a_0 = 1.
    std::vector<Poly> b(static_cast<std::size_t>(m) + 1);
    b[0] = Poly::constant(s.vars_, Rational(1));
    for (int k = 1; k <= m; ++k) {
        Poly acc = Poly::zero(s.vars_);
        for (int j = 1; j <= k; ++j) {
            const Poly& aj = s.coeff(v + j);            // within truncation by construction
            if (aj.is_zero() || b[k - j].is_zero()) continue;
            acc += aj * b[k - j];
        }
        b[k] = acc.scaled(-c0.inverse());
    }

    LaurentSeries r(s.vars_, s.trunc_ - 2 * v);
    const Rational inv = c0.inverse();
    for (int k = 0; k <= m; ++k)
        if (!b[k].is_zero()) r.coeffs_.emplace(-v + k, b[k].scaled(inv));
    return r;
}

LaurentSeries derivative(const LaurentSeries& s, unsigned n) {
    LaurentSeries cur = s;
    for (unsigned step = 0; step < n; ++step) {
        LaurentSeries next(cur.vars_, cur.trunc_ - 1);
        for (const auto& [k, c] : cur.coeffs_) {
            if (k == 0) continue;
            next.coeffs_.emplace(k - 1, c.scaled(Rational(k)));
        }
        cur = std::move(next);
    }
    return cur;
}

LaurentSeries negate_arg(const LaurentSeries& s) {
    LaurentSeries r(s.vars_, s.trunc_);
    for (const auto& [k, c] : s.coeffs_)
        r.coeffs_.emplace(k, (k % 2 == 0) ? c : -c);
    return r;
}

LaurentSeries exp_linear(const Poly& c, int n) {
    if (n < 0) throw usage_error("exp_linear needs a non-negative order");
    if (c.degree() > 1)
        throw usage_error("exp_linear argument must have degree <= 1: " + c.str());
    LaurentSeries r(c.vars(), n);
    Poly power = Poly::constant(c.vars(), Rational(1));
    Rational inv_fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            power = power * c;
            inv_fact /= Rational(k);
        }
        if (!power.is_zero()) r.put(k, power.scaled(inv_fact));
    }
    return r;
}

} // namespace cpgenus
