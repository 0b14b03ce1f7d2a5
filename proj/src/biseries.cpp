#include "cpgenus/biseries.hpp"

#include <algorithm>

namespace cpgenus {

namespace {

int sat_add(int a, int b) {
    if (a >= kUnbounded / 2 || b >= kUnbounded / 2) return kUnbounded;
    if (a <= -kUnbounded / 2 || b <= -kUnbounded / 2) return -kUnbounded;
    return a + b;
}

std::string bound_str(int v) {
    return v >= kUnbounded / 2 ? "inf" : std::to_string(v);
}

} // namespace

BiRegion BiRegion::normalized() const {
    BiRegion r = *this;
    r.deg_min = std::max(deg_min, sat_add(i_min, j_min));
    return r;
}

BiRegion BiRegion::full() {
    return BiRegion{-kUnbounded, -kUnbounded, kUnbounded, -kUnbounded, kUnbounded};
}

BiRegion BiRegion::sum(const BiRegion& a, const BiRegion& b) {
    // Zero claims need both zero (mins of valuation bounds); knowledge claims
    // need both known (mins of truncation bounds).
    return BiRegion{std::min(a.i_min, b.i_min), std::min(a.j_min, b.j_min),
                    std::min(a.j_max, b.j_max), std::min(a.deg_min, b.deg_min),
                    std::min(a.deg_max, b.deg_max)}
        .normalized();
}

BiRegion BiRegion::product(const BiRegion& a, const BiRegion& b) {
    // (i, j) is exact when every split with both factors above their valuation
    // bounds stays inside both truncation bounds; the worst split pushes one
    // factor to the other's valuation.
    return BiRegion{sat_add(a.i_min, b.i_min), sat_add(a.j_min, b.j_min),
                    std::min(sat_add(a.j_max, b.j_min), sat_add(b.j_max, a.j_min)),
                    sat_add(a.deg_min, b.deg_min),
                    std::min(sat_add(a.deg_max, b.deg_min), sat_add(b.deg_max, a.deg_min))}
        .normalized();
}

std::string BiRegion::str() const {
    std::string out = "{ i >= " + bound_str(i_min) + ", ";
    out += bound_str(j_min) + " <= j <= " + bound_str(j_max) + ", ";
    out += bound_str(deg_min) + " <= i+j <= " + bound_str(deg_max) + " }";
    return out;
}

// ------------------------------------------------------------------ BiSeries

BiSeries BiSeries::constant(const Poly& c) {
    BiSeries r(c.vars(), BiRegion{0, 0, kUnbounded, 0, kUnbounded});
    if (!c.is_zero()) r.coeffs_.emplace(std::make_pair(0, 0), c);
    return r;
}

BiSeries BiSeries::embed_x(const LaurentSeries& s) {
    const int v = s.valuation();
    BiSeries r(s.vars(), BiRegion{v, 0, kUnbounded, v, s.trunc()}.normalized());
    for (const auto& [k, c] : s.coeffs()) r.coeffs_.emplace(std::make_pair(k, 0), c);
    return r;
}

BiSeries BiSeries::embed_y(const LaurentSeries& s) {
    const int v = s.valuation();
    BiSeries r(s.vars(), BiRegion{0, v, s.trunc(), v, s.trunc()}.normalized());
    for (const auto& [k, c] : s.coeffs()) r.coeffs_.emplace(std::make_pair(0, k), c);
    return r;
}

BiSeries BiSeries::embed_neg_y(const LaurentSeries& s) {
    return embed_y(negate_arg(s));
}

Poly BiSeries::coeff(int i, int j) const {
    if (!region_.known(i, j))
        throw truncation_error("coefficient (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") outside exactness region " + region_.str());
    auto it = coeffs_.find({i, j});
    return it != coeffs_.end() ? it->second : Poly::zero(vars_);
}

LaurentSeries BiSeries::layer(int j) const {
    if (j > region_.j_max || region_.deg_max >= kUnbounded / 2)
        throw truncation_error("layer y^" + std::to_string(j) + " not fully known in region " +
                               region_.str());
    if (j < region_.j_min) return LaurentSeries::zero(vars_, region_.deg_max - j);
    std::map<int, Poly> cs;
    for (const auto& [ij, c] : coeffs_)
        if (ij.second == j) cs.emplace(ij.first, c);
    return LaurentSeries::from_coeffs(vars_, std::move(cs), region_.deg_max - j);
}

void BiSeries::put(int i, int j, const Poly& c) {
    if (!region_.in_window(i, j) || c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(std::make_pair(i, j), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

namespace {

void require_same_vars(const BiSeries& a, const BiSeries& b, const char* op) {
    if (a.vars() != b.vars())
        throw usage_error(std::string("VarSet mismatch in bivariate series ") + op);
}

void require_knowledge(const BiRegion& r, const char* op) {
    // An empty window is still fine when the valuation bounds retain zero-side
    // knowledge; only a region with no claims at all is an error.
    if (r.window_empty() && r.i_min <= -kUnbounded / 2 && r.j_min <= -kUnbounded / 2 &&
        r.deg_min <= -kUnbounded / 2)
        throw truncation_error(std::string("empty validity range from ") + op + ": " + r.str());
}

} // namespace

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    require_same_vars(a, b, "add");
    BiRegion reg = BiRegion::sum(a.region(), b.region());
    require_knowledge(reg, "add");
    BiSeries r(a.vars(), reg);
    for (const auto& [ij, c] : a.coeffs()) r.put(ij.first, ij.second, c);
    for (const auto& [ij, c] : b.coeffs()) r.put(ij.first, ij.second, c);
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    require_same_vars(a, b, "sub");
    BiRegion reg = BiRegion::sum(a.region(), b.region());
    require_knowledge(reg, "sub");
    BiSeries r(a.vars(), reg);
    for (const auto& [ij, c] : a.coeffs()) r.put(ij.first, ij.second, c);
    for (const auto& [ij, c] : b.coeffs()) r.put(ij.first, ij.second, -c);
    return r;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    require_same_vars(a, b, "mul");
    BiRegion reg = BiRegion::product(a.region(), b.region());
    require_knowledge(reg, "mul");
    BiSeries r(a.vars(), reg);
    for (const auto& [ij_a, ca] : a.coeffs()) {
        for (const auto& [ij_b, cb] : b.coeffs()) {
            const int i = ij_a.first + ij_b.first;
            const int j = ij_a.second + ij_b.second;
            if (i + j > reg.deg_max || j > reg.j_max) continue;
            r.put(i, j, ca * cb);
        }
    }
    return r;
}

BiSeries shift_expand(const LaurentSeries& s, int jmax) {
    if (jmax < 0) throw usage_error("shift_expand needs jmax >= 0");
    const int v = s.valuation();
    BiRegion reg = BiRegion{v - jmax, 0, jmax, v, s.trunc()}.normalized();
    BiSeries r(s.vars(), reg);
    LaurentSeries d = s;
    Rational inv_fact(1);
    for (int j = 0; j <= jmax; ++j) {
        if (j > 0) {
            d = derivative(d);
            inv_fact /= Rational(j);
        }
        for (const auto& [k, c] : d.coeffs()) r.put(k, j, c.scaled(inv_fact));
    }
    return r;
}

} // namespace cpgenus
