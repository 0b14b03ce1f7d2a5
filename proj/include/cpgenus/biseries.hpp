#ifndef CPGENUS_BISERIES_HPP
#define CPGENUS_BISERIES_HPP

#include <map>
#include <string>
#include <utility>

#include "cpgenus/laurent.hpp"

namespace cpgenus {

// Sentinel for "unbounded" region edges; small enough that sums of two never
// overflow int.
inline constexpr int kUnbounded = 1 << 29;

/// Exactness region of a BiSeries. The lower bounds are valuation bounds:
/// every coefficient with i < i_min, j < j_min or i+j < deg_min is known to be
/// zero. j_max and deg_max are truncation bounds. A coefficient (i, j) is
/// known exactly iff it sits below some valuation bound (zero side) or inside
/// the stored window
///   i >= i_min, j_min <= j <= j_max, deg_min <= i+j <= deg_max.
/// Intersection/propagation rules keep every claim honest.
struct BiRegion {
    int i_min, j_min, j_max, deg_min, deg_max;

    bool in_window(int i, int j) const {
        return i >= i_min && j >= j_min && j <= j_max && i + j >= deg_min && i + j <= deg_max;
    }
    bool known_zero(int i, int j) const {
        return i < i_min || j < j_min || i + j < deg_min;
    }
    bool known(int i, int j) const { return known_zero(i, j) || in_window(i, j); }
    bool window_empty() const {
        return j_min > j_max || deg_min > deg_max || i_min + j_min > deg_max;
    }
    BiRegion normalized() const;              // deg_min >= i_min + j_min

    static BiRegion full();
    static BiRegion sum(const BiRegion& a, const BiRegion& b);
    static BiRegion product(const BiRegion& a, const BiRegion& b);

    friend bool operator==(const BiRegion& a, const BiRegion& b) {
        return a.i_min == b.i_min && a.j_min == b.j_min && a.j_max == b.j_max &&
               a.deg_min == b.deg_min && a.deg_max == b.deg_max;
    }

    std::string str() const;   // "{ i >= -14, -1 <= j <= 11, -2 <= i+j <= 11 }"
};

/// Truncated bivariate Laurent series in (x, y) over Poly coefficients, with
/// its exactness region recorded explicitly. Stored coefficients always lie
/// inside the region; requesting one outside it is a truncation_error, never
/// a silent zero.
class BiSeries {
public:
    BiSeries(VarSet vars, BiRegion region) : vars_(std::move(vars)), region_(region) {}

    static BiSeries constant(const Poly& c);
    /// s(x) as a series in (x, y).
    static BiSeries embed_x(const LaurentSeries& s);
    /// s(y).
    static BiSeries embed_y(const LaurentSeries& s);
    /// s(-y).
    static BiSeries embed_neg_y(const LaurentSeries& s);

    const VarSet& vars() const { return vars_; }
    const BiRegion& region() const { return region_; }
    const std::map<std::pair<int, int>, Poly>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Poly coeff(int i, int j) const;            // truncation_error outside region

    /// Coefficient of y^j as a Laurent series in x (truncation_error when the
    /// row is not fully known).
    LaurentSeries layer(int j) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.vars_ == b.vars_ && a.region_ == b.region_ && a.coeffs_ == b.coeffs_;
    }

private:
    void put(int i, int j, const Poly& c);     // accumulate in-region, drop zeros

    VarSet vars_;
    std::map<std::pair<int, int>, Poly> coeffs_;
    BiRegion region_;

    friend BiSeries shift_expand(const LaurentSeries& s, int jmax);
};

/// Two-variable shift expansion s(x+y) = sum_j s^(j)(x) y^j / j!. The (i, j)
/// coefficient is exact for j <= jmax and i + j <= trunc(s).
BiSeries shift_expand(const LaurentSeries& s, int jmax);

} // namespace cpgenus

#endif
