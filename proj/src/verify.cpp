#include "cpgenus/verify.hpp"

#include <algorithm>
#include <chrono>

namespace cpgenus {

VerifyReport verify_family(const std::string& family, int order) {
    if (order < 4) throw usage_error("verify needs order >= 4");
    const auto start = std::chrono::steady_clock::now();

    GenusSeries g = [&] {
        if (family == "todd") return todd_series(order + 4);
        if (family == "elliptic") return elliptic_series(order + 4);
        throw usage_error("unknown family '" + family + "' (expected todd or elliptic)");
    }();

    const Poly c_value = cp2_constant(g.fk(1), g.fk(2));
    const BiSeries residual = functional_equation_residual(g, c_value, order);
    const BiRegion& reg = residual.region();

    VerifyReport r;
    r.family = family;
    r.order = order;
    r.constant = c_value;
    r.f_trunc = g.order();
    r.q_trunc = g.order() - 2;
    r.shift_jmax = order + 2;
    r.region = reg;
    r.checked = 0;
    for (int j = reg.j_min; j <= reg.j_max; ++j) {
        for (int i = std::max(reg.i_min, reg.deg_min - j); i + j <= reg.deg_max; ++i) {
            const Poly c = residual.coeff(i, j);
            ++r.checked;
            if (!c.is_zero()) r.nonzero.emplace_back(i, j, c.str());
        }
    }
    r.verified = r.nonzero.empty();
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string report_text(const VerifyReport& r, bool timing) {
    std::string out;
    out += "family: " + r.family + "\n";
    out += "total order: " + std::to_string(r.order) + "\n";
    out += "constant C: " + r.constant.str() + "\n";
    out += "f truncation: x^" + std::to_string(r.f_trunc) + ", q truncation: x^" +
           std::to_string(r.q_trunc) + ", shift depth: " + std::to_string(r.shift_jmax) + "\n";
    out += "residual region: " + r.region.str() + "\n";
    if (r.verified) {
        out += "checked " + std::to_string(r.checked) + " coefficients: all zero\n";
        out += "verified: yes\n";
    } else {
        out += "checked " + std::to_string(r.checked) + " coefficients: " +
               std::to_string(r.nonzero.size()) + " nonzero\n";
        for (const auto& [i, j, poly] : r.nonzero)
            out += "  residual at x^" + std::to_string(i) + " y^" + std::to_string(j) + ": " +
                   poly + "\n";
        out += "verified: no\n";
    }
    if (timing) out += "elapsed: " + std::to_string(r.elapsed_ms) + " ms\n";
    return out;
}

} // namespace cpgenus
