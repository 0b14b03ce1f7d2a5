#ifndef CPGENUS_VERIFY_HPP
#define CPGENUS_VERIFY_HPP

#include <string>
#include <tuple>
#include <vector>

#include "cpgenus/genera.hpp"

namespace cpgenus {

/// Outcome of checking a family against the functional equation: the residual
/// examined coefficient-by-coefficient over its whole exactness window.
struct VerifyReport {
    std::string family;        // "todd" | "elliptic"
    int order;                 // requested total order
    Poly constant;             // the CP(2) constant the family was checked against
    int f_trunc;               // truncation of f used
    int q_trunc;               // truncation of q = 1/f
    int shift_jmax;            // expansion depth of the x+y shifts
    BiRegion region;           // exactness window of the residual
    long long checked;         // coefficients examined inside the window
    std::vector<std::tuple<int, int, std::string>> nonzero;   // offending (i, j, poly)
    bool verified;             // nonzero.empty()
    double elapsed_ms;
};

/// Builds the family at order + 4, assembles the functional-equation residual
/// at the given total order with the family's own CP(2) constant, and checks
/// every coefficient in the exactness window.
VerifyReport verify_family(const std::string& family, int order);

std::string report_text(const VerifyReport& r, bool timing);

} // namespace cpgenus

#endif
