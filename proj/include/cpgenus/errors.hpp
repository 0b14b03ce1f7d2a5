#ifndef CPGENUS_ERRORS_HPP
#define CPGENUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cpgenus {

// Caller misuse: mixed generator sets, unbound generators, malformed input text,
// out-of-range arguments. Maps to CLI exit code 2.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact division requested on a non-multiple. A meaningful outcome, not a bug:
// the obstruction computation relies on this failing when an identity is false.
struct divisibility_error : std::runtime_error {
    explicit divisibility_error(const std::string& what) : std::runtime_error(what) {}
};

// Series reciprocal of something whose leading coefficient is not a nonzero
// rational constant (not invertible over Q[vars]).
struct unit_error : std::runtime_error {
    explicit unit_error(const std::string& what) : std::runtime_error(what) {}
};

// A coefficient was requested outside the recorded exactness region, or an
// operation cannot produce any exact output. Never silently answered with 0.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

// The generic coefficient solver found a vanishing linear coefficient for the
// unknown it must isolate. Indicates an implementation bug, not a math outcome.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cpgenus

#endif
