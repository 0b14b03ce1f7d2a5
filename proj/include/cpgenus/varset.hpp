#ifndef CPGENUS_VARSET_HPP
#define CPGENUS_VARSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cpgenus/errors.hpp"

namespace cpgenus {

/// Ordered list of distinct generator names. The order is fixed at creation
/// and defines the monomial order of every Poly built over it. Cheap to copy
/// (shared immutable storage); equality is structural.
class VarSet {
public:
    VarSet() : names_(shared_empty()) {}
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

    std::string str() const;   // "{alpha, beta}"

private:
    static std::shared_ptr<const std::vector<std::string>> shared_empty();
    std::shared_ptr<const std::vector<std::string>> names_;
};

} // namespace cpgenus

#endif
