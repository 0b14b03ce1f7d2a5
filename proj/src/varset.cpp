#include "cpgenus/varset.hpp"

#include <algorithm>
#include <cctype>

namespace cpgenus {

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

} // namespace

VarSet::VarSet(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!valid_name(names[i]))
            throw usage_error("bad generator name: '" + names[i] + "'");
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw usage_error("duplicate generator name: '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) return i;
    return std::nullopt;
}

std::string VarSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < names_->size(); ++i) {
        if (i) out += ", ";
        out += (*names_)[i];
    }
    out += "}";
    return out;
}

std::shared_ptr<const std::vector<std::string>> VarSet::shared_empty() {
    static const auto empty = std::make_shared<const std::vector<std::string>>();
    return empty;
}

} // namespace cpgenus
