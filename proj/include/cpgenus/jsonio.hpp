#ifndef CPGENUS_JSONIO_HPP
#define CPGENUS_JSONIO_HPP

#include <json.hpp>

#include "cpgenus/verify.hpp"

namespace cpgenus {

using Json = nlohmann::ordered_json;

/// {"valuation": v, "trunc": N, "coeffs": {"k": "<poly-string>"}}
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const VarSet& vs, const Json& j);

Json region_to_json(const BiRegion& r);
Json report_to_json(const VerifyReport& r, bool timing);
Json classification_to_json(const Classification& c);

} // namespace cpgenus

#endif
