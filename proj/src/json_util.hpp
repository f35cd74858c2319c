#pragma once

// Internal helpers shared by the JSON-facing translation units.

#include <json.hpp>

#include "cydouble/arith.hpp"
#include "cydouble/errors.hpp"

namespace cydouble {

using Json = nlohmann::ordered_json;

inline Json int_json(const Int& v) {
    if (!v.fits_slong_p())
        throw Error("value out of range for JSON serialization: " + str(v));
    return Json(static_cast<long long>(v.get_si()));
}

}  // namespace cydouble
