#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lfmsemi/lfm.hpp"

namespace lfmsemi {

// Map schema, complex numbers as [re, im] pairs:
// {"A": [[[re,im],[re,im]],[[re,im],[re,im]]],
//  "B": [[re,im],[re,im]], "C": [[re,im],[re,im]], "D": [re,im]}
nlohmann::json map_to_json(const LinearFractionalMap& phi);
LinearFractionalMap map_from_json(const nlohmann::json& j);

LinearFractionalMap load_map(const std::string& path);

nlohmann::json complex_to_json(Complex v);
nlohmann::json mat3_to_json(const Mat3& m);

}  // namespace lfmsemi
