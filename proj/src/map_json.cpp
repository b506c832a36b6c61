#include "lfmsemi/map_json.hpp"

#include <fstream>

namespace lfmsemi {

using nlohmann::json;

json complex_to_json(Complex v) { return json::array({v.real(), v.imag()}); }

namespace {

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Vec2 vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("vector must have 2 entries");
  return {complex_from_json(j[0]), complex_from_json(j[1])};
}

json vec2_to_json(const Vec2& v) {
  return json::array({complex_to_json(v.x), complex_to_json(v.y)});
}

}  // namespace

json mat3_to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json map_to_json(const LinearFractionalMap& phi) {
  json a = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back(complex_to_json(phi.A(i, j)));
    a.push_back(row);
  }
  return json{{"A", a}, {"B", vec2_to_json(phi.B)}, {"C", vec2_to_json(phi.C)},
              {"D", complex_to_json(phi.D)}};
}

LinearFractionalMap map_from_json(const json& j) {
  if (!j.contains("A") || !j.contains("B") || !j.contains("C") || !j.contains("D"))
    throw std::runtime_error("map needs fields A, B, C, D");
  const json& a = j.at("A");
  if (!a.is_array() || a.size() != 2) throw std::runtime_error("A must be a 2x2 matrix");
  Mat2 A;
  for (int i = 0; i < 2; ++i) {
    if (!a[static_cast<size_t>(i)].is_array() || a[static_cast<size_t>(i)].size() != 2)
      throw std::runtime_error("A must be a 2x2 matrix");
    for (int k = 0; k < 2; ++k)
      A(i, k) = complex_from_json(a[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  }
  return {A, vec2_from_json(j.at("B")), vec2_from_json(j.at("C")), complex_from_json(j.at("D"))};
}

LinearFractionalMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return map_from_json(j);
}

}  // namespace lfmsemi
