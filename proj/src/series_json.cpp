#include "fpslab/series_json.hpp"

#include <stdexcept>
#include <string>

namespace fpslab {

using nlohmann::json;

json rationals_to_json(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& r : values) out.push_back(r.to_string());
  return out;
}

std::vector<Rational> rationals_from_json(const json& array) {
  if (!array.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<Rational> out;
  out.reserve(array.size());
  for (const auto& v : array) {
    if (!v.is_string()) {
      throw std::invalid_argument("rational must be a \"p/q\" string");
    }
    out.push_back(Rational::parse(v.get<std::string>()));
  }
  return out;
}

json to_json(const PowerSeries& s) {
  json j;
  j["lowest"] = 0;
  j["order"] = s.order();
  j["coeffs"] = rationals_to_json(s.coefficients());
  return j;
}

json to_json(const LaurentSeries& s) {
  json j;
  j["lowest"] = s.lowest();
  j["top"] = s.top();
  j["coeffs"] = rationals_to_json(s.coefficients());
  return j;
}

PowerSeries power_series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw std::invalid_argument("power series JSON needs order and coeffs");
  }
  if (j.value("lowest", 0) != 0) {
    throw std::invalid_argument("power series JSON must have lowest = 0");
  }
  auto coeffs = rationals_from_json(j.at("coeffs"));
  const int order = j.at("order").get<int>();
  if (static_cast<int>(coeffs.size()) != order + 1) {
    throw std::invalid_argument("coeffs length does not match order");
  }
  return PowerSeries(std::move(coeffs));
}

LaurentSeries laurent_series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lowest") || !j.contains("top") ||
      !j.contains("coeffs")) {
    throw std::invalid_argument("Laurent JSON needs lowest, top and coeffs");
  }
  auto coeffs = rationals_from_json(j.at("coeffs"));
  const int lowest = j.at("lowest").get<int>();
  const int top = j.at("top").get<int>();
  if (static_cast<int>(coeffs.size()) != top - lowest + 1) {
    throw std::invalid_argument("coeffs length does not match window");
  }
  return LaurentSeries(lowest, std::move(coeffs));
}

}  // namespace fpslab
