#ifndef FPSLAB_SERIES_JSON_HPP
#define FPSLAB_SERIES_JSON_HPP

#include <span>
#include <vector>

#include <json.hpp>

#include "fpslab/laurent_series.hpp"
#include "fpslab/power_series.hpp"
#include "fpslab/rational.hpp"

namespace fpslab {

// Wire format: rationals are the strings "p/q" (or "p"); power series are
// {"lowest": 0, "order": N, "coeffs": [...]}; Laurent series are
// {"lowest": l, "top": t, "coeffs": [...]}.

nlohmann::json rationals_to_json(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const nlohmann::json& array);

nlohmann::json to_json(const PowerSeries& s);
nlohmann::json to_json(const LaurentSeries& s);

/// Both throw std::invalid_argument on schema mismatch.
PowerSeries power_series_from_json(const nlohmann::json& j);
LaurentSeries laurent_series_from_json(const nlohmann::json& j);

}  // namespace fpslab

#endif  // FPSLAB_SERIES_JSON_HPP
