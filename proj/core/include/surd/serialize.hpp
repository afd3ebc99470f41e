#pragma once

#include <nlohmann/json.hpp>

#include "surd/approximant.hpp"
#include "surd/decimal.hpp"
#include "surd/error_analysis.hpp"
#include "surd/interval.hpp"
#include "surd/rational.hpp"

// JSON records. Rationals travel as exact "p/q" (or "p") strings and
// intervals as two-element [lo, hi] arrays of such strings.

namespace surd {

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const Interval& value);
nlohmann::json to_json(const DecimalString& value);

/// {"k": 4, "A": "51/56", "B": "5/56", "C": "27", "D": "98", "E": "70"}
nlohmann::json to_json(const SurdForm& form);
nlohmann::json to_json(const ConsistencyReport& report);
nlohmann::json to_json(const Window& window, int places);
/// `places` selects the DecimalString renderings added next to each exact
/// field.
nlohmann::json to_json(const ErrorReport& report, int places);

Rational rational_from_json(const nlohmann::json& j);
Interval interval_from_json(const nlohmann::json& j);
/// Throws ArgumentError for missing fields or non-canonical coefficients.
SurdForm surd_form_from_json(const nlohmann::json& j);

}  // namespace surd
