#include "surd/serialize.hpp"

#include "surd/errors.hpp"

namespace surd {

using nlohmann::json;

json to_json(const Rational& value) { return value.str(); }

json to_json(const Interval& value) { return json::array({value.lo().str(), value.hi().str()}); }

json to_json(const DecimalString& value) {
  return {{"text", value.str()}, {"exact", value.exact}};
}

json to_json(const SurdForm& form) {
  return {{"k", form.root()},         {"A", form.a().str()}, {"B", form.b().str()},
          {"C", form.c().str()},      {"D", form.d().str()}, {"E", form.e().str()}};
}

json to_json(const ConsistencyReport& report) {
  return {{"required_ratio", report.required_ratio.str()},
          {"actual_ratio", report.actual_ratio.str()},
          {"consistent", report.consistent}};
}

json to_json(const Window& window, int places) {
  return {{"lower", window.lower.str()},
          {"upper", to_json(window.upper)},
          {"lower_decimal", to_decimal(window.lower, places).str()},
          {"upper_decimal",
           json::array({to_decimal(window.upper.lo(), places).str(),
                        to_decimal(window.upper.hi(), places).str()})}};
}

json to_json(const ErrorReport& report, int places) {
  auto decimals = [places](const Interval& i) {
    return json::array({to_decimal(i.lo(), places).str(), to_decimal(i.hi(), places).str()});
  };
  json j = {{"N", report.n_value.str()},
            {"x", report.x_value.str()},
            {"k", report.root},
            {"true_error", to_json(report.true_error)},
            {"true_error_decimal", decimals(report.true_error)},
            {"formula_enclosure", to_json(report.formula_enclosure)},
            {"formula_enclosure_decimal", decimals(report.formula_enclosure)}};
  j["overestimates"] = report.overestimates ? json(*report.overestimates) : json(nullptr);
  return j;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ArgumentError("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Interval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ArgumentError("interval must be a [lo, hi] pair");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

SurdForm surd_form_from_json(const json& j) {
  for (const char* key : {"k", "A", "B", "C", "D", "E"}) {
    if (!j.contains(key)) throw ArgumentError(std::string("surd form missing field ") + key);
  }
  if (!j["k"].is_number_integer()) throw ArgumentError("surd form field k must be an integer");
  const Coefficients raw{rational_from_json(j["A"]), rational_from_json(j["B"]),
                         rational_from_json(j["C"]), rational_from_json(j["D"]),
                         rational_from_json(j["E"])};
  SurdForm form = SurdForm::from_coefficients(j["k"].get<int>(), raw);
  if (form.coefficients() != raw) {
    throw ArgumentError("surd form coefficients C, D, E are not in canonical form");
  }
  return form;
}

}  // namespace surd
