#include "surd/serialize.hpp"

#include <gtest/gtest.h>

#include "surd/errors.hpp"

namespace surd {
namespace {

using nlohmann::json;

TEST(SerializeTest, FourthRootFormRecord) {
  const json j = to_json(derive(4));
  EXPECT_EQ(j.dump(), R"({"A":"51/56","B":"5/56","C":"27","D":"98","E":"70","k":4})");
}

TEST(SerializeTest, SurdFormRoundTripIsBitExact) {
  for (int k = 2; k <= 16; ++k) {
    const SurdForm f = derive(k);
    const std::string text = to_json(f).dump();
    const SurdForm back = surd_form_from_json(json::parse(text));
    EXPECT_EQ(back, f);
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(SerializeTest, RejectsNonCanonicalOrIncompleteForms) {
  json j = to_json(derive(4));
  j["C"] = "54";
  j["D"] = "196";
  j["E"] = "140";
  EXPECT_THROW(surd_form_from_json(j), ArgumentError);

  json missing = to_json(derive(4));
  missing.erase("E");
  EXPECT_THROW(surd_form_from_json(missing), ArgumentError);

  json numeric = to_json(derive(4));
  numeric["A"] = 0.5;
  EXPECT_THROW(surd_form_from_json(numeric), ArgumentError);
}

TEST(SerializeTest, IntervalsArePairs) {
  const Interval i(Rational(Integer(-1), Integer(3)), Rational(Integer(2), Integer(7)));
  const json j = to_json(i);
  EXPECT_EQ(j.dump(), R"(["-1/3","2/7"])");
  EXPECT_EQ(interval_from_json(j), i);
  EXPECT_THROW(interval_from_json(json::array({"1"})), ArgumentError);
  EXPECT_THROW(interval_from_json(json::array({"2", "1"})), ArgumentError);
}

TEST(SerializeTest, ErrorReportFields) {
  const ErrorReport r = analyze(derive(4), Rational(10), Rational(1), 24);
  const json j = to_json(r, 24);
  EXPECT_EQ(j["N"], "10");
  EXPECT_EQ(j["x"], "1");
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(interval_from_json(j["true_error"]), r.true_error);
  EXPECT_EQ(interval_from_json(j["formula_enclosure"]), r.formula_enclosure);
  EXPECT_EQ(j["true_error_decimal"][0], "-0.000000000000000005695655");
  EXPECT_EQ(j["overestimates"], true);

  const json outside = to_json(analyze(derive(4), Rational(1), Rational(Integer(6), Integer(100)), 24), 10);
  EXPECT_TRUE(outside["overestimates"].is_null());
}

TEST(SerializeTest, ConsistencyReport) {
  const json j = to_json(check_next_order(derive(4)));
  EXPECT_EQ(j["required_ratio"], "11/16");
  EXPECT_EQ(j["actual_ratio"], "7/12");
  EXPECT_EQ(j["consistent"], false);
}

}  // namespace
}  // namespace surd
