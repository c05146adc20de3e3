#include "degen/serialize.hpp"

#include <gtest/gtest.h>

#include "degen/errors.hpp"
#include "generators.hpp"

using namespace degen;

TEST(Serialize, RationalText) {
  EXPECT_EQ(rational_to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(rational_to_string(Rational(5)), "5");
  EXPECT_EQ(rational_to_string(Rational(0)), "0");
}

TEST(Serialize, PolynomialRecords) {
  BiPoly p = BiPoly::x().pow(2) - BiPoly::lambda() * BiPoly::x() * Rational(1, 3);
  Json j = bipoly_to_json(p);
  EXPECT_EQ(j.dump(), R"([{"dl":0,"dx":2,"c":"1"},{"dl":1,"dx":1,"c":"-1/3"}])");
  EXPECT_EQ(bipoly_to_json(BiPoly()).dump(), "[]");
  EXPECT_THROW(bipoly_from_json(Json::object()), ParseError);
  EXPECT_THROW(bipoly_from_json(Json::parse(R"([{"dl":0,"dx":0,"c":1}])")), ParseError);
  EXPECT_THROW(bipoly_from_json(Json::parse(R"([{"dl":0,"dx":0,"c":"1.5"}])")), ParseError);
}

TEST(SerializeProperty, PolynomialRoundTrip) {
  testgen::Gen gen(31);
  for (int i = 0; i < 300; ++i) {
    BiPoly p = gen.bipoly(4, 4, 10);
    EXPECT_EQ(bipoly_from_json(Json::parse(bipoly_to_json(p).dump())), p);
  }
}

TEST(Serialize, ReportLayout) {
  VerificationReport r;
  r.identity = IdentityId::Thm3;
  r.max_n = 2;
  r.max_order = 1;
  r.trunc = 4;
  r.profile = "quick";
  r.wall_time_ms = 1.5;
  r.cases.push_back({{{"n", 2L}, {"k", 1L}}, true, BiPoly()});
  r.cases.push_back({{{"alpha", std::string("1/2")}, {"n", 0L}}, false, BiPoly::lambda()});
  Json j = report_to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"identity", "ranges", "profile", "cases", "wall_time_ms"}));
  EXPECT_EQ(j["identity"], "thm3");
  EXPECT_EQ(j["ranges"].dump(), R"({"max_n":2,"max_order":1,"trunc":4})");
  EXPECT_EQ(j["cases"][0].dump(), R"({"indices":{"n":2,"k":1},"status":"pass","residual":[]})");
  EXPECT_EQ(j["cases"][1]["indices"]["alpha"], "1/2");
  EXPECT_EQ(j["wall_time_ms"], 1.5);
  EXPECT_TRUE(report_to_json(r, false)["wall_time_ms"].is_null());

  EXPECT_EQ(indices_to_string(r.cases[1].indices), "alpha=1/2;n=0");
  EXPECT_EQ(reports_to_csv({r}), "identity,indices,status,residual\nthm3,n=2;k=1,pass,0\nthm3,alpha=1/2;n=0,fail,l\n");
}
