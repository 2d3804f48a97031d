#include "cremona/suites.hpp"

#include <gtest/gtest.h>

using namespace cremona;
using io::Json;

namespace {

std::string config_path(const std::string& name) { return std::string(CREMONA_CONFIG_DIR) + "/" + name + ".json"; }

// Shape of a report as emitted by the command-line tool.
void expect_report_schema(const Json& j, bool timing) {
  ASSERT_TRUE(j.is_object());
  EXPECT_TRUE(j.at("suite").is_string());
  EXPECT_TRUE(j.at("seed").is_number_unsigned());
  ASSERT_TRUE(j.at("checks").is_array());
  for (const auto& c : j.at("checks")) {
    EXPECT_TRUE(c.at("id").is_string());
    std::string st = c.at("status");
    EXPECT_TRUE(st == "pass" || st == "fail" || st == "skip") << st;
    EXPECT_TRUE(c.contains("witness"));
    EXPECT_EQ(c.contains("seconds"), timing);
  }
  const auto& s = j.at("summary");
  EXPECT_EQ(s.at("pass").get<std::size_t>() + s.at("fail").get<std::size_t>() + s.at("skip").get<std::size_t>(),
            j.at("checks").size());
  EXPECT_TRUE(s.at("all_passed").is_boolean());
  EXPECT_EQ(j.contains("seconds"), timing);
}

}  // namespace

TEST(Json, Rationals) {
  EXPECT_EQ(io::to_json(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(io::rational_from_json(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(io::rational_from_json(Json(5)), 5);
  EXPECT_THROW(io::rational_from_json(Json(0.5)), std::invalid_argument);
}

TEST(Json, MatrixRoundTrip) {
  QMatrix m(2, 3);
  m(0, 1) = Rational(1, 3);
  m(1, 2) = -7;
  EXPECT_EQ(io::matrix_from_json(io::to_json(m)), m);
  EXPECT_THROW(io::matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), std::invalid_argument);
}

TEST(Json, PolyRoundTrip) {
  Poly p = var(0) * var(1) * Rational(2, 3) - var(3).pow(2) + constant(Rational(1)) * var(2) * var(2);
  Json j = io::to_json(p);
  EXPECT_EQ(j.at("nvars"), 4);
  EXPECT_EQ(io::poly_from_json(j), p);
  EXPECT_THROW(io::poly_from_json(Json::parse(R"({"nvars":2,"terms":[[[1,0,0],"1"]]})")), std::invalid_argument);
}

TEST(Json, ClassRoundTrip) {
  std::vector<DivisorClass> cases = {classes::D(Basis::Y()), classes::anticanonical(Basis::X()),
                                     DivisorClass::from_terms(Basis::Yn(4), {{"H", 2}, {"E6", -1}})};
  for (const auto& c : cases) EXPECT_EQ(io::class_from_json(io::to_json(c)), c) << c.basis().tag();
  EXPECT_THROW(io::basis_from_tag("Z"), std::invalid_argument);
}

TEST(Config, FixturesLoadAndAreGeneric) {
  for (const char* n : {"A", "B", "C", "D", "E"}) {
    PointConfig cfg = io::load_config(config_path(n));
    EXPECT_EQ(cfg.name, n);
    EXPECT_EQ(cfg.size(), 6u);
    EXPECT_TRUE(suites::config_violations(cfg).empty()) << n;
  }
}

TEST(Config, KindWithoutPointsBuildsThePlacement) {
  Json j = Json::parse(R"({"kind":"D","params":{"a":"2","b":"5","c":"-3"}})");
  PointConfig cfg = io::config_from_json(j);
  EXPECT_EQ(cfg.name, "D");
  PointConfig file = io::load_config(config_path("D"));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(same_projective_point(cfg[i], file[i]));
}

TEST(Config, RoundTripThroughJson) {
  PointConfig cfg = io::load_config(config_path("E"));
  PointConfig back = io::config_from_json(io::to_json(cfg));
  EXPECT_EQ(back.points, cfg.points);
  EXPECT_EQ(back.params, cfg.params);
}

TEST(Config, Errors) {
  EXPECT_THROW(io::config_from_json(Json::parse(R"({"name":"x"})")), std::invalid_argument);
  EXPECT_THROW(io::config_from_json(Json::parse(R"({"kind":"A","params":{"A":"2","B":"3"}})")),
               std::invalid_argument);
  EXPECT_THROW(io::config_from_json(Json::parse(R"({"points":[["1","0","0"]]})")), std::invalid_argument);
  Json moved = io::read_json_file(config_path("C"));
  moved["points"][3][0] = "17";
  EXPECT_THROW(io::config_from_json(moved), std::invalid_argument);
  EXPECT_THROW(io::load_config(config_path("missing")), std::runtime_error);
}

TEST(Report, SchemaWithAndWithoutTiming) {
  Report rep = suites::hexads();
  expect_report_schema(rep.to_json(), false);
  expect_report_schema(rep.to_json(true), true);
}

TEST(Report, ByteIdenticalReruns) {
  PointConfig cfg = io::load_config(config_path("D"));
  suites::PolyOptions opt{42, CheckMode::Sample, 10};
  std::string a = suites::run_poly("dual", cfg, opt).to_json().dump(2);
  std::string b = suites::run_poly("dual", cfg, opt).to_json().dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(suites::verify_lattice().to_json().dump(), suites::verify_lattice().to_json().dump());
}

TEST(Report, ExceptionsBecomeFailures) {
  Report rep;
  rep.suite = "t";
  rep.run("boom", []() -> Outcome { throw std::runtime_error("bad"); });
  rep.run("ok", [] { return Outcome::of(true); });
  rep.run("later", [] { return Outcome::skip("not applicable"); });
  EXPECT_FALSE(rep.all_passed());
  EXPECT_EQ(rep.find("boom")->witness["error"], "bad");
  EXPECT_EQ(rep.count(Status::Skip), 1u);
  expect_report_schema(rep.to_json(), false);
}

TEST(Report, TsvPrefersTheSideTable) {
  Report rep = suites::iterate(2);
  std::string tsv = rep.to_tsv();
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')).rfind("k\tdegree\tH", 0), 0u);
  Report plain = suites::hexads();
  EXPECT_EQ(plain.to_tsv().rfind("id\tstatus\twitness\n", 0), 0u);
}
