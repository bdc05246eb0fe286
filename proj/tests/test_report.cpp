#include <gtest/gtest.h>

#include "ucf/io.hpp"
#include "ucf/report.hpp"

using namespace ucf;
using report::Json;

TEST(Report, DigestIsFnv1a) {
  EXPECT_EQ(report::digest(""), "fnv1a64:cbf29ce484222325");
  EXPECT_EQ(report::digest("a"), "fnv1a64:af63dc4c8601ec8c");
}

TEST(Report, AnalyzeCounterexample) {
  const std::string text = "n=3\n1 2 3\n1 2\n1\n2\n{}\n";
  const auto a = report::analyze(parse_family(text), "x.txt", report::digest(text));
  const Json& j = a.json;
  EXPECT_FALSE(a.violation);
  EXPECT_EQ(j["avg"], "7/5");
  EXPECT_EQ(j["height"], 4);
  EXPECT_EQ(j["r"], 4);
  EXPECT_EQ(j["avg_vs_half"], "below");
  EXPECT_EQ(j["b_report"]["size"], 2);
  EXPECT_EQ(j["frankl"]["ok"], true);
  EXPECT_EQ(j["lemma13"]["holds"], true);
  EXPECT_EQ(j["theorems"]["T2.1"]["applicable"], false);
  EXPECT_EQ(j["status"], "ok");
}

TEST(Report, AnalyzeNotUnionClosed) {
  const auto a = report::analyze(Family(3, {{1}, {2}}), "p", "d");
  EXPECT_EQ(a.json["union_closed"], false);
  EXPECT_EQ(a.json["thm12"]["status"], "inapplicable");
  EXPECT_EQ(a.json["propositions"]["reason"], "NotUnionClosed");
}

TEST(Report, AnalyzeFullSet) {
  const auto a = report::analyze(Family(5, {{1, 2, 3, 4, 5}}), "p", "d");
  EXPECT_EQ(a.json["height"], 1);
  EXPECT_EQ(a.json["avg"], "5/1");
  EXPECT_EQ(a.json["lemma13"]["reason"], "NotSeparating");
}

TEST(Report, ByteStable) {
  const Family f(3, {{1, 2, 3}, {1, 2}, {1}, {2}, {}});
  EXPECT_EQ(report::analyze(f, "p", "d").json.dump(2), report::analyze(f, "p", "d").json.dump(2));
  const auto r1 = verify_theorem(TheoremId::T1_4, 3), r2 = verify_theorem(TheoremId::T1_4, 3);
  EXPECT_EQ(report::verify_report(r1, false).dump(), report::verify_report(r2, false).dump());
  EXPECT_FALSE(report::verify_report(r1, false).contains("elapsed_seconds"));
}

TEST(Report, ConstructionCertificate) {
  const Json j = report::construction_report(build_astarstar(10));
  EXPECT_EQ(j["certificate"]["avg"], "83/17");
  EXPECT_EQ(j["certificate"]["closed_form_matches"], true);
  EXPECT_EQ(j["certificate"]["ok"], true);
}

TEST(Report, Bounds) {
  const auto b = report::bounds_report(10, Rational(1, 10));
  EXPECT_TRUE(b.ok);
  EXPECT_EQ(b.json["min_f"]["claimed"]["value"], "5/1");
  EXPECT_EQ(b.json["min_g"]["claimed"]["value"], "11/2");
  EXPECT_EQ(b.json["case2_subcase_bounds"]["4"], "23/4");
}
