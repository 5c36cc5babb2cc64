#include <doctest.h>

#include "egostat/errors.hpp"
#include "egostat/report.hpp"
#include "egostat/theory.hpp"
#include "karate.hpp"

using namespace egostat;
using namespace egostat::testing;

namespace {

Graph k4() { return build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("report json round-trips exactly") {
  ReportOptions opts;
  ReportBundle b = build_report(karate_graph(), "karate", opts);
  b.provenance.input_sha256 = "deadbeef";
  nlohmann::json j = to_json(b);
  nlohmann::json j2 = to_json(bundle_from_json(j));
  CHECK(j == j2);
}

TEST_CASE("report is deterministic") {
  ReportOptions opts;
  opts.seed = 42;
  std::string a = to_json(build_report(karate_graph(), "karate", opts)).dump();
  std::string b = to_json(build_report(karate_graph(), "karate", opts)).dump();
  CHECK(a == b);
}

TEST_CASE("regular graph yields null assortativity with a reason") {
  ReportBundle b = build_report(k4(), "k4", {});
  CHECK(!b.table1.r_glo.value.has_value());
  CHECK(!b.table1.r_glo.reason.empty());
  // the same metric feeds table 3
  CHECK(b.table3.r_glo.reason == b.table1.r_glo.reason);

  nlohmann::json j = to_json(b);
  CHECK(j["table1"]["r_glo"].is_null());
  CHECK(j["table1"].contains("r_glo_reason"));
}

TEST_CASE("report invariants on the karate club") {
  Graph g = karate_graph();
  ReportBundle b = build_report(g, "karate", {});
  REQUIRE(b.table2.p_glo.value.has_value());
  double expect_p = 2.0 * double(g.m) / (double(g.n) * double(g.n - 1));
  CHECK(*b.table2.p_glo.value == doctest::Approx(expect_p).epsilon(1e-12));
  REQUIRE(b.table3.c_glo.value.has_value());
  REQUIRE(b.table3.c_ego_rand.value.has_value());
  double c = *b.table3.c_glo.value;
  CHECK(*b.table3.c_ego_rand.value == doctest::Approx(2.0 * c - c * c).epsilon(1e-12));
  CHECK(b.table1.n == 34);
  CHECK(b.table1.m == 78);
  REQUIRE(b.table2.median_degree.value.has_value());
  CHECK(*b.table2.median_degree.value == 3.0);
  REQUIRE(b.table2.mean_degree.value.has_value());
  CHECK(*b.table2.mean_degree.value == doctest::Approx(156.0 / 34.0).epsilon(1e-12));
}

TEST_CASE("skip flags surface as reasons") {
  ReportOptions opts;
  opts.skip_fourclique = true;
  opts.skip_diameter = true;
  ReportBundle b = build_report(karate_graph(), "karate", opts);
  CHECK(!b.table3.c_ego.value.has_value());
  CHECK(b.table3.c_ego.reason == "skipped");
  CHECK(!b.table1.eff_diameter90.value.has_value());
  CHECK(b.table1.eff_diameter90.reason == "skipped");
}

TEST_CASE("csv rendering flattens the json keys") {
  ReportBundle b = build_report(karate_graph(), "karate", {});
  std::string csv = render_csv(b);
  CHECK(csv.rfind("key,value\n", 0) == 0);
  CHECK(csv.find("table1.n,34") != std::string::npos);
  CHECK(csv.find("table3.c_glo,") != std::string::npos);
  std::string md = render_markdown(b);
  CHECK(md.find("# karate") != std::string::npos);
}

TEST_CASE("compare series on the karate club") {
  CompareSeries s = compare_series(karate_graph());
  REQUIRE(!s.global_ccdf.empty());
  REQUIRE(!s.ego_ccdf.empty());
  REQUIRE(!s.predicted_ccdf.empty());
  CHECK(s.global_ccdf.front().second == doctest::Approx(1.0));
  CHECK(s.ego_ccdf.front().second == doctest::Approx(1.0));
  CHECK(s.ks_ego_vs_predicted >= 0.0);
  CHECK(s.ks_ego_vs_predicted <= 1.0);
  for (std::size_t i = 1; i < s.ego_ccdf.size(); ++i) {
    CHECK(s.ego_ccdf[i].first > s.ego_ccdf[i - 1].first);
    CHECK(s.ego_ccdf[i].second < s.ego_ccdf[i - 1].second);
  }
}

TEST_CASE("compare series rejects triangle-free graphs") {
  Graph star = build_graph({{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(compare_series(star), undefined_metric_error);
}
