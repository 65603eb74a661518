#include <doctest.h>

#include <string>

#include "ntnsim/results_io.hpp"
#include "ntnsim/scenarios.hpp"

using namespace ntnsim;

namespace {

ScenarioConfig small(ScenarioKind kind, std::int64_t trials) {
  ScenarioConfig c = default_config(kind);
  c.trials = trials;
  return c;
}

std::string all_csv(const ScenarioOutput& out) {
  std::string s;
  for (const auto& t : out.tables) s += t.name + "\n" + to_csv(t);
  return s;
}

double number(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  return std::get<double>(c);
}

}  // namespace

TEST_CASE("CSV bytes do not depend on the worker count") {
  ScenarioConfig remote = small(ScenarioKind::remote, 2000);
  ScenarioConfig pd = small(ScenarioKind::post_disaster, 1500);
  pd.mode = "sinr";
  ScenarioConfig kc = small(ScenarioKind::k_coverage, 800);
  for (const ScenarioConfig* cfg : {&remote, &pd, &kc}) {
    const std::string one = all_csv(run_scenario(*cfg, 77, RunOptions{1}));
    for (unsigned w : {4u, 8u}) CHECK(all_csv(run_scenario(*cfg, 77, RunOptions{w})) == one);
  }
}

TEST_CASE("remote grid: corners and monotonicity") {
  const ScenarioOutput out = scenario_remote(small(ScenarioKind::remote, 3000), 5);
  const ResultTable& t = out.tables.at(0);
  CHECK(to_csv(t).rfind("n_sat,n_hap,trials,availability,ci_low,ci_high\n", 0) == 0);
  REQUIRE(t.rows.size() == 21);
  auto value = [&](std::int64_t ns, std::int64_t nh) {
    for (const auto& r : t.rows) {
      if (std::get<std::int64_t>(r[0]) == ns && std::get<std::int64_t>(r[1]) == nh) return number(r[3]);
    }
    FAIL("missing grid point");
    return -1.0;
  };
  CHECK(value(0, 0) == 0.0);
  for (std::int64_t nh : {0, 25, 50}) {
    for (std::int64_t ns = 10; ns <= 60; ns += 10) CHECK(value(ns, nh) >= value(ns - 10, nh));
  }
  for (std::int64_t ns = 0; ns <= 60; ns += 10) {
    CHECK(value(ns, 25) >= value(ns, 0));
    CHECK(value(ns, 50) >= value(ns, 25));
  }
  for (const auto& r : t.rows) {
    CHECK(number(r[4]) <= number(r[3]));
    CHECK(number(r[3]) <= number(r[5]));
  }
}

TEST_CASE("interval width shrinks like one over root trials") {
  auto width = [](std::int64_t trials) {
    ScenarioConfig c = small(ScenarioKind::remote, trials);
    c.remote_n_sat = {20};
    c.remote_n_hap = {0};
    const std::vector<Cell> row = scenario_remote(c, 21).tables.at(0).rows.at(0);
    const double p = number(row[3]);
    CHECK(p > 0.2);
    CHECK(p < 0.8);
    return number(row[5]) - number(row[4]);
  };
  const double ratio = width(1000) / width(100'000);
  CHECK(ratio >= 8.0);
  CHECK(ratio <= 12.0);
}

TEST_CASE("post-disaster CDF tables") {
  const PostDisasterOutput out = scenario_post_disaster(small(ScenarioKind::post_disaster, 2000), 3);
  REQUIRE(out.output.tables.size() == 2);
  CHECK(out.output.tables[0].columns == std::vector<std::string>{"label", "tier", "capacity_bps", "cdf"});
  CHECK(out.output.tables[1].columns == std::vector<std::string>{"label", "tier", "ee_bits_per_joule", "cdf"});
  REQUIRE(out.curves.size() == 4);
  CHECK(out.curves[0].label == "lap100_hap10_sat10");
  for (const auto& t : out.output.tables) {
    std::string label, tier;
    double last_value = 0.0, last_cdf = 0.0;
    for (const auto& r : t.rows) {
      const auto& l = std::get<std::string>(r[0]);
      const auto& k = std::get<std::string>(r[1]);
      if (l != label || k != tier) {
        label = l;
        tier = k;
        last_value = -1.0;
        last_cdf = -1.0;
      }
      CHECK(number(r[2]) >= last_value);
      CHECK(number(r[3]) >= last_cdf);
      last_value = number(r[2]);
      last_cdf = number(r[3]);
    }
  }
}

TEST_CASE("no platforms gives an explicit no-coverage flag and empty CDFs") {
  ScenarioConfig c = small(ScenarioKind::post_disaster, 200);
  c.pd_labels = {"empty"};
  c.pd_lap_counts = {0};
  c.pd_hap_counts = {0};
  c.pd_sat_counts = {0};
  const PostDisasterOutput out = scenario_post_disaster(c, 1);
  for (const auto& t : out.output.tables) {
    REQUIRE(t.rows.size() == 1);
    CHECK(std::get<std::string>(t.rows[0][1]) == "none");
    CHECK(number(t.rows[0][3]) == 1.0);
  }
}

TEST_CASE("k-coverage table shape and ordering") {
  ScenarioConfig c = small(ScenarioKind::k_coverage, 500);
  const ScenarioOutput out = scenario_k_coverage(c, 9);
  const ResultTable& t = out.tables.at(0);
  CHECK(t.columns == std::vector<std::string>{"threshold_db", "k", "probability", "ci_low", "ci_high"});
  REQUIRE(t.rows.size() == 2 * c.thresholds_db.size());
  const std::size_t n = c.thresholds_db.size();
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(number(t.rows[i][2]) >= number(t.rows[n + i][2]));  // k=1 over k=4
    if (i > 0) CHECK(number(t.rows[i][2]) <= number(t.rows[i - 1][2]));
  }
}

TEST_CASE("custom scenario emits coverage and k-coverage") {
  ScenarioConfig c = small(ScenarioKind::custom, 300);
  const ScenarioOutput out = run_scenario(c, 2);
  REQUIRE(out.tables.size() == 2);
  CHECK(out.tables[0].name == "coverage");
  CHECK(out.tables[1].name == "kcoverage");
}

TEST_CASE("sweep prepends the swept key and matches single runs") {
  ScenarioConfig c = small(ScenarioKind::remote, 500);
  c.remote_n_hap = {0};
  const std::vector<std::string> values{"[0]", "[20]", "[40]", "[60]"};
  const ScenarioOutput out = sweep_scenario(c, "remote.n_sat_values", values, 4);
  const ResultTable& t = out.tables.at(0);
  CHECK(t.columns.front() == "remote.n_sat_values");
  REQUIRE(t.rows.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(number(t.rows[i][4]) >= number(t.rows[i - 1][4]));

  // With an empty grid the tier counts define the single grid point.
  const std::vector<std::string> one{"40"};
  ScenarioConfig plain = c;
  plain.remote_n_sat = {};
  plain.remote_n_hap = {};
  at(plain.tiers, Tier::sat).count = 40;
  at(plain.tiers, Tier::hap).count = 0;
  ScenarioConfig via = c;
  via.remote_n_sat = {};
  via.remote_n_hap = {};
  at(via.tiers, Tier::hap).count = 0;
  const ScenarioOutput a = sweep_scenario(via, "tiers.sat.count", one, 4);
  const ScenarioOutput b = run_scenario(plain, 4);
  REQUIRE(a.tables[0].rows.size() == 1);
  std::vector<Cell> row = a.tables[0].rows[0];
  row.erase(row.begin());
  CHECK(row == b.tables[0].rows[0]);
  CHECK_THROWS_AS(sweep_scenario(c, "tiers.sat.nope", one, 4), ConfigError);
}

TEST_CASE("cdf points") {
  CHECK(cdf_points({}).empty());
  const auto pts = cdf_points({3.0, 1.0, 2.0}, 4);
  REQUIRE(pts.size() == 6);
  CHECK(pts.front() == std::pair{1.0, 0.0});
  CHECK(pts.back() == std::pair{3.0, 1.0});
  CHECK(pts[1].first == 1.0);  // level 0.2
  CHECK(pts[2].first == 2.0);  // level 0.4
  CHECK(pts[4].first == 3.0);  // level 0.8
}
