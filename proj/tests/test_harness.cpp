#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eulerlax/errors.hpp"
#include "eulerlax_tools/config.hpp"
#include "eulerlax_tools/parallel.hpp"
#include "eulerlax_tools/report_json.hpp"
#include "eulerlax_tools/suites.hpp"

using namespace eulerlax;
using namespace eulerlax::tools;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("eulerlax_harness_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

// Report JSON with the fields that legitimately vary between runs removed.
json stable(const ResidualReport& r) {
  json j = report_to_json(r);
  j.erase("timestamp");
  j.erase("runtime_ms");
  return j;
}

}  // namespace

TEST(Config, JsonRoundTripIsIdempotent) {
  ExperimentConfig c;
  c.suite = "lax3d";
  c.n = 48;
  c.tol = 1e-9;
  c.a1 = {0.5, 0.0, -1.0};
  c.eps = {0.2, 0.02, 0.002};
  c.sizes = {16, 24, 32};
  const json once = to_json(c);
  const json twice = to_json(config_from_json(once));
  EXPECT_EQ(once, twice);
  EXPECT_EQ(config_from_json(once).tol.value(), 1e-9);

  ExperimentConfig d;
  d.suite = "jacobi";
  EXPECT_FALSE(config_from_json(to_json(d)).tol.has_value());
}

TEST(Config, RejectsUnknownKeysAndBadTypes) {
  EXPECT_THROW(config_from_json(json{{"suite", "jacobi"}, {"grid", 64}}), InvalidArgument);
  EXPECT_THROW(config_from_json(json{{"suite", "jacobi"}, {"n", "sixty-four"}}), InvalidArgument);
  EXPECT_THROW(config_from_json(json{{"suite", "lax3d"}, {"a1", {1, 2}}}), InvalidArgument);
  EXPECT_THROW(config_from_json(json::array()), InvalidArgument);
  const ExperimentConfig partial = config_from_json(json{{"suite", "darboux"}, {"c", 0.1}});
  EXPECT_EQ(partial.c, 0.1);
  EXPECT_EQ(partial.n, 64);
}

TEST(Config, ValidateRejectsUnusableValues) {
  auto with = [](auto mutate) {
    ExperimentConfig c;
    c.suite = "jacobi";
    mutate(c);
    return c;
  };
  EXPECT_NO_THROW(with([](ExperimentConfig&) {}).validate());
  EXPECT_THROW(with([](ExperimentConfig& c) { c.suite = "nope"; }).validate(), InvalidArgument);
  EXPECT_THROW(with([](ExperimentConfig& c) { c.n = 2; }).validate(), InvalidArgument);
  EXPECT_THROW(with([](ExperimentConfig& c) { c.count = 0; }).validate(), InvalidArgument);
  EXPECT_THROW(with([](ExperimentConfig& c) { c.jobs = 0; }).validate(), InvalidArgument);
  EXPECT_THROW(with([](ExperimentConfig& c) { c.tol = -1.0; }).validate(), InvalidArgument);
  EXPECT_THROW(with([](ExperimentConfig& c) { c.eps_rel = 0.5; }).validate(), InvalidArgument);
}

TEST(Config, ListParsing) {
  EXPECT_EQ(parse_number_list("1,2.5, -3"), (std::vector<double>{1.0, 2.5, -3.0}));
  EXPECT_EQ(parse_vector3("1,0,2"), (std::array<double, 3>{1.0, 0.0, 2.0}));
  EXPECT_THROW(parse_vector3("1,2"), InvalidArgument);
  EXPECT_THROW(parse_number_list("1,,2"), InvalidArgument);
  EXPECT_THROW(parse_number_list("x"), InvalidArgument);
}

TEST(Config, LoadFromFile) {
  const auto dir = scratch("config");
  std::ofstream(dir / "c.json") << R"({"suite": "jacobi", "n": 32, "count": 2})";
  const ExperimentConfig c = load_config((dir / "c.json").string());
  EXPECT_EQ(c.n, 32);
  EXPECT_EQ(c.count, 2);
  EXPECT_THROW(load_config((dir / "missing.json").string()), Error);
  std::ofstream(dir / "bad.json") << "{not json";
  EXPECT_THROW(load_config((dir / "bad.json").string()), InvalidArgument);
}

TEST(ReportJson, NestsDottedNames) {
  ResidualReport r;
  r.suite = "darboux";
  r.metrics["eps_rel"] = 1e-3;
  r.metrics["mask_fraction"] = 0.97;
  r.add({"ch1", 1e-10, 1e-11, 0.97, 1e-6});
  r.add({"constraint.main1", 0.0, 0.0, 1.0, 1e-9});
  r.add({"constraint.main2", 2e-9, 0.0, 1.0, 1e-9});
  const json j = report_to_json(r);
  EXPECT_EQ(j["residuals"]["constraint"]["main1"]["pass"], true);
  EXPECT_EQ(j["residuals"]["constraint"]["main2"]["pass"], false);
  EXPECT_EQ(j["residuals"]["ch1"]["mask_fraction"], 0.97);
  EXPECT_EQ(j["eps_rel"], 1e-3);
  EXPECT_EQ(j["mask_fraction"], 0.97);
  EXPECT_EQ(j["verdict"], "fail");
}

TEST(ReportJson, NonFiniteValuesAndNameErrors) {
  ResidualReport r;
  r.add({"a", std::numeric_limits<double>::infinity(), std::nan(""), 1.0, 1.0});
  const json j = report_to_json(r);
  EXPECT_EQ(j["residuals"]["a"]["linf"], "inf");
  EXPECT_EQ(j["residuals"]["a"]["l2"], "nan");

  ResidualReport dup;
  dup.add({"x.y"});
  dup.add({"x.y"});
  EXPECT_THROW(report_to_json(dup), InvalidArgument);
  ResidualReport leaf;
  leaf.add({"x"});
  leaf.add({"x.y"});
  EXPECT_THROW(report_to_json(leaf), InvalidArgument);
  ResidualReport empty_part;
  empty_part.add({"x..y"});
  EXPECT_THROW(report_to_json(empty_part), InvalidArgument);
}

TEST(ReportJson, WriteCreatesParents) {
  const auto dir = scratch("write");
  ResidualReport r;
  r.suite = "jacobi";
  const auto path = dir / "a" / "b" / "report.json";
  write_report(path.string(), r);
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["suite"], "jacobi");
  EXPECT_EQ(utc_timestamp().size(), 20u);
}

TEST(ParallelMap, KeepsOrderAndRethrows) {
  for (int jobs : {1, 3, 16}) {
    const auto v = parallel_map(50, jobs, [](std::size_t i) { return static_cast<int>(i * i); });
    ASSERT_EQ(v.size(), 50u);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
  }
  std::atomic<int> calls{0};
  EXPECT_THROW(parallel_map(10, 2,
                            [&](std::size_t i) {
                              ++calls;
                              if (i == 4) throw InvalidArgument("boom");
                              return 0;
                            }),
               InvalidArgument);
  EXPECT_EQ(calls.load(), 10);
  EXPECT_TRUE(parallel_map(0, 4, [](std::size_t) { return 1; }).empty());
}

TEST(RunSuite, JacobiPasses) {
  ExperimentConfig c;
  c.suite = "jacobi";
  c.count = 3;
  const ResidualReport r = run_suite(c);
  EXPECT_TRUE(r.verdict());
  EXPECT_NE(r.find("jacobi.seed_1"), nullptr);
  EXPECT_NE(r.find("jacobi.seed_3"), nullptr);
  EXPECT_EQ(r.parameters.at("n"), "64");
}

TEST(RunSuite, DarbouxPassesAndFailsHonestly) {
  ExperimentConfig c;
  c.suite = "darboux";
  c.n = 128;
  const ResidualReport good = run_suite(c);
  EXPECT_TRUE(good.verdict());
  EXPECT_GT(good.metrics.at("mask_fraction"), 0.9);

  c.tol = 1e-30;
  EXPECT_FALSE(run_suite(c).verdict());

  ExperimentConfig shear;
  shear.suite = "darboux";
  shear.state = "shear:m=1,A=1";
  const ResidualReport degenerate = run_suite(shear);
  EXPECT_FALSE(degenerate.verdict());
  EXPECT_NE(degenerate.find("mask.degenerate"), nullptr);
}

TEST(RunSuite, RejectsUnknownSuite) {
  ExperimentConfig c;
  c.suite = "navier-stokes";
  EXPECT_THROW(run_suite(c), InvalidArgument);
}

TEST(RunSuite, DeterministicAcrossRunsAndJobs) {
  ExperimentConfig c;
  c.suite = "compat2d";
  c.count = 4;
  const json a = stable(run_suite(c));
  const json b = stable(run_suite(c));
  EXPECT_EQ(a, b);
  c.jobs = 2;
  json par = stable(run_suite(c));
  par["parameters"].erase("jobs");
  json seq = a;
  seq["parameters"].erase("jobs");
  EXPECT_EQ(seq, par);
}

TEST(RunSuite, WritesReportFile) {
  const auto dir = scratch("suite");
  ExperimentConfig c;
  c.suite = "limit";
  c.n = 16;
  c.out = (dir / "limit.csv").string();
  c.report = (dir / "limit.json").string();
  EXPECT_TRUE(run_suite(c).verdict());
  std::ifstream csv(dir / "limit.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "eps,diff_linf");
  std::ifstream rep(dir / "limit.json");
  EXPECT_EQ(json::parse(rep)["verdict"], "pass");
}

TEST(Convergence, StudyValidatesSizes) {
  ExperimentConfig c;
  EXPECT_THROW(convergence_study("jacobi", {32}, c), InvalidArgument);
  EXPECT_THROW(convergence_study("jacobi", {32, 32, 48}, c), InvalidArgument);
  EXPECT_THROW(convergence_study("euler2d", {16, 24, 32}, c), InvalidArgument);
}

TEST(Convergence, AnalyticResidualsDecay) {
  ExperimentConfig c;
  const auto rows = convergence_study("jacobi", {32, 48, 64}, c);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_GT(rows[0].residual / rows[2].residual, 1e3);
  EXPECT_GT(rows[0].residual, rows[1].residual);
  std::ostringstream out;
  write_convergence_csv(out, rows);
  EXPECT_EQ(out.str().substr(0, 11), "n,residual\n");
}
