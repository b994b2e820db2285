#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "fdiv/cli.hpp"
#include "fdiv/io.hpp"

namespace fdivergence {

namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("fdiv_test_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fdiv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Io, ParseDistributionFormats) {
  const DiscreteDist a = parse_distribution_json(R"({"atoms":[{"label":"x","p":0.25},{"label":"y","p":0.75}]})");
  const DiscreteDist b = parse_distribution_csv("label,p\nx,0.25\ny,0.75\n");
  EXPECT_EQ(a, b);
  EXPECT_THROW(parse_distribution_json("{\"atoms\": [}"), ValidationError);
  EXPECT_THROW(parse_distribution_json(R"({"atoms":[{"label":"x"}]})"), ValidationError);
  EXPECT_THROW(parse_distribution_csv("label,q\nx,1\n"), ValidationError);
  EXPECT_THROW(parse_distribution_csv("label,p\nx,abc\n"), ValidationError);
}

TEST(Io, Units) {
  EXPECT_DOUBLE_EQ(convert(std::log(2.0), 1, Units::bits), 1.0);
  EXPECT_DOUBLE_EQ(convert(0.7, 0, Units::bits), 0.7);
  EXPECT_DOUBLE_EQ(convert(2.0, -1, Units::bits), 2.0 * std::log(2.0));
  EXPECT_DOUBLE_EQ(convert(0.7, 1, Units::nats), 0.7);
  EXPECT_TRUE(convert(ExtReal::infinity(), 1, Units::bits).is_pos_inf());
  EXPECT_THROW(parse_units("hartleys"), ValidationError);
}

TEST(Io, ReportRoundTrip) {
  const auto reports = run_catalog(DiscreteDist::from_probs({0.75, 0.25}),
                                   DiscreteDist::from_probs({0.5, 0.5, }));
  for (const BoundReport& r : reports) {
    const nlohmann::json j = to_json(r);
    EXPECT_EQ(j.size(), 9u);
    const BoundReport back = report_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.bound_id, r.bound_id);
    EXPECT_EQ(back.lhs, r.lhs);
    EXPECT_EQ(back.rhs, r.rhs);
    EXPECT_EQ(back.slack, r.slack);
    EXPECT_EQ(back.holds, r.holds);
    EXPECT_EQ(back.skipped, r.skipped);
    EXPECT_EQ(back.log_power, r.log_power);
  }
}

TEST(Io, ReportUnitsCoherence) {
  const auto reports = run_catalog(DiscreteDist::from_probs({0.75, 0.25}),
                                   DiscreteDist::from_probs({0.5, 0.5}));
  for (const BoundReport& r : reports) {
    if (r.skipped || !r.lhs.is_finite() || !r.rhs.is_finite()) continue;
    const nlohmann::json n = to_json(r, Units::nats);
    const nlohmann::json b = to_json(r, Units::bits);
    const double scale = std::pow(std::log(2.0), r.log_power);
    EXPECT_NEAR(b["lhs"].get<double>() * scale, n["lhs"].get<double>(), 1e-14) << r.bound_id;
    EXPECT_NEAR(b["rhs"].get<double>() * scale, n["rhs"].get<double>(), 1e-14) << r.bound_id;
    // The verdict does not depend on the unit.
    EXPECT_EQ(b["holds"], n["holds"]);
    EXPECT_EQ(b["units"], r.log_power == 0 ? "none" : "bits");
  }
}

TEST(Io, SearchResultRoundTrip) {
  const SearchResult r = run_named_search("marton_tv", 2, 4, 9);
  const SearchResult back = search_result_from_json(nlohmann::json::parse(to_json(r).dump()));
  EXPECT_EQ(back.objective_id, r.objective_id);
  EXPECT_EQ(back.best_value, r.best_value);
  EXPECT_EQ(back.witness_p, r.witness_p);
  EXPECT_EQ(back.witness_q, r.witness_q);
  EXPECT_EQ(back.claimed_constant, r.claimed_constant);
  EXPECT_EQ(back.attainment_ratio, r.attainment_ratio);
  EXPECT_EQ(back.seed, r.seed);
}

TEST(Cli, EvalBitsAndNats) {
  TempDir d;
  const std::string p = d.write("p.json", R"({"atoms":[{"label":"a","p":1},{"label":"b","p":0}]})");
  const std::string q = d.write("q.csv", "label,p\na,0.5\nb,0.5\n");
  CliRun r = cli({"eval", "--f", "kl", "--f", "tv", "--p", p, "--q", q, "--units", "bits"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["divergences"][0]["value"].get<double>(), 1.0, 1e-15);
  EXPECT_EQ(j["divergences"][0]["units"], "bits");
  EXPECT_EQ(j["divergences"][1]["units"], "none");
  r = cli({"eval", "--f", "reverse_kl", "--p", p, "--q", q});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["divergences"][0]["value"], "inf");
}

TEST(Cli, ExitCodes) {
  TempDir d;
  const std::string p = d.write("p.csv", "label,p\na,0.5\nb,0.5\n");
  const std::string q = d.write("q.csv", "label,p\na,1\n");
  const std::string bad = d.write("bad.json", "{\"atoms\": [");
  const std::string off = d.write("off.csv", "label,p\na,0.5\nb,0.6\n");
  EXPECT_EQ(cli({"eval", "--f", "kl", "--p", p, "--q", q}).code, 3);
  EXPECT_EQ(cli({"eval", "--f", "kl", "--p", bad, "--q", p}).code, 2);
  EXPECT_EQ(cli({"eval", "--f", "kl", "--p", off, "--q", p}).code, 2);
  EXPECT_EQ(cli({"eval", "--f", "kl", "--p", off, "--q", p, "--renormalize"}).code, 2);
  EXPECT_EQ(cli({"eval", "--f", "nope", "--p", p, "--q", p}).code, 2);
  EXPECT_EQ(cli({"eval", "--f", "kl", "--p", p}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"eval", "--f", "kl", "--p", d.write("missing_dir/x", ""), "--q", p}).code, 2);
}

TEST(Cli, ReportAndSearch) {
  TempDir d;
  const std::string p = d.write("p.csv", "label,p\na,0.75\nb,0.25\n");
  const std::string q = d.write("q.csv", "label,p\na,0.5\nb,0.5\n");
  CliRun r = cli({"report", "--p", p, "--q", q});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["failed"], 0);
  bool saw_b7 = false;
  for (const auto& x : j["reports"]) {
    if (x["bound_id"] == "B7") {
      saw_b7 = true;
      EXPECT_NEAR(x["slack"].get<double>(), 0.0, 1e-12);
    }
  }
  EXPECT_TRUE(saw_b7);
  r = cli({"report", "--p", p, "--q", q, "--format", "markdown"});
  EXPECT_NE(r.out.find("| B7 |"), std::string::npos);

  r = cli({"search", "--objective", "samson", "--restarts", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(nlohmann::json::parse(r.out)["best_value"].get<double>(), 1.9);
  r = cli({"search", "--objective", "reverse_samson", "--alphabet-size", "3", "--restarts", "8",
           "--beta1", "0.5", "--beta2", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["sense"], "infimum");
  EXPECT_EQ(cli({"search", "--objective", "samson", "--alphabet-size", "9"}).code, 2);
  EXPECT_EQ(cli({"search", "--objective", "kl_ratio"}).code, 2);
}

TEST(Cli, LocalAndJensen) {
  TempDir d;
  const std::string q = d.write("q.csv", "label,p\na,0.5\nb,0.3\nc,0.2\n");
  const std::string qp = d.write("qp.csv", "label,p\na,0.1\nb,0.1\nc,0.8\n");
  CliRun r = cli({"local", "--f", "kl", "--g", "chi2", "--p", qp, "--q", q, "--steps", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kappa_limit_left"], 0.5);
  EXPECT_NEAR(j["probe"].back()["ratio"].get<double>(), 0.5, 1e-3);

  const std::string pu = d.write("pu.csv", "label,p\na,0.75\nb,0.25\n");
  const std::string pz = d.write("pz.csv", "label,p\na,0.5\nb,0.5\n");
  const std::string ch = d.write(
      "ch.json", R"({"function":"square","channel":{"a":[{"z":-1,"p":0.5},{"z":1,"p":0.5}],"b":[{"z":2,"p":1}]}})");
  r = cli({"jensen", "--p", pu, "--q", pz, "--channel", ch});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["rhs"].get<double>(), 0.75, 1e-15);
}

}  // namespace fdivergence
