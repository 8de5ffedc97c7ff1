#include "cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct Run {
  int rc;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = hegf::cli::run_command(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("he eval") {
  const auto r = run({"he", "eval", "--n", "5", "--x", "1.5"});
  CHECK(r.rc == 0);
  CHECK(r.out == "-3.65625\n");
  CHECK(r.err.empty());
}

TEST_CASE("he coeffs are exact") {
  const auto r = run({"he", "coeffs", "--n", "4", "--format", "json"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("-6") != std::string::npos);
  CHECK(run({"he", "coeffs", "--n", "55"}).rc == 2);
}

TEST_CASE("gf eval as JSON") {
  const auto r = run({"gf", "eval", "--x", "0", "--t", "0.1", "--format", "json"});
  REQUIRE(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("g").get<double>() == 0.99028596471731933);
  CHECK(j.at("z").get<double>() == doctest::Approx(50.0));
  CHECK(j.at("branch") == "positive");
}

TEST_CASE("domain errors are usage failures") {
  const auto r = run({"gf", "eval", "--x", "0", "--t", "0"});
  CHECK(r.rc == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"gf", "eval", "--x", "20", "--t", "1"}).rc == 2);
}

TEST_CASE("unknown flags and missing options") {
  auto r = run({"he", "eval", "--n", "5", "--x", "1.5", "--bogus"});
  CHECK(r.rc == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);
  CHECK(r.out.empty());
  r = run({"he", "eval", "--n", "5"});
  CHECK(r.rc == 2);
  CHECK(r.err.find("--x") != std::string::npos);
  CHECK(run({}).rc == 2);
  CHECK(run({"--help"}).rc == 0);
}

TEST_CASE("tolerance assertions") {
  CHECK(run({"cdf", "asym", "--tol", "1e-12"}).rc == 0);
  const auto r = run({"cdf", "asym", "--mu", "3", "--tol", "1e-12"});
  CHECK(r.rc == 1);
  CHECK(r.err.find("check failed") != std::string::npos);
  CHECK(run({"contour", "classic", "--n", "5", "--x", "1.5", "--tol", "1e-9"}).rc == 0);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--suite", "hermite", "--format", "csv"});
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("identity_id,inputs,residual,tolerance,passed,notes\n", 0) == 0);
  CHECK(r.out.find(",false,") == std::string::npos);
  const auto h = run({"verify", "--suite", "cdf"});
  CHECK(h.out.find("[PASS] cdf_series_mu10") != std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).rc == 2);
}

TEST_CASE("output files") {
  const auto path = std::filesystem::temp_directory_path() / "hegf_cli_test.csv";
  std::filesystem::remove(path);
  const auto r = run({"contour", "new", "--grid", "--xs", "0", "--format", "csv", "--out", path.string()});
  CHECK(r.rc == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("overflow_nodes") != std::string::npos);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 5 * 3 * 2);
  std::filesystem::remove(path);

  const auto bad = run({"he", "eval", "--n", "1", "--x", "1", "--out", "/nonexistent/dir/out.txt"});
  CHECK(bad.rc == 1);
  CHECK_FALSE(bad.err.empty());
}
