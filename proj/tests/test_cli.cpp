// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using sharpc::cli::run_cli;
namespace cli = sharpc::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) v.push_back(nlohmann::json::parse(line));
  return v;
}

}  // namespace

TEST_CASE("constant subcommand") {
  auto r = run({"constant", "--kind", "schmidt", "--p", "2", "--q", "2", "--format", "json"});
  CHECK(r.code == cli::kOk);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0]["closed_form"].get<double>() == 0.3183098862);

  r = run({"constant", "--kind", "trace", "--n", "3", "--p", "1", "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(json_lines(r.out)[0]["closed_form"].get<double>() == 1.0);

  r = run({"constant", "--kind", "schmidt", "--p", "2", "--q", "-1"});
  CHECK(r.code == cli::kInadmissible);
  CHECK(r.err.find("q >= 1") != std::string::npos);

  r = run({"constant", "--kind", "schmidt", "--p", "2", "--q", "inf", "--format", "csv"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find(",0.5,") != std::string::npos);

  CHECK(run({"constant", "--kind", "sobolev", "--n", "3", "--p", "3"}).code == cli::kInadmissible);
  CHECK(run({"constant", "--kind", "nonsense"}).code == cli::kUsage);
}

TEST_CASE("eigen subcommand") {
  auto r = run({"eigen", "--domain", "square", "--a", "1", "--bc", "dirichlet", "--h", "0.2,0.1,0.05", "--extrapolate",
                "--format", "json"});
  CHECK(r.code == cli::kOk);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines.back()["quantity"] == "lambda_extrapolated");
  CHECK(lines.back()["numerical"].get<double>() == doctest::Approx(19.739).epsilon(5e-3));
  CHECK(lines.back()["status"] == "OK");
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i]["parameters"]["seed"] == "20240611");

  r = run({"eigen", "--domain", "right-iso-triangle", "--a", "1", "--bc", "steklov", "--g", "hypotenuse", "--h",
           "0.1,0.05,0.025", "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(json_lines(r.out).back()["numerical"].get<double>() == doctest::Approx(1.4142).epsilon(1e-3));

  r = run({"eigen", "--domain", "disk", "--a", "1", "--bc", "robin", "--h", "0.1,0.05", "--format", "json"});
  CHECK(r.code == cli::kOk);
  lines = json_lines(r.out);
  CHECK(lines.back()["status"] == "INFO");
  CHECK(lines.back()["numerical"].get<double>() == doctest::Approx(1.577).epsilon(3e-3));
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"eigen", "--domain", "equilateral-triangle", "--bc", "neumann", "--h", "0.2,0.1",
                                      "--format", "csv"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("mesh dump") {
  const auto path = std::filesystem::temp_directory_path() / "sharpc_test_mesh.off";
  const auto r = run({"eigen", "--domain", "square", "--bc", "dirichlet", "--h", "0.5", "--dump-mesh", path.string()});
  CHECK(r.code == cli::kOk);
  std::ifstream in(path);
  std::string magic;
  std::size_t nv = 0, nf = 0;
  in >> magic >> nv >> nf;
  CHECK(magic == "OFF");
  CHECK(nv == 9);
  CHECK(nf == 8);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"eigen", "--domain", "pentagon", "--h", "0.1"}).code == cli::kUsage);
  CHECK(run({"eigen", "--domain", "square", "--bc", "sideways", "--h", "0.1"}).code == cli::kUsage);
  CHECK(run({"eigen", "--domain", "square", "--bc", "dirichlet", "--h", "0.1", "--max-iterations", "1"}).code ==
        cli::kNonConvergence);
  CHECK(run({"verify", "--suite", "nowhere"}).code == cli::kUsage);
  // A tolerance nobody can meet turns records into failures.
  const auto r = run({"verify", "--suite", "trace", "--tol", "1e-300", "--format", "csv"});
  CHECK(r.code == cli::kVerificationFailed);
  CHECK(r.out.find(",FAIL,") != std::string::npos);
}

TEST_CASE("verify suites") {
  auto r = run({"verify", "--suite", "bounds", "--format", "json"});
  CHECK(r.code == cli::kOk);
  for (const auto& j : json_lines(r.out)) CHECK(j["status"] == "OK");

  r = run({"verify", "--suite", "trace", "--jobs", "3", "--format", "csv"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == run({"verify", "--suite", "trace", "--jobs", "1", "--format", "csv"}).out);
}

TEST_CASE("oracle subcommand") {
  auto r = run({"oracle", "--kind", "interval", "--p", "2", "--q", "2", "--grid", "256", "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(json_lines(r.out)[0]["numerical"].get<double>() == doctest::Approx(0.3183).epsilon(1e-3));
  r = run({"oracle", "--kind", "escobar", "--n", "3", "--p", "2", "--a", "10", "--format", "json"});
  CHECK(r.code == cli::kOk);
  CHECK(run({"oracle", "--kind", "interval", "--p", "2", "--q", "0.5"}).code == cli::kInadmissible);
}
