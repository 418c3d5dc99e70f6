// Copyright 2026 The choimaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "choimaps/cli.hpp"

using choimaps::cli::kExitFinding;
using choimaps::cli::kExitOk;
using choimaps::cli::kExitUsage;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = choimaps::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify-map: positive map exits 0, zero map exits 2") {
  const auto ok = run({"verify-map", "--map", "2,1,1,1", "--samples", "2000", "--seed", "7"});
  REQUIRE(ok.code == kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("counterexample").is_null());
  CHECK(j.at("samples") == 2000);
  CHECK(j.at("min_observed").get<double>() >= -1e-10);

  const auto bad = run({"verify-map", "--map", "0,0,0,0", "--samples", "10"});
  CHECK(bad.code == kExitFinding);
  const auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb.at("min_observed").get<double>() <= -1.0 + 1e-10);
  CHECK(jb.at("counterexample").at("dim") == 4);
}

TEST_CASE("detect: the rho family example") {
  const auto r = run({"detect", "--map", "2,1,0,0", "--family", "rho-beta-gamma", "--beta", "2", "--gamma", "4"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("class") == "PPT_ENTANGLED_DETECTED");
  CHECK(j.at("ppt") == true);
  CHECK(std::abs(j.at("min_eig").get<double>() + 1.0 / 68.0) <= 1e-9);

  const auto csv = run({"detect", "--map", "2,1,0,0", "--family", "rho-beta-gamma", "--beta", "2", "--gamma", "4",
                        "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("state,min_eig,lambda,ppt,class\n", 0) == 0);
}

TEST_CASE("horodecki: orbit sweep in CSV") {
  const auto r = run({"horodecki", "--map", "2,0,0,1", "--b", "0.5", "--orbit", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  std::istringstream is(r.out);
  int rows = 0;
  for (std::string line; std::getline(is, line);) {
    if (rows++ == 0) continue;
    CHECK(line.find("NOT_DETECTED") != std::string::npos);
  }
  CHECK(rows == 65);

  const auto varrho = run({"horodecki", "--map", "2,1,0,0", "--b", "0.3", "--family", "varrho-b"});
  CHECK(varrho.code == kExitOk);
  CHECK(nlohmann::json::parse(varrho.out).size() == 1);
}

TEST_CASE("scan: all formats, deterministic output") {
  const std::vector<std::string> base{"scan", "--map", "2,1,0,0", "--family", "rho-beta-gamma", "--beta-range",
                                      "0:10:0.5", "--gamma", "3"};
  auto with = [&](const std::string& fmt) {
    auto args = base;
    args.insert(args.end(), {"--format", fmt});
    return run(args);
  };
  const auto json = with("json");
  REQUIRE(json.code == kExitOk);
  const auto j = nlohmann::json::parse(json.out);
  REQUIRE(j.size() == 21);
  int detected = 0;
  for (const auto& row : j) detected += row.at("min_eig").get<double>() < -1e-10;
  CHECK(detected == 6);
  CHECK(with("json").out == json.out);

  const auto csv = with("csv");
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("beta,gamma,min_eig,lambda,ppt,class\n", 0) == 0);
  CHECK(with("gnuplot").code == kExitOk);

  const auto sigma = run({"scan", "--map", "2,0,0,1", "--family", "sigma-b", "--b-range", "0.1:0.9:0.2",
                          "--format", "csv"});
  CHECK(sigma.code == kExitOk);
  CHECK(sigma.out.rfind("b,min_eig,lambda,ppt,class\n", 0) == 0);
}

TEST_CASE("scan: empty CSV and conflicting flags are usage errors") {
  CHECK(run({"scan", "--map", "2,1,0,0", "--family", "rho-beta-gamma", "--beta-range", "5:1:1", "--gamma", "3",
             "--format", "csv"})
            .code == kExitUsage);
  CHECK(run({"scan", "--map", "2,1,0,0", "--family", "rho-beta-gamma", "--beta-range", "0:1:1", "--beta", "1",
             "--gamma", "3"})
            .code == kExitUsage);
  CHECK(run({"scan", "--map", "2,1,0,0", "--family", "sigma-b", "--b-range", "0:1:0.5"}).code == kExitUsage);
}

TEST_CASE("ppt-check: JSON embeds the state") {
  const auto r = run({"ppt-check", "--family", "rho-beta-gamma", "--beta", "5", "--gamma", "2"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("ppt") == false);
  CHECK(j.at("min_pt_eig").get<double>() < 0.0);
  CHECK(j.at("state").at("dim") == 16);
  CHECK(j.at("state").at("re").size() == 256);

  const auto s = run({"ppt-check", "--family", "sigma-b", "--b", "0.5", "--format", "csv"});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find(",true,") != std::string::npos);
}

TEST_CASE("usage errors exit 1 with a message") {
  const std::vector<std::vector<std::string>> cases{
      {},
      {"frobnicate"},
      {"detect", "--map", "2,1,0,0", "--family", "rho-beta-gamma", "--beta", "11", "--gamma", "4"},
      {"detect", "--map", "2,1,0", "--family", "rho-beta-gamma", "--beta", "2", "--gamma", "4"},
      {"detect", "--map", "2,1,0,0", "--family", "rho-beta-gamma", "--beta", "2"},
      {"detect", "--map", "2,1,0,0", "--family", "nope", "--beta", "2", "--gamma", "4"},
      {"detect", "--map", "2,1,0,0", "--family", "sigma-b", "--b", "1"},
      {"detect", "--map", "-1,1,0,0", "--family", "sigma-b", "--b", "0.5"},
      {"detect", "--map", "2,1,0,0", "--family", "sigma-b", "--b", "0.5", "--unknown"},
      {"detect", "--map", "2,1,0,0", "--family", "sigma-b", "--b", "0.5", "--tol", "-1"},
      {"verify-map", "--map", "2,1,1,1", "--samples", "0"},
      {"verify-map", "--map", "2,1,1,1", "--format", "csv"},
      {"horodecki", "--map", "2,1,0,0"},
      {"horodecki", "--map", "2,1,0,0", "--b", "0.5", "--format", "gnuplot"},
  };
  for (const auto& args : cases) {
    CAPTURE(args.size());
    const auto r = run(args);
    CHECK(r.code == kExitUsage);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("--help exits 0") {
  const auto r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verify-map") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto dir = std::filesystem::temp_directory_path() / "choimaps_test_cli";
  std::filesystem::create_directories(dir);
  const auto path = dir / "scan.json";
  const std::vector<std::string> args{"scan", "--map", "2,0,1,0", "--family", "rho-beta-gamma", "--beta", "4",
                                      "--gamma-range", "0:6:1"};
  const auto to_stdout = run(args);
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto to_file = run(with_out);
  REQUIRE(to_file.code == kExitOk);
  CHECK(to_file.out.empty());
  CHECK(slurp(path) == to_stdout.out);

  CHECK(run({"detect", "--map", "2,1,0,0", "--family", "sigma-b", "--b", "0.5", "--out",
             (dir / "no" / "such" / "dir.json").string()})
            .code == kExitUsage);
}
