// Copyright 2026 The bincorr Authors
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

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bincorr/error.hpp"
#include "bincorr/states.hpp"
#include "cli.hpp"

using namespace bincorr;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bincorr");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "bincorr_cli_test") {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string &name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

Mat3 mat_from_json(const json &j) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = j[r][c].get<double>();
  return m;
}

}  // namespace

TEST_CASE("vector flag parsing") {
  CHECK(cli::parse_vec3("1,0,-0.5") == Vec3{1, 0, -0.5});
  CHECK(cli::parse_vec3(" 0.6 , 0.8 , 0 ") == Vec3{0.6, 0.8, 0});
  CHECK_THROWS_AS(cli::parse_vec3("1,2"), Error);
  CHECK_THROWS_AS(cli::parse_vec3("1,x,2"), Error);
  const auto t = cli::parse_vec3_triple("1,0,0;0,1,0;0,0,1");
  CHECK(t[2] == Vec3{0, 0, 1});
  CHECK_THROWS_AS(cli::parse_vec3_triple("1,0,0;0,1,0"), Error);
}

TEST_CASE("gen and analyze") {
  TempDir dir;
  const auto chen = dir.file("chen.json");
  REQUIRE(run({"gen", "--kind", "chen", "--out", chen}).code == 0);

  const Result r = run({"analyze", chen, "--json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  const Mat3 want = (2.0 / 9.0) * Mat3::from_rows({1, 0, -2}, {0, -3, 0}, {2, 0, 2});
  CHECK(max_abs_diff(mat_from_json(doc["correlation"]["C"]), want) < 1e-12);
  CHECK(doc["correlation"]["rank"] == 3);

  const auto singlet = dir.file("singlet.json");
  REQUIRE(run({"gen", "--kind", "bell-psim", "--out", singlet}).code == 0);
  const json s = json::parse(run({"analyze", singlet, "--json"}).out);
  CHECK(max_abs_diff(mat_from_json(s["correlation"]["C"]), -1.0 * Mat3::identity()) < 1e-12);
  bool entangled = false;
  for (const auto &v : s["verdicts"]) entangled = entangled || v["label"] == "Entangled";
  CHECK(entangled);

  const auto prod = dir.file("prod.json");
  REQUIRE(run({"gen", "--kind", "product", "--seed", "3", "--out", prod}).code == 0);
  const json p = json::parse(run({"analyze", prod, "--json"}).out);
  CHECK(p["correlation"]["rank"] == 0);
  for (const auto &v : p["verdicts"]) CHECK(v["label"] == "Separable");

  const Result table = run({"analyze", chen});
  CHECK(table.code == 0);
  CHECK(table.out.find("rank") != std::string::npos);
}

TEST_CASE("detect exit codes") {
  TempDir dir;
  const auto singlet = dir.file("singlet.json");
  const auto w = dir.file("w.json");
  const auto prod = dir.file("prod.json");
  REQUIRE(run({"gen", "--kind", "bell-psim", "--out", singlet}).code == 0);
  REQUIRE(run({"gen", "--kind", "werner", "--xi", "0.2", "--out", w}).code == 0);
  REQUIRE(run({"gen", "--kind", "product", "--seed", "1", "--out", prod}).code == 0);

  const Result s = run({"detect", singlet, "--exact", "--json"});
  CHECK(s.code == 1);
  CHECK(json::parse(s.out)["protocol"]["measurements_used"].get<int>() <= 3);

  CHECK(run({"detect", w}).code == 2);
  CHECK(run({"detect", w, "--assume-pure"}).code == 1);
  CHECK(run({"detect", prod, "--shots", "100000", "--seed", "7"}).code == 0);
  CHECK(run({"detect", singlet, "--shots", "20000", "--seed", "1"}).code == 1);

  // Probe overrides and their errors.
  CHECK(run({"detect", singlet, "--y", "1,0,0", "--xs", "0,0,1;0,1,0;1,0,0"}).code == 1);
  CHECK(run({"detect", singlet, "--xs", "1,0,0;0,1,0;1,1,0"}).code == cli::kExitInvalid);
  CHECK(run({"detect", singlet, "--y", "1,0"}).code == cli::kExitUsage);
  CHECK(run({"detect", singlet, "--shots", "50"}).code == cli::kExitUsage);
  CHECK(run({"detect", dir.file("missing.json")}).code == cli::kExitUsage);
}

TEST_CASE("detect is deterministic") {
  TempDir dir;
  const auto w = dir.file("w.json");
  REQUIRE(run({"gen", "--kind", "werner", "--xi", "0.6", "--out", w}).code == 0);
  const Result a = run({"detect", w, "--shots", "5000", "--seed", "11", "--json"});
  const Result b = run({"detect", w, "--shots", "5000", "--seed", "11", "--json"});
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("analyze output round-trips through the state format") {
  TempDir dir;
  const auto src = dir.file("sep.json");
  REQUIRE(run({"gen", "--kind", "sep-mixed", "--seed", "5", "--components", "3", "--out", src})
              .code == 0);
  const json first = json::parse(run({"analyze", src, "--json"}).out);

  const auto again = dir.file("again.json");
  write_state_file(again, state_spec_from_json(first["input"]));
  const json second = json::parse(run({"analyze", again, "--json"}).out);

  const Mat3 c1 = mat_from_json(first["correlation"]["C"]);
  const Mat3 c2 = mat_from_json(second["correlation"]["C"]);
  CHECK(max_abs_diff(c1, c2) < 1e-12);
  CHECK(first["verdicts"] == second["verdicts"]);
}

TEST_CASE("sweep-werner") {
  const Result r = run({"sweep-werner", "--from", "0", "--to", "1", "--steps", "11", "--json"});
  REQUIRE(r.code == 0);
  const json rows = json::parse(r.out)["rows"];
  REQUIRE(rows.size() == 11);
  for (const auto &row : rows) {
    const double xi = row["xi"].get<double>();
    CHECK(std::abs(row["covariance"].get<double>() + xi / 4) < 1e-12);
    CHECK(row["ppt_separable"].get<bool>() == (xi < 0.35));
  }

  const Result o =
      run({"sweep-werner", "--from", "0", "--to", "1", "--steps", "5", "--pair", "1,0,0|0,1,0",
           "--json"});
  for (const auto &row : json::parse(o.out)["rows"])
    CHECK(std::abs(row["covariance"].get<double>()) < 1e-12);

  CHECK(run({"sweep-werner", "--from", "0", "--to", "1.5", "--steps", "3"}).code ==
        cli::kExitInvalid);
}

TEST_CASE("gen usage errors") {
  TempDir dir;
  CHECK(run({"gen", "--kind", "werner", "--out", dir.file("w.json")}).code == cli::kExitUsage);
  CHECK(run({"gen", "--kind", "qutrit", "--out", dir.file("q.json")}).code == cli::kExitUsage);
  CHECK(run({"gen", "--kind", "chen"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
  const Result ok = run({"verify", "--trials", "100", "--seed", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "--trials", "50"}).code == cli::kExitUsage);
}
