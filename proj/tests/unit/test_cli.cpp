// Copyright 2026 The mdpart Authors
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
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string> &args)
{
  std::ostringstream out;
  std::ostringstream err;
  const int status = mdpart::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

struct ScratchDir {
  fs::path path;
  ScratchDir()
  {
    std::random_device rd;
    path = fs::temp_directory_path() / ("mdpart-cli-" + std::to_string(rd()) + std::to_string(rd()));
  }
  ~ScratchDir()
  {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("count")
{
  CHECK(run({"count", "--r", "3", "--n", "4"}).out == "13\n");
  CHECK(run({"count", "--r", "4", "--n", "1", "--punctual"}).out == "3\n");
  CHECK(run({"count", "--r", "3", "--n", "3", "--table"}).out == "0 1\n1 1\n2 3\n3 6\n");
  CHECK(run({"count", "--r", "3", "--n", "2", "--format", "csv"}).out == "r,n,P,P_punctual\n3,2,3,5\n");
  CHECK(run({"count", "--r", "3", "--n", "2", "--format", "json"}).out ==
        "{\n  \"r\": 3,\n  \"n\": 2,\n  \"punctual\": false,\n  \"count\": \"3\"\n}\n");

  const Result bad = run({"count", "--r", "1", "--n", "4"});
  CHECK(bad.status == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("r >= 2") != std::string::npos);
  CHECK(run({"count", "--r", "3", "--n", "-1"}).status == 2);
}

TEST_CASE("count can list the fixed-point ideals")
{
  CHECK(run({"count", "--r", "2", "--n", "2", "--emit-ideals"}).out == "2\n(z2^2, z1)\n(z2, z1^2)\n");
  const Result j = run({"count", "--r", "2", "--n", "1", "--emit-ideals", "--format", "json"});
  CHECK(j.out.find("\"generators\"") != std::string::npos);
  CHECK(run({"count", "--r", "2", "--n", "1", "--emit-ideals", "--format", "csv"}).status == 2);
}

TEST_CASE("series")
{
  CHECK(run({"series", "partition", "--r", "2", "--order", "6"}).out == "1,1,2,3,5,7,11\n");
  CHECK(run({"series", "punctual", "--r", "3", "--order", "5"}).out == "1,2,5,11,24,48\n");
  CHECK(run({"series", "moduli", "--r", "3", "--genus", "1", "--chi-x", "0", "--chi-s", "7", "--order", "3"}).out ==
        "7,0,0,0\n");
  CHECK(run({"series", "reduced", "--r", "2", "--genus", "5", "--chi-s", "3", "--order", "4"}).out == "3,0,0,0,0\n");
  CHECK(run({"series", "reduced", "--r", "3", "--genus", "2", "--chi-s", "2", "--order", "4"}).out ==
        "2,-4,2,0,0\n");
  CHECK(run({"series", "h", "--r", "3", "--order", "4"}).out == "0,1,2,3,4\n");
  CHECK(run({"series", "c", "--r", "3", "--order", "4"}).out == "0,2,2,3,4\n");
  CHECK(run({"series", "hilbert", "--r", "2", "--chi-x", "24", "--order", "2"}).out == "1,24,324\n");
  CHECK(run({"series", "partition", "--r", "2", "--order", "2", "--format", "csv"}).out ==
        "n,coefficient\n0,1\n1,1\n2,2\n");
  const Result j = run({"series", "partition", "--r", "2", "--order", "1", "--format", "json"});
  CHECK(j.out == "{\n  \"series\": \"partition\",\n  \"r\": 2,\n  \"order\": 1,\n  \"coefficients\": [\n"
                 "    \"1/1\",\n    \"1/1\"\n  ]\n}\n");
  CHECK(run({"series", "partition", "--r", "2"}).out == "1,1,2,3,5,7,11,15,22,30,42,56,77\n");
  CHECK(run({"series", "bogus", "--r", "2"}).status == 2);
  CHECK(run({"series", "moduli", "--r", "3", "--genus", "0", "--kx-zero"}).status == 2);
}

TEST_CASE("boxed")
{
  CHECK(run({"boxed", "pi", "--k", "2", "--l", "2", "--n", "1", "--order", "5"}).out == "1,1,2,1,1,0\n");
  CHECK(run({"boxed", "tilde-pi", "--k", "2", "--l", "2", "--n", "1", "--order", "4"}).out == "1,2,1,1,0\n");
  CHECK(run({"boxed", "pi", "--k", "1", "--l", "1", "--n", "2", "--order", "3", "--format", "csv"}).out ==
        "k,l,n,m,count\n1,1,2,0,1\n1,1,2,1,1\n1,1,2,2,1\n1,1,2,3,0\n");
  const Result v = run({"boxed", "verify", "--k", "2", "--l", "3", "--n", "2", "--order", "20"});
  CHECK(v.status == 0);
  CHECK(v.out == "closed_form: ok\npunctual_relation: ok\nconstant_profile: ok\n");
  CHECK(run({"boxed", "pi", "--k", "0", "--l", "1", "--n", "1"}).status == 2);
}

TEST_CASE("check")
{
  const Result pwp3 = run({"check", "pwp", "--r", "3", "--order", "20"});
  CHECK(pwp3.status == 0);
  CHECK(pwp3.out.find("\"verdict\": \"holds-through-order\"") != std::string::npos);
  CHECK(run({"check", "pwp", "--r", "2", "--order", "30"}).status == 0);

  const Result euler = run({"check", "euler", "--r", "3", "--genus", "0", "--chi-s", "1", "--order", "12"});
  CHECK(euler.status == 1);
  CHECK(euler.out.find("\"symmetric\": false") != std::string::npos);
  CHECK(euler.out.find("\"defect_power\": 2") != std::string::npos);

  const Result sym = run({"check", "euler", "--r", "3", "--genus", "1", "--chi-s", "5", "--kx-zero"});
  CHECK(sym.status == 0);
  CHECK(sym.out.find("\"symmetric\": true") != std::string::npos);

  const Result failed =
      run({"check", "euler", "--r", "3", "--genus", "0", "--order", "12", "--num-deg", "1", "--den-deg", "1"});
  CHECK(failed.status == 1);
  CHECK(failed.out.find("reconstruction-failed") != std::string::npos);

  CHECK(run({"check", "pwp", "--r", "3", "--order", "2", "--format", "csv"}).out ==
        "n,punctual,predicted\n0,1,1\n1,2,2\n2,5,5\n");
  CHECK(run({"check", "euler", "--r", "3", "--format", "csv"}).status == 2);
  CHECK(run({"check", "pwp", "--r", "1"}).status == 2);
}

TEST_CASE("oracle-diff")
{
  const Result r3 = run({"oracle-diff", "--r", "3", "--n-max", "10"});
  CHECK(r3.status == 0);
  CHECK(r3.out == "no differences for r=3, n <= 10\n");
  CHECK(run({"oracle-diff", "--r", "2", "--n-max", "15"}).status == 0);
  CHECK(run({"oracle-diff", "--r", "4", "--n-max", "0"}).status == 0);
  CHECK(run({"oracle-diff", "--r", "2", "--n-max", "1", "--format", "csv"}).out ==
        "r,n,punctual,layered,staircase\n2,0,false,1,1\n2,1,false,1,1\n2,0,true,1,1\n2,1,true,1,1\n");
  CHECK(run({"oracle-diff", "--r", "1", "--n-max", "3"}).status == 2);
}

TEST_CASE("usage errors")
{
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"count", "--r", "3"}).status == 2);
  CHECK(run({"count", "--r", "x", "--n", "3"}).status == 2);
  CHECK(run({"count", "--r", "3", "--n", "3", "--format", "xml"}).status == 2);
  CHECK(run({"count", "--r", "3", "--n", "3", "--threads", "0"}).status == 2);
  const Result help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("oracle-diff") != std::string::npos);
}

TEST_CASE("property: exit codes over random argument vectors")
{
  std::mt19937 rng(2026);
  const std::vector<std::string> commands = {"count", "series", "boxed", "check", "oracle-diff", "nonsense"};
  const std::vector<std::string> kinds = {"partition", "punctual", "h", "c", "hilbert", "pi", "pwp", "euler", "zz"};
  const std::vector<std::string> flags = {"--r", "--n", "--n-max", "--order", "--genus", "--chi-s", "--k", "--l"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> args = {commands[rng() % commands.size()]};
    if (rng() % 2 == 0) {
      args.push_back(kinds[rng() % kinds.size()]);
    }
    const int extra = static_cast<int>(rng() % 5);
    for (int i = 0; i < extra; ++i) {
      args.push_back(flags[rng() % flags.size()]);
      const int v = static_cast<int>(rng() % 9) - 2;
      args.push_back(std::to_string(v));
    }
    if (rng() % 4 == 0) {
      args.push_back("--punctual");
    }
    const Result res = run(args);
    CAPTURE(args);
    CHECK((res.status == 0 || res.status == 1 || res.status == 2));
    if (res.status == 2) {
      CHECK(res.out.empty());
      CHECK_FALSE(res.err.empty());
    } else {
      CHECK_FALSE(res.out.empty());
    }
  }
}

TEST_CASE("property: valid count commands succeed and agree with the table")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 3);
    const int n = static_cast<int>(rng() % 7);
    const bool punctual = rng() % 2 == 0;
    std::vector<std::string> args = {"count", "--r", std::to_string(r), "--n", std::to_string(n)};
    if (punctual) {
      args.push_back("--punctual");
    }
    const Result single = run(args);
    CHECK(single.status == 0);
    args.push_back("--table");
    const Result table = run(args);
    const std::string last = table.out.substr(table.out.rfind(' ', table.out.size() - 2) + 1);
    CHECK(last == single.out);
  }
}

TEST_CASE("output does not depend on threads or the cache")
{
  ScratchDir dir;
  const std::vector<std::vector<std::string>> commands = {
      {"count", "--r", "4", "--n", "8", "--table", "--format", "csv"},
      {"count", "--r", "3", "--n", "4", "--punctual", "--emit-ideals", "--format", "json"},
      {"series", "punctual", "--r", "4", "--order", "7", "--format", "json"},
      {"check", "pwp", "--r", "4", "--order", "7"},
      {"oracle-diff", "--r", "3", "--n-max", "8", "--format", "csv"},
  };
  for (const auto &base : commands) {
    auto one = base;
    one.insert(one.end(), {"--threads", "1"});
    auto many = base;
    many.insert(many.end(), {"--threads", "8"});
    const Result a = run(one);
    CHECK(a.out == run(many).out);
    if (base[0] != "oracle-diff") {
      auto cached = one;
      cached.insert(cached.end(), {"--cache-dir", dir.path.string()});
      CHECK(run(cached).out == a.out);
      CHECK(run(cached).out == a.out);
    }
  }
  CHECK(fs::exists(dir.path / "layered_r4_plain.json"));
}
