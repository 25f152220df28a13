// Copyright 2026 The meo Authors
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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <json.hpp>

#include "meo/cli.hpp"
#include "meo/config.hpp"

using namespace meo;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args)
{
  args.insert(args.begin(), "meo");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("meo subcommand")
{
  auto r = call({"meo", "PSL(3,2)"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "8 (exact)\n");
  r = call({"meo", "PSp(6,3)"});
  CHECK(r.out == "40 (upper bound)\n");
  r = call({"meo", "--json", "HS"});
  auto j = json::parse(r.out);
  CHECK(j["meo"] == "30");
  CHECK(j["exactness"] == "exact");
  CHECK(call({"meo", "Sym(10)"}).out == "30 (exact)\n");
  CHECK(call({"meo", "PGL(2,7)"}).out == "8 (exact)\n");
}

TEST_CASE("mindeg, landau and spectrum")
{
  CHECK(call({"mindeg", "2B2(8)"}).out == "65\n");
  CHECK(call({"landau", "7"}).out == "12\n");
  auto j = json::parse(call({"landau", "--json", "30"}).out);
  CHECK(j["g"] == "4620");
  CHECK(call({"spectrum", "PSL(2,7)"}).out == "1 2 3 4 7\n");
  auto s = json::parse(call({"spectrum", "--json", "M24"}).out);
  CHECK(s["source"] == "embedded");
  CHECK(s["meo"] == "23");
}

TEST_CASE("exit codes")
{
  CHECK(call({"meo", "Foo(3)"}).code == kExitParse);
  CHECK(call({"meo", "PSL(2,7"}).code == kExitParse);
  CHECK(call({"bogus"}).code == kExitParse);
  CHECK(call({}).code == kExitParse);
  CHECK(call({"meo", "PSL(2,6)"}).code == kExitUnsupported);
  CHECK(call({"mindeg", "PGL(2,7)"}).code == kExitUnsupported);
  CHECK(call({"--cap", "100", "spectrum", "PSL(3,3)"}).code == kExitCap);
  CHECK(call({"classify"}).code == kExitParse);
  CHECK(call({"classify", "--degree", "7", "--max-degree", "9"}).code == kExitParse);
  CHECK(call({"verify", "nothing"}).code == kExitParse);
  auto r = call({"meo", "Foo(3)"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("classify output formats")
{
  auto r = call({"classify", "--degree", "60"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("sd-diagonal") != std::string::npos);
  auto j = json::parse(call({"classify", "--json", "--degree", "60"}).out);
  REQUIRE(j.contains("candidates"));
  bool sd = false;
  for (const auto &c : j["candidates"]) {
    for (const char *k : {"degree", "socle", "params", "action", "ell", "meo", "exactness",
                          "source_table"})
      CHECK(c.contains(k));
    sd = sd || c["action"] == "sd-diagonal";
  }
  CHECK(sd);
  auto csv = call({"classify", "--csv", "--degree", "10"}).out;
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "degree,socle,params,action,ell,meo,exactness,source_table");
  std::string row;
  int n = 0;
  while (std::getline(lines, row))
    if (!row.empty()) {
      ++n;
      if (row.find(',') != std::string::npos && row.find("m=") != std::string::npos)
        CHECK(row.find('"') != std::string::npos);  // params contain commas and are quoted
    }
  CHECK(n > 0);
}

TEST_CASE("verify suites")
{
  Config c;
  c.landau_bound_max = 50;
  c.unipotent_dmax = 8;
  c.tori_dmax = 6;
  c.unitary_dmax = 6;
  c.divisibility_mmax = 6;
  c.partition_mmax = 24;
  c.catalog_dmax = 4;
  c.catalog_mmax = 3;
  c.catalog_qmax = 8;
  c.catalog_altmax = 10;
  const std::string path = "test_cli_box.cfg";
  {
    std::ofstream f(path);
    write_config(f, c);
  }
  auto r = call({"verify", "lemmas", "--box", path});
  CHECK(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["ok"] == true);
  // The upper Landau bound fails at m = 3, reported as a violation.
  auto l = call({"verify", "landau", "--box", path});
  CHECK(l.code == kExitViolation);
  CHECK(json::parse(l.out)["ok"] == false);
  std::remove(path.c_str());
}

TEST_CASE("config round trip")
{
  Config c;
  c.cap = 1234;
  c.tori_q = {2, 3};
  std::stringstream ss;
  write_config(ss, c);
  Config d = parse_config(ss);
  CHECK(d.cap == 1234);
  CHECK(d.tori_q == std::vector<std::uint32_t>{2, 3});
  std::istringstream bad("cap = x\n");
  CHECK_THROWS(parse_config(bad));
  std::istringstream unknown("nonsense = 3\n");
  CHECK_THROWS(parse_config(unknown));
}

TEST_CASE("installed binary")
{
  const char *bin = std::getenv("MEO_CLI");
  if (!bin)
    return;
  const std::string cmd = std::string(bin) + " landau 10 > test_cli_out.txt";
  CHECK(std::system(cmd.c_str()) == 0);
  std::ifstream in("test_cli_out.txt");
  std::string line;
  std::getline(in, line);
  CHECK(line == "30");
  std::remove("test_cli_out.txt");
  const std::string bad = std::string(bin) + " meo 'Foo(3)' 2> /dev/null";
  int st = std::system(bad.c_str());
  CHECK(WEXITSTATUS(st) == kExitParse);
}
