// Copyright 2026 The metasylv Authors. All Rights Reserved.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <set>
#include <string>

#include "metasylv/lattice.hpp"
#include "metasylv/mpermutation.hpp"
#include "metasylv/serialization.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; `input` is fed on stdin.
Run run(const std::string& args, const std::string& input = "",
        const std::string& env = "") {
  const std::string command = "printf '%s' '" + input + "' | " + env + " " +
                              METASYLV_CLI_PATH + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

using Json = nlohmann::ordered_json;

TEST(Cli, CountExamples) {
  EXPECT_EQ(run("count classes --n 5 --m 2").out, "945\n");
  EXPECT_EQ(run("count classes --n 1 --m 7").out, "1\n");
  EXPECT_EQ(run("count ballot-paths --n 3 --m 2").out, "12\n");
  EXPECT_EQ(run("count ballot-paths --n 3 --m 2 --method enumerate").out, "12\n");
  EXPECT_EQ(run("count mperms --n 3 --m 2 --method enumerate").out, "90\n");
  EXPECT_EQ(run("count trees --n 4 --m 2 --method enumerate").out, "105\n");
  EXPECT_EQ(run("count chains --n 3 --m 3 --method enumerate").out, "28\n");
  EXPECT_EQ(run("count classes --n 4 --m 3 --method enumerate").out, "280\n");
}

TEST(Cli, CountSizeLimits) {
  EXPECT_EQ(run("count mperms --n 7 --m 2 --method enumerate").code, 2);
  EXPECT_EQ(run("count mperms --n 7 --m 2 --method enumerate",
                "", "METASYLV_MAX_NM=4")
                .code,
            2);
  EXPECT_EQ(run("count mperms --n 3 --m 2 --method enumerate", "",
                "METASYLV_MAX_NM=4")
                .code,
            2);
  EXPECT_EQ(run("count mperms --n 3 --m 2 --method enumerate --max-nm 6", "",
                "METASYLV_MAX_NM=4")
                .out,
            "90\n");
}

TEST(Cli, BadFlags) {
  EXPECT_EQ(run("count widgets --n 3 --m 2").code, 4);
  EXPECT_EQ(run("count classes --n 0 --m 2").code, 4);
  EXPECT_EQ(run("hasse --n 2 --m 2 --lattice boolean").code, 4);
  EXPECT_EQ(run("hasse --n 2 --m 2 --lattice weak --format svg").code, 4);
  EXPECT_EQ(run("convert --from dyck-chain --to mperm", "[\"ud\"]").code, 4);
  EXPECT_EQ(run("convert --from mperm --to words", "1122").code, 4);
  EXPECT_EQ(run("verify everything --max-nm 2").code, 4);
  EXPECT_EQ(run("frobnicate").code, 4);
}

TEST(Cli, ConvertExamples) {
  const auto tree = run("convert --from mperm --to tree", "133126245465");
  ASSERT_EQ(tree.code, 0);
  EXPECT_EQ(Json::parse(tree.out), Json::parse(R"({"arity":3,"tree":{"label":6,"children":[
      {"label":3,"children":[null,null,{"label":1,"children":[null,null,null]}]},
      {"label":2,"children":[null,null,null]},
      {"label":5,"children":[null,{"label":4,"children":[null,null,null]},null]}]}})"));

  const auto bottom = run("convert --from code --to maxclass --m 2", "{\"entries\":[0,0,0]}");
  ASSERT_EQ(bottom.code, 0);
  EXPECT_EQ(Json::parse(bottom.out)["word"], Json::parse("[1,1,2,2,3,3]"));

  const auto chain = run("convert --from chain --to maxclass", "[[2,1,3],[2,3,1]]");
  ASSERT_EQ(chain.code, 0);
  EXPECT_EQ(Json::parse(chain.out)["word"], Json::parse("[2,2,3,1,1,3]"));

  const auto dyck = run("convert --from maxclass --to dyck-chain", "223113");
  ASSERT_EQ(dyck.code, 0);
  EXPECT_EQ(Json::parse(dyck.out).size(), 2u);
}

TEST(Cli, ConvertBadPayloads) {
  EXPECT_EQ(run("convert --from mperm --to tree", "1123").code, 3);
  EXPECT_EQ(run("convert --from mperm --to tree", "{not json").code, 3);
  EXPECT_EQ(run("convert --from maxclass --to tree", "121332").code, 3);
  EXPECT_EQ(run("convert --from code --to maxclass", "{\"entries\":[0,0,0]}").code, 3);
  EXPECT_EQ(run("convert --from code --to maxclass --m 2", "{\"entries\":[9,0,0]}").code, 3);
  EXPECT_EQ(run("convert --from chain --to maxclass", "[[2,3,1],[2,1,3]]").code, 3);
  EXPECT_EQ(run("convert --from inversions --to maxclass",
                "{\"n\":3,\"m\":2,\"triples\":[[1,2,2]]}")
                .code,
            3);
  EXPECT_EQ(run("convert --from mperm --to tree", "").code, 3);
}

TEST(Cli, ConvertRoundTripsOnAllClasses) {
  const std::vector<std::string> reps = {"mperm", "maxclass", "tree",
                                         "inversions", "code", "chain"};
  for (const auto& sigma : metasylv::all_mpermutations(2, 2)) {
    const auto start = run("convert --from mperm --to maxclass", sigma.to_string());
    ASSERT_EQ(start.code, 0);
    const std::string canonical = Json::parse(start.out).dump();
    for (const auto& a : reps) {
      const auto in_a = run("convert --from maxclass --to " + a, canonical);
      ASSERT_EQ(in_a.code, 0) << a;
      for (const auto& b : reps) {
        const auto in_b = run("convert --from " + a + " --to " + b,
                              Json::parse(in_a.out).dump());
        ASSERT_EQ(in_b.code, 0) << a << "->" << b;
        const auto back = run("convert --from " + b + " --to " + a,
                              Json::parse(in_b.out).dump());
        ASSERT_EQ(back.code, 0) << b << "->" << a;
        EXPECT_EQ(Json::parse(back.out), Json::parse(in_a.out))
            << a << "->" << b << "->" << a;
      }
    }
  }
}

TEST(Cli, HasseExamples) {
  const auto weak = run("hasse --n 2 --m 2 --lattice weak --format json --verify");
  ASSERT_EQ(weak.code, 0);
  const auto wj = Json::parse(weak.out);
  EXPECT_EQ(wj["elements"].size(), 6u);
  EXPECT_EQ(wj["covers"].size(), 6u);

  const auto meta = run("hasse --n 3 --m 2 --lattice metasylvester --format json");
  const auto mj = Json::parse(meta.out);
  EXPECT_EQ(mj["elements"].size(), 15u);
  EXPECT_EQ(mj["covers"].size(), 20u);
  EXPECT_EQ(metasylv::json::lattice_from_json(mj),
            metasylv::metasylvester_diagram(3, 2));

  for (const char* kind : {"weak", "metasylvester", "mtamari"}) {
    const auto one = run(std::string("hasse --n 1 --m 1 --format json --lattice ") + kind);
    ASSERT_EQ(one.code, 0) << kind;
    const auto j = Json::parse(one.out);
    EXPECT_EQ(j["elements"].size(), 1u);
    EXPECT_EQ(j["covers"].size(), 0u);
  }

  const auto dot = run("hasse --n 2 --m 2 --lattice weak --format dot");
  EXPECT_EQ(dot.out, metasylv::to_dot(metasylv::weak_diagram(2, 2)));

  const auto tam = run("hasse --n 3 --m 2 --lattice mtamari --format json --verify");
  ASSERT_EQ(tam.code, 0);
  EXPECT_EQ(Json::parse(tam.out)["elements"].size(), 12u);
}

TEST(Cli, HasseIsDeterministic) {
  const auto a = run("hasse --n 3 --m 2 --lattice mtamari --format json");
  const auto b = run("hasse --n 3 --m 2 --lattice mtamari --format json");
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, HasseSizeLimit) {
  EXPECT_EQ(run("hasse --n 5 --m 2 --lattice weak").code, 2);
  EXPECT_EQ(run("hasse --n 2 --m 2 --lattice weak", "", "METASYLV_MAX_NM=3").code, 2);
}

TEST(Cli, Verify) {
  const auto tiny = run("verify all --max-nm 2");
  EXPECT_EQ(tiny.code, 0);
  EXPECT_NE(tiny.out.find("ALL PASS"), std::string::npos);
  const auto semi = run("verify semi-quotient --max-nm 6");
  EXPECT_EQ(semi.code, 0);
  EXPECT_NE(semi.out.find("meet-counterexample"), std::string::npos);
  EXPECT_NE(semi.out.find("expected negative"), std::string::npos);
  EXPECT_NE(semi.out.find("121332"), std::string::npos);
  EXPECT_EQ(run("verify all --max-nm 13").code, 2);
  // Identical flags give identical output.
  EXPECT_EQ(run("verify intervals --max-nm 4").out,
            run("verify intervals --max-nm 4").out);
}

}  // namespace
