// Copyright 2026 The resfin Authors
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

#include <cstdio>
#include <filesystem>
#include <map>
#include <random>

#include "json.hpp"
#include "resfin/error.hpp"
#include "resfin/io.hpp"
#include "resfin/random_poly.hpp"
#include "test_groups.hpp"

namespace resfin {
namespace {

namespace fs = std::filesystem;
using testing::entry;

const std::vector<std::string> kT{"t"};

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(RESFIN_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string spec_path(const std::string& name) { return std::string(RESFIN_SPECS) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "resfin_cli_io_test";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t parse_offset(const std::string& text) {
  try {
    parse_entry(text, 0, kT);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

TEST(ParseEntry, Examples) {
  EXPECT_TRUE(entry("1").is_one());
  const RatFunc r = entry("(3*t^2 - 1)/(2*t)");
  EXPECT_EQ(r.num().to_string(kT), "3*t^2 - 1");
  EXPECT_EQ(r.den().to_string(kT), "2*t");
  EXPECT_TRUE(parse_entry("t1 - t1", 0, std::vector<std::string>{"t1"}).is_zero());
  EXPECT_EQ(entry(" ( t + 1 ) ^ 2 "), entry("t^2 + 2*t + 1"));
  EXPECT_EQ(entry("2t"), entry("2*t"));
  EXPECT_EQ(entry("-t^2"), entry("-(t^2)"));
  EXPECT_EQ(entry("4", 3), entry("1", 3));
}

TEST(ParseEntry, ErrorsCarryByteOffsets) {
  EXPECT_EQ(parse_offset("t +"), 3u);
  EXPECT_EQ(parse_offset("t + s"), 4u);
  EXPECT_EQ(parse_offset("1/(t - t)"), 1u);
  EXPECT_EQ(parse_offset("(t + 1"), 6u);
  EXPECT_EQ(parse_offset("t ^ 99999"), 4u);
  EXPECT_EQ(parse_offset("t # 1"), 2u);
  EXPECT_EQ(parse_offset(""), 0u);
  EXPECT_THROW(entry("1/t/t"), ParseError);
  try {
    entry("t + s");
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), e.detail() + " at byte 4");
  }
}

TEST(ParseEntry, RenderRoundTrip) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> names{"x1", "x2", "x3"};
  RandomPolyShape shape;
  shape.max_degree = 3;
  for (int k = 0; k < 300; ++k) {
    const BigInt ch = k % 3 == 0 ? 0 : (k % 3 == 1 ? 2 : 7);
    const MultiPoly a = random_nonzero_poly(rng, ch, shape);
    MultiPoly b = random_nonzero_poly(rng, ch, shape);
    while (b.nvars() != a.nvars()) b = random_nonzero_poly(rng, ch, shape);
    const RatFunc r(a, b);
    const std::span<const std::string> vars(names.data(), a.nvars());
    const std::string text = r.to_string(vars);
    EXPECT_EQ(parse_entry(text, ch, vars), r) << text;
  }
}

TEST(ParseWord, Forms) {
  const GroupSpec s = testing::sanov();
  EXPECT_EQ(parse_word(s, "a b^-1 a^2").to_string(s), "a b^-1 a a");
  EXPECT_EQ(parse_word(s, "a^-2").to_string(s), "a^-1 a^-1");
  EXPECT_EQ(parse_word(s, "  ").length(), 0u);
  EXPECT_EQ(parse_word(s, "a^0").length(), 0u);
  EXPECT_THROW(parse_word(s, "c"), UnknownLabel);
  EXPECT_THROW(parse_word(s, "a^x"), ParseError);
}

TEST(SpecFile, FingerprintIgnoresFormatting) {
  const std::string a = R"({"characteristic":0,"variables":["t"],"generators":[{"label":"a","matrix":[["1","t"],["0","1"]]}]})";
  const std::string b = R"({
    "generators": [ {"matrix": [["1", "t"], ["0", "1"]], "label": "a"} ],
    "variables": ["t"],
    "characteristic": 0
  })";
  const std::string c = R"({"characteristic":0,"variables":["t"],"generators":[{"label":"a","matrix":[["1","t+0"],["0","1"]]}]})";
  const std::string d = R"({"characteristic":0,"variables":["t"],"generators":[{"label":"a","matrix":[["1","2*t"],["0","1"]]}]})";
  const auto fa = spec_fingerprint(parse_spec_file(a));
  EXPECT_EQ(fa.size(), 64u);
  EXPECT_EQ(fa, spec_fingerprint(parse_spec_file(b)));
  EXPECT_EQ(fa, spec_fingerprint(parse_spec_file(c)));
  EXPECT_NE(fa, spec_fingerprint(parse_spec_file(d)));
}

TEST(SpecFile, Validation) {
  EXPECT_THROW(parse_spec_file("{"), ParseError);
  EXPECT_THROW(parse_spec_file(R"({"characteristic":0,"variables":[],"generators":[]})"), Error);
  EXPECT_THROW(to_group_spec(parse_spec_file(
                   R"({"characteristic":0,"variables":["t"],"generators":[{"label":"a","matrix":[["1","u"],["0","1"]]}]})")),
               ParseError);
  EXPECT_THROW(load_spec_file("/nonexistent/file.spec"), IoError);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(WitnessFile, RoundTrip) {
  for (const GroupSpec& g : {testing::sanov(), testing::char3(), testing::diagonal()}) {
    for (const BallElement& el : ball_enumerate(g, 3, 1000)) {
      SeparateOptions opt;
      opt.compute_image_order = true;
      const WitnessFile wf{"f00d", separate(g, el.word, opt)};
      const std::string text = serialize_witness(g, wf);
      const WitnessFile back = parse_witness(g, text);
      EXPECT_EQ(back.spec_fingerprint, "f00d");
      EXPECT_TRUE(verify_witness(g, back.record).ok);
      EXPECT_EQ(serialize_witness(g, back), text);
    }
  }
}

TEST(WitnessFile, BigIntegersAreStrings) {
  const GroupSpec s = testing::sanov();
  const WitnessFile wf{"x", separate(s, parse_word(s, "a b"))};
  const auto j = nlohmann::json::parse(serialize_witness(s, wf));
  EXPECT_EQ(j.at("format"), "resfin-witness-1");
  EXPECT_TRUE(j.at("gl_bound").is_string());
  EXPECT_THROW(parse_witness(s, "[]"), InvalidArgument);
  EXPECT_THROW(parse_witness(s, "{\"format\":"), ParseError);
}

TEST(ProfileCsv, Schema) {
  ProfileOptions opt;
  opt.compute_d_reduction = true;
  const std::string csv = profile_csv(farb_profile(testing::cyclic(), 3, opt));
  EXPECT_EQ(csv,
            "n,ball_size,max_gl_bound,max_image_order,max_d_reduction,exhaustive_flag\n"
            "1,2,16,2,2,1\n"
            "2,4,81,3,3,1\n"
            "3,6,81,3,3,1\n");
  opt.compute_d_reduction = false;
  opt.compute_image_order = false;
  const std::string bare = profile_csv(farb_profile(testing::cyclic(), 1, opt));
  EXPECT_EQ(bare.substr(bare.find('\n') + 1), "1,2,16,,,0\n");
}

TEST(ThresholdCsv, Columns) {
  const auto s = read_threshold_csv("n,farb_z\n16,5\n1000,9\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1], (std::pair<std::uint64_t, std::uint64_t>{1000, 9}));
  const auto p = read_threshold_csv(
      "n,ball_size,max_gl_bound,max_image_order,max_d_reduction,exhaustive_flag\n1,2,16,2,2,1\n");
  EXPECT_EQ(p[0].second, 2u);
  EXPECT_THROW(read_threshold_csv("x,y\n1,2\n"), ParseError);
  EXPECT_THROW(read_threshold_csv("n,farb_z\n16,abc\n"), ParseError);
}

TEST(Budgets, Precedence) {
  std::map<std::string, std::string> env{{"RESFIN_PRIME_BOUND", "11"}, {"RESFIN_DEGREE_BOUND", "2"},
                                         {"RESFIN_MAX_ELEMENTS", "77"}};
  auto lookup = [&](const std::string& k) -> std::optional<std::string> {
    auto it = env.find(k);
    if (it == env.end()) return std::nullopt;
    return it->second;
  };
  Budgets cli, spec;
  cli.max_elements = 5;
  spec.max_elements = 6;
  spec.prime_bound = 13;
  const ResolvedBudgets r = resolve_budgets(cli, spec, lookup);
  EXPECT_EQ(r.max_elements, 5u);
  EXPECT_EQ(r.prime_bound, 13u);
  EXPECT_EQ(r.degree_bound, 2u);
  EXPECT_EQ(r.closure_budget, std::uint64_t{1} << 20);
  env["RESFIN_CLOSURE_BUDGET"] = "many";
  EXPECT_THROW(resolve_budgets(cli, spec, lookup), InvalidArgument);
}

TEST(Cli, NumberCommands) {
  EXPECT_EQ(run("dz 12").out, "5\n");
  EXPECT_EQ(run("gauss-count 2 3").out, "2\n");
  EXPECT_EQ(run("farb-z 1 2 6").out, "2\n3\n4\n");
  EXPECT_EQ(run("dz 0").status, 6);
  EXPECT_EQ(run("gauss-count 4 2").status, 6);
  EXPECT_EQ(run("nonsense").status, 2);
}

TEST(Cli, WitnessAndVerify) {
  const fs::path out = scratch("a.witness");
  EXPECT_EQ(run("witness " + spec_path("sanov.spec") + " --word a --out " + out.string()).status, 0);
  EXPECT_EQ(run("verify " + spec_path("sanov.spec") + " " + out.string()).status, 0);
  // Certificate for the wrong group.
  EXPECT_EQ(run("verify " + spec_path("char3.spec") + " " + out.string()).status, 1);

  auto j = nlohmann::json::parse(read_file(out.string()));
  j["field_size"] = "3";
  const fs::path bad = scratch("bad.witness");
  write_file(bad.string(), j.dump(2));
  EXPECT_EQ(run("verify " + spec_path("sanov.spec") + " " + bad.string()).status, 1);
}

TEST(Cli, ErrorExitCodes) {
  EXPECT_EQ(run("witness " + spec_path("sanov.spec") + " --word 'a a^-1'").status, 4);
  EXPECT_EQ(run("witness " + spec_path("sanov.spec") + " --word c").status, 6);
  EXPECT_EQ(run("witness /nonexistent.spec --word a").status, 7);
  const fs::path broken = scratch("broken.spec");
  write_file(broken.string(), "{\"characteristic\": 0,");
  EXPECT_EQ(run("witness " + broken.string() + " --word a").status, 3);
  EXPECT_EQ(run("profile " + spec_path("sanov.spec") + " --radius 4 --max-elements 10").status, 5);
}

TEST(Cli, ErrorRecordOnStderr) {
  const std::string cmd = std::string(RESFIN_CLI) + " witness " + spec_path("sanov.spec") +
                          " --word 'b b^-1' 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string err;
  char buf[1024];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) err.append(buf, n);
  pclose(pipe);
  const auto j = nlohmann::json::parse(err);
  EXPECT_EQ(j.at("error"), "identity_word");
  EXPECT_EQ(j.at("exit_code"), 4);
}

TEST(Cli, Deterministic) {
  const std::string w = "witness " + spec_path("sanov.spec") + " --word 'a b^-1 a' --image-order";
  EXPECT_EQ(run(w).out, run(w).out);
  const std::string p = "profile " + spec_path("char3.spec") + " --radius 3 --d-reduction";
  const RunResult first = run(p);
  EXPECT_EQ(first.status, 0);
  EXPECT_EQ(first.out, run(p).out);
}

}  // namespace
}  // namespace resfin
