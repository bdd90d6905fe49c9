// Copyright 2026 The ctsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "ctsynth/circuit.hpp"
#include "ctsynth/cli.hpp"
#include "oracles.hpp"

namespace {

using namespace ctsynth;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// key=value pairs from the last line starting with `first`.
std::map<std::string, std::string> fields(const std::string& text, const std::string& first) {
  std::map<std::string, std::string> kv;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(first + "=", 0) != 0) continue;
    kv.clear();
    std::istringstream toks(line);
    std::string t;
    while (toks >> t) {
      const auto eq = t.find('=');
      if (eq != std::string::npos) kv[t.substr(0, eq)] = t.substr(eq + 1);
    }
  }
  return kv;
}

std::string circuit_text(const std::string& out) {
  std::istringstream lines(out);
  std::string line, text;
  while (std::getline(lines, line))
    if (line.find('=') == std::string::npos || line.rfind("registers", 0) == 0) text += line + "\n";
  return text;
}

std::string read_text_file(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("ctsynth_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

TEST_F(CliTest, SynthSingleZRotation) {
  const Outcome r = run({"synth-single", "--target", "z-rotation:0.7", "--epsilon", "0.1", "--parity", "even"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rep = fields(r.out, "t_count");
  ASSERT_TRUE(rep.count("distance"));
  const double d = std::stod(rep.at("distance"));
  EXPECT_LT(d, 0.1);
  EXPECT_EQ(std::stoi(rep.at("t_count")) % 2, 0);
  const Circuit c = parse_text(circuit_text(r.out));
  EXPECT_EQ(c.t_count(), std::stoi(rep.at("t_count")));
  Eigen::Matrix2cd rz = Eigen::Matrix2cd::Zero();
  rz(0, 0) = std::polar(1.0, -0.35);
  rz(1, 1) = std::polar(1.0, 0.35);
  EXPECT_NEAR(oracle::hull_diamond(float_simulate(c), rz), d, 1e-9);

  std::ofstream(path("s.qct")) << circuit_text(r.out);
  const Outcome v = run({"verify", "--kind", "single", "--circuit", path("s.qct"), "--target", "z-rotation:0.7",
                     "--epsilon", "0.1"});
  ASSERT_EQ(v.code, 0) << v.err;
  const auto vr = fields(v.out, "distance");
  EXPECT_NEAR(std::stod(vr.at("distance")), d, 1e-9);
  EXPECT_EQ(vr.at("pass"), "1");
}

TEST_F(CliTest, SynthControlledBreakdown) {
  const Outcome r = run({"synth-controlled", "--n", "1", "--epsilon", "0.05", "--seed", "7", "--out", path("c.qct")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto br = fields(r.out, "m");
  const int m = std::stoi(br.at("m")), l = std::stoi(br.at("l")), c = std::stoi(br.at("c"));
  EXPECT_EQ(std::stoi(br.at("formula")), m + 2 * (m - l) + 5 * c + 14);
  EXPECT_EQ(std::stoi(br.at("oracle_t_count")), 0);
  const auto rep = fields(r.out, "t_count");
  const double d = std::stod(rep.at("distance"));
  EXPECT_LT(d, 0.05);
  const Circuit circ = parse_text(read_text_file(path("c.qct")));
  EXPECT_EQ(circ.registers().n_clean, 0);
  EXPECT_EQ(circ.t_count(), std::stoi(rep.at("t_count")));

  const Outcome v = run({"verify", "--kind", "controlled", "--circuit", path("c.qct"), "--seed", "7"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_NEAR(std::stod(fields(v.out, "distance").at("distance")), d, 1e-9);
}

TEST_F(CliTest, SynthControlledAncillaVerifies) {
  const Outcome r = run({"synth-controlled", "--n", "2", "--epsilon", "0.1", "--seed", "3", "--mode", "ancilla",
                     "--out", path("a.qct")});
  ASSERT_EQ(r.code, 0) << r.err;
  const double d = std::stod(fields(r.out, "t_count").at("distance"));
  const Outcome v = run({"verify", "--kind", "controlled", "--circuit", path("a.qct"), "--seed", "3"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_NEAR(std::stod(fields(v.out, "distance").at("distance")), d, 1e-9);
}

TEST_F(CliTest, Su4AndU2Verify) {
  const Outcome s = run({"synth-su4", "--target", "haar:5", "--epsilon", "0.2", "--out", path("u.qct")});
  ASSERT_EQ(s.code, 0) << s.err;
  const double d = std::stod(fields(s.out, "t_count").at("distance"));
  EXPECT_LT(d, 0.2);
  const auto st = fields(s.out, "stage1");
  for (const char* k : {"stage1", "stage2", "stage3", "stage4"}) EXPECT_LT(std::stod(st.at(k)), 0.05);
  const Outcome v = run({"verify", "--kind", "su4", "--circuit", path("u.qct"), "--target", "haar:5"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_NEAR(std::stod(fields(v.out, "distance").at("distance")), d, 1e-9);

  const Outcome u = run({"synth-controlled-u2", "--n", "1", "--epsilon", "0.1", "--seed", "4", "--samples", "20",
                     "--out", path("w.qct")});
  ASSERT_EQ(u.code, 0) << u.err;
  const double du = std::stod(fields(u.out, "t_count").at("distance"));
  EXPECT_LT(du, 0.1);
  const Outcome vu = run({"verify", "--kind", "controlled-u2", "--circuit", path("w.qct"), "--seed", "4", "--samples",
                      "20"});
  ASSERT_EQ(vu.code, 0) << vu.err;
  EXPECT_NEAR(std::stod(fields(vu.out, "distance").at("distance")), du, 1e-9);
}

TEST_F(CliTest, RoundTripOfEmittedCircuits) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"synth-single", "--target", "haar:2", "--epsilon", "0.1"},
        std::vector<std::string>{"synth-controlled", "--n", "2", "--epsilon", "0.1", "--mode", "ancilla"},
        std::vector<std::string>{"synth-su4", "--target", "haar:9", "--epsilon", "0.2"}}) {
    const Outcome r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string text = circuit_text(r.out);
    const Circuit c = parse_text(text);
    EXPECT_EQ(to_text(c), text);
    EXPECT_EQ(parse_text(to_text(c)).gates(), c.gates());
  }
}

TEST_F(CliTest, AuditCliffordOnly) {
  std::ofstream(path("cl.qct")) << "registers A=1 B=1 C=0 D=0\nH q0\nCNOT q0 q1\nS q1\n";
  const Outcome r = run({"audit", "--circuit", path("cl.qct")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("t_count=0"), std::string::npos);
  EXPECT_NE(r.out.find("sde=0"), std::string::npos);
  EXPECT_NE(r.out.find("max_block_sde=na"), std::string::npos);

  std::ofstream(path("bd.qct")) << "registers A=1 B=1 C=0 D=0\nCNOT q0 q1\nS q1\nH q1\nZ q0\n";
  const Outcome b = run({"audit", "--circuit", path("bd.qct")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.out, "t_count=0\tsde=0\tmax_block_sde=0\tchain_holds=1\n");
}

TEST_F(CliTest, AuditTChain) {
  std::ofstream(path("t.qct")) << "registers A=0 B=1 C=0 D=0\nH q0\nT q0\nH q0\nT q0\nH q0\n";
  const Outcome r = run({"audit", "--circuit", path("t.qct")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("t_count=2\tsde=2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("chain_holds=1"), std::string::npos);
}

TEST_F(CliTest, Determinism) {
  const std::vector<std::string> args{"synth-controlled", "--n", "1", "--epsilon", "0.1", "--seed", "11"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(CliTest, ExitCodes) {
  Outcome r = run({"no-such-command"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error="), std::string::npos);
  r = run({"synth-single", "--epsilon", "abc"});
  EXPECT_EQ(r.code, 2);
  r = run({"synth-single", "--target", "z-rotation:xyz"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error="), std::string::npos);
  std::ofstream(path("bad.qct")) << "registers A=0 B=1 C=0 D=0\nFOO q0\n";
  r = run({"audit", "--circuit", path("bad.qct")});
  EXPECT_EQ(r.code, 2);
  r = run({"synth-single", "--target", "haar:1", "--epsilon", "0.01", "--m-cap", "4"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("error=", 0), 0u);
  r = run({"synth-controlled", "--n", "3", "--epsilon", "0.01", "--m-cap", "2"});
  EXPECT_EQ(r.code, 3);
  r = run({"synth-controlled", "--n", "2", "--mode", "ancilla-free"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error=InconsistentInput", 0), 0u);
}

TEST_F(CliTest, DefaultModeFollowsControlCount) {
  const Outcome r = run({"synth-controlled", "--n", "3", "--epsilon", "0.15", "--out", path("d.qct")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GT(parse_text(read_text_file(path("d.qct"))).registers().n_clean, 0);
}

TEST_F(CliTest, JsonTargetFile) {
  std::ofstream(path("u.json")) << R"({"matrices": [[[0, [0, -1]], [[0, -1], 0]], [[1, 0], [0, 1]]]})";
  Outcome r = run({"synth-controlled", "--n", "1", "--target", path("u.json"), "--epsilon", "0.1", "--out", path("j.qct")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::stoi(fields(r.out, "t_count").at("t_count")), parse_text(read_text_file(path("j.qct"))).t_count());
  std::ofstream(path("nu.json")) << R"({"matrices": [[[1, 1], [0, 1]], [[1, 0], [0, 1]]]})";
  r = run({"synth-controlled", "--n", "1", "--target", path("nu.json")});
  EXPECT_NE(r.code, 0);
}

}  // namespace
