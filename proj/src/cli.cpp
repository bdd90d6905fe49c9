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

#include "ctsynth/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctsynth/apps.hpp"
#include "ctsynth/ctrl.hpp"
#include "ctsynth/errors.hpp"
#include "ctsynth/lbound.hpp"
#include "ctsynth/random.hpp"
#include "ctsynth/synth1q.hpp"

namespace ctsynth {

namespace {

using cd = std::complex<double>;

enum class Kind { Single, Su2Blocks, U2Blocks, Su4 };

struct Options {
  std::string target = "haar";
  double epsilon = 0.1;
  int n = 1;
  std::uint64_t seed = 1;
  int m_cap = 26;
  std::string mode;
  std::string parity = "even";
  std::string out_path;
  std::string format = "qct";
  std::string circuit_path;
  std::string kind = "single";
  int count = 20;
  int samples = 50;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Eigen::MatrixXcd json_matrix(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const auto dim = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) throw ParseError("matrix must be square");
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = cd(e[0].get<double>(), e[1].get<double>());
      } else {
        throw ParseError("entry must be a number or [re, im]");
      }
    }
  }
  return m;
}

Eigen::Matrix2cd rz(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

/// Resolves --target into `count` matrices of the dimension `kind` needs.
std::vector<Eigen::MatrixXcd> load_targets(const std::string& spec, Kind kind, int count, std::uint64_t seed) {
  const int dim = kind == Kind::Su4 ? 4 : 2;
  std::vector<Eigen::MatrixXcd> out;
  if (spec.rfind("z-rotation:", 0) == 0) {
    if (dim != 2) throw ParseError("z-rotation targets are single-qubit");
    double theta = 0;
    try {
      theta = std::stod(spec.substr(11));
    } catch (const std::exception&) {
      throw ParseError("bad angle in " + spec);
    }
    for (int i = 0; i < count; ++i) out.emplace_back(rz(theta * (i + 1)));
    return out;
  }
  if (spec == "haar" || spec.rfind("haar:", 0) == 0) {
    if (spec.size() > 5) {
      try {
        seed = std::stoull(spec.substr(5));
      } catch (const std::exception&) {
        throw ParseError("bad seed in " + spec);
      }
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
      switch (kind) {
        case Kind::Su4: out.emplace_back(haar_su4(rng)); break;
        case Kind::U2Blocks: out.emplace_back(haar_u2(rng)); break;
        default: out.emplace_back(haar_su2(rng)); break;
      }
    }
    return out;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(spec));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad target file: ") + e.what());
  }
  const auto& list = j.contains("matrices") ? j["matrices"] : j;
  if (!list.is_array()) throw ParseError("target file needs a \"matrices\" array");
  for (const auto& mj : list) out.push_back(json_matrix(mj));
  if (static_cast<int>(out.size()) != count) throw ParseError("expected " + std::to_string(count) + " matrices");
  for (const auto& m : out) {
    if (m.rows() != dim) throw DimensionMismatch("target matrix has wrong dimension");
    if ((m.adjoint() * m - Eigen::MatrixXcd::Identity(dim, dim)).norm() > 1e-10)
      throw InconsistentInput("target matrix is not unitary");
  }
  return out;
}

std::vector<Eigen::Matrix2cd> as_2x2(const std::vector<Eigen::MatrixXcd>& v) {
  return {v.begin(), v.end()};
}

void check_epsilon(double eps) {
  if (!(eps > 0 && eps < 1)) throw InconsistentInput("epsilon must lie in (0, 1)");
}

void emit_circuit(const Circuit& c, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << to_text(c);
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw ParseError("cannot write " + o.out_path);
  f << to_text(c);
}

void report(std::ostream& out, int t_count, double eps, double distance, double bound) {
  out << "t_count=" << t_count << " epsilon=" << eps << " distance=" << distance << " formula_bound=" << bound
      << '\n';
}

/// Unitary of the circuit restricted to ancillas in |0⟩, read back on the
/// same sector.
Eigen::MatrixXcd sector_unitary(const Circuit& c) {
  const int n = c.registers().n_control;
  const int low = c.num_qubits() - (n + 1);
  const Eigen::Index dim = Eigen::Index{2} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    SparseState<cd> in;
    in[static_cast<std::uint64_t>(x) << low] = 1.0;
    for (const auto& [key, amp] : simulate_float(c, std::move(in))) {
      if ((key & ((std::uint64_t{1} << low) - 1)) == 0) m(static_cast<Eigen::Index>(key >> low), x) += amp;
    }
  }
  return m;
}

double block_distance(const Eigen::MatrixXcd& m, const std::vector<Eigen::Matrix2cd>& blocks) {
  double worst = 0;
  const Eigen::Index dim = m.rows();
  Eigen::MatrixXcd mask = m;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto o = static_cast<Eigen::Index>(2 * i);
    mask.block(o, o, 2, 2).setZero();
    worst = std::max(worst, distance_2x2(m.block(o, o, 2, 2), blocks[i]));
  }
  if (mask.norm() > 1e-9 || (m.adjoint() * m - Eigen::MatrixXcd::Identity(dim, dim)).norm() > 1e-9) return 1.0;
  return worst;
}

int cmd_single(const Options& o, std::ostream& out) {
  check_epsilon(o.epsilon);
  const Eigen::Matrix2cd target = load_targets(o.target, Kind::Single, 1, o.seed)[0];
  const Parity parity = o.parity == "even" ? Parity::Even : Parity::Any;
  const SynthResult r = approx_su2({target, o.epsilon, parity, o.m_cap});
  Circuit c(Registers{0, 1, 0, 0});
  for (GateKind g : form_gates(r.form)) c.add(g, 0);
  c.add_phase(r.form.phase_exp);
  emit_circuit(c, o, out);
  out << "form=" << to_string(r.form) << '\n';
  report(out, c.t_count(), o.epsilon, diamond_distance_unitary(float_simulate(c), target),
         3 * std::log2(1 / o.epsilon));
  return 0;
}

int cmd_controlled(const Options& o, std::ostream& out) {
  check_epsilon(o.epsilon);
  if (o.n < 1) throw InconsistentInput("--n must be at least 1");
  const auto blocks = as_2x2(load_targets(o.target, Kind::Su2Blocks, 1 << o.n, o.seed));
  const std::string m = o.mode.empty() ? (o.n == 1 ? "ancilla-free" : "ancilla") : o.mode;
  const CtrlMode mode = m == "ancilla" ? CtrlMode::Ancilla : CtrlMode::AncillaFree;
  const CompiledControlled r = synth_controlled_su2(blocks, o.epsilon, mode, o.m_cap);
  emit_circuit(r.circuit, o, out);
  const GTable& g = r.table;
  out << "m=" << g.m << " l=" << g.l << " c=" << g.c << " b=" << g.b() << " gadget_t_count=" << r.gadget_t_count
      << " oracle_t_count=" << r.oracle_t_count << " formula=" << r.formula << '\n';
  report(out, r.circuit.t_count(), o.epsilon, *std::max_element(r.distances.begin(), r.distances.end()),
         r.formula);
  return 0;
}

int cmd_controlled_u2(const Options& o, std::ostream& out) {
  check_epsilon(o.epsilon);
  if (o.n < 1) throw InconsistentInput("--n must be at least 1");
  const auto blocks = as_2x2(load_targets(o.target, Kind::U2Blocks, 1 << o.n, o.seed));
  const U2Result r = synth_controlled_u2(blocks, o.epsilon, o.m_cap);
  emit_circuit(r.circuit, o, out);
  const auto d = u2_trace_distances(r.circuit, blocks, o.samples, o.seed);
  report(out, r.circuit.t_count(), o.epsilon, *std::max_element(d.begin(), d.end()),
         r.su2_part.formula + r.phase_part.formula);
  return 0;
}

int cmd_su4(const Options& o, std::ostream& out) {
  check_epsilon(o.epsilon);
  const Eigen::Matrix4cd u = load_targets(o.target, Kind::Su4, 1, o.seed)[0];
  const Su4Result r = synth_su4(u, o.epsilon, o.m_cap);
  emit_circuit(r.circuit, o, out);
  out << "stage1=" << r.stage[0] << " stage2=" << r.stage[1] << " stage3=" << r.stage[2]
      << " stage4=" << r.stage[3] << '\n';
  report(out, r.t_count, o.epsilon, r.distance, 9 * std::log2(1 / o.epsilon));
  return 0;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const Circuit c = parse_text(read_file(o.circuit_path));
  try {
    const LowerBoundReport r = lower_bound_check(c);
    out << "t_count=" << r.t_count << "\tsde=" << r.sde_full << "\tmax_block_sde=" << r.max_block_sde
        << "\tchain_holds=" << (r.chain_holds() ? 1 : 0) << '\n';
  } catch (const NotBlockDiagonal&) {
    if (c.registers().n_clean || c.registers().n_dirty) throw;
    const int sde = sde_channel(channel_rep(exact_simulate(c)));
    out << "t_count=" << c.t_count() << "\tsde=" << sde << "\tmax_block_sde=na\tchain_holds="
        << (c.t_count() >= sde ? 1 : 0) << '\n';
  }
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  check_epsilon(o.epsilon);
  const auto targets = load_targets(o.target, Kind::Single, o.count, o.seed);
  std::vector<int> counts;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const SynthResult r = approx_su2({targets[i], o.epsilon, Parity::Even, o.m_cap});
    counts.push_back(r.t_count);
    out << "target=" << i << " t_count=" << r.t_count << " distance=" << r.achieved_distance << '\n';
  }
  std::sort(counts.begin(), counts.end());
  const std::size_t h = counts.size() / 2;
  const double median = counts.size() % 2 ? counts[h] : 0.5 * (counts[h - 1] + counts[h]);
  out << "median_t_count=" << median << " epsilon=" << o.epsilon << " bound=" << 3 * std::log2(1 / o.epsilon) + 12
      << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Circuit c = parse_text(read_file(o.circuit_path));
  double d = 1.0;
  if (o.kind == "single" || o.kind == "su4") {
    const Kind k = o.kind == "su4" ? Kind::Su4 : Kind::Single;
    const Eigen::MatrixXcd u = load_targets(o.target, k, 1, o.seed)[0];
    if (c.registers().n_clean || c.registers().n_dirty || (1 << c.num_qubits()) != u.rows())
      throw DimensionMismatch("circuit does not match target dimension");
    d = diamond_distance_unitary(float_simulate(c), u);
  } else if (o.kind == "controlled") {
    const int n = c.registers().n_control;
    const auto blocks = as_2x2(load_targets(o.target, Kind::Su2Blocks, 1 << n, o.seed));
    d = block_distance(sector_unitary(c), blocks);
  } else {
    const int n = c.registers().n_control;
    const auto blocks = as_2x2(load_targets(o.target, Kind::U2Blocks, 1 << n, o.seed));
    const auto v = u2_trace_distances(c, blocks, o.samples, o.seed);
    d = *std::max_element(v.begin(), v.end());
  }
  out << "distance=" << d;
  if (o.epsilon > 0) out << " pass=" << (d < o.epsilon ? 1 : 0);
  out << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford+T synthesis toolkit", "ctsynth"};
  app.require_subcommand(1);
  Options o;
  const auto modes = CLI::IsMember({"ancilla", "ancilla-free"});
  const auto formats = CLI::IsMember({"qct"});
  auto common = [&](CLI::App* s) {
    s->add_option("--epsilon", o.epsilon, "target diamond distance");
    s->add_option("--seed", o.seed, "seed for haar targets and sampling");
    s->add_option("--m-cap", o.m_cap, "largest T-count searched");
    s->add_option("--target", o.target, "z-rotation:<theta>, haar[:<seed>], or a JSON matrix file");
  };
  auto output = [&](CLI::App* s) {
    s->add_option("--out", o.out_path, "write the circuit here instead of stdout");
    s->add_option("--format", o.format, "circuit format")->check(formats);
  };
  auto* single = app.add_subcommand("synth-single", "approximate one SU(2) target");
  common(single);
  output(single);
  single->add_option("--parity", o.parity)->check(CLI::IsMember({"even", "any"}));
  auto* ctrl = app.add_subcommand("synth-controlled", "compile a multi-controlled SU(2) gate");
  common(ctrl);
  output(ctrl);
  ctrl->add_option("--n", o.n, "control qubits");
  ctrl->add_option("--mode", o.mode, "ancilla-free for n = 1, ancilla otherwise by default")->check(modes);
  auto* u2 = app.add_subcommand("synth-controlled-u2", "compile a multi-controlled U(2) gate");
  common(u2);
  output(u2);
  u2->add_option("--n", o.n, "control qubits");
  u2->add_option("--samples", o.samples, "random inputs for the trace-distance check");
  auto* su4 = app.add_subcommand("synth-su4", "approximate a two-qubit SU(4) target");
  common(su4);
  output(su4);
  auto* audit = app.add_subcommand("audit", "T-count lower-bound report of a circuit file");
  audit->add_option("--circuit", o.circuit_path)->required();
  auto* bench = app.add_subcommand("bench", "minimal even T-counts over random targets");
  common(bench);
  bench->add_option("--count", o.count);
  auto* verify = app.add_subcommand("verify", "recompute the distance of a circuit file to a target");
  common(verify);
  o.epsilon = -1;
  verify->add_option("--circuit", o.circuit_path)->required();
  verify->add_option("--kind", o.kind)->check(CLI::IsMember({"single", "controlled", "controlled-u2", "su4"}));
  verify->add_option("--samples", o.samples);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error=ParseError\n" << e.what() << '\n';
    return 2;
  }
  if (!verify->parsed() && o.epsilon < 0) o.epsilon = 0.1;

  out << std::setprecision(12);
  try {
    if (single->parsed()) return cmd_single(o, out);
    if (ctrl->parsed()) return cmd_controlled(o, out);
    if (u2->parsed()) return cmd_controlled_u2(o, out);
    if (su4->parsed()) return cmd_su4(o, out);
    if (audit->parsed()) return cmd_audit(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
    return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "error=" << e.code() << '\n' << e.what() << '\n';
    return 2;
  } catch (const EpsilonTooSmall& e) {
    err << "error=" << e.code() << '\n' << e.what() << '\n';
    return 3;
  } catch (const CapExceeded& e) {
    err << "error=" << e.code() << '\n' << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error=" << e.code() << '\n' << e.what() << '\n';
    return 1;
  }
}

}  // namespace ctsynth
