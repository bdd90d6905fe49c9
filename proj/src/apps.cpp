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

#include "ctsynth/apps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <Eigen/Eigenvalues>

#include "ctsynth/errors.hpp"

namespace ctsynth {

namespace {

using cd = std::complex<double>;

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

Eigen::Matrix2cd xyz(double tx, double ty, double tz) {
  return pauli1_exp('X', tx) * pauli1_exp('Y', ty) * pauli1_exp('Z', tz);
}

Eigen::Matrix4cd block_matrix(const CompiledControlled& c) {
  return ExactMatrix::direct_sum(c.branches).to_complex();
}

int log2_blocks(std::size_t v) {
  int n = 0;
  while ((std::size_t{1} << n) < v) ++n;
  if ((std::size_t{1} << n) != v || n < 1) throw InconsistentInput("block count must be 2^n with n ≥ 1");
  return n;
}

}  // namespace

SplitHalfResult split_half(const Eigen::Matrix2cd& target, double epsilon, int m_cap) {
  SplitHalfResult r;
  r.whole = approx_su2({target, epsilon, Parity::Even, m_cap});
  const NormalForm& w = r.whole.form;
  const int m = w.t_count(), half = m / 2;
  r.v1.f = w.f;
  r.v1.syllables.assign(w.syllables.begin(), w.syllables.begin() + half);
  ExactMatrix rest = clifford_table()[static_cast<std::size_t>(w.c)].matrix;
  for (int j = m - 1; j >= half; --j) rest = syllable_matrix(w.syllables[static_cast<std::size_t>(j)]) * rest;
  r.v2 = normal_form_of(rest.adjoint());
  r.v2.phase_exp = 0;
  r.v1.phase_exp = choose_phase_matrix(target, evaluate_float(r.v1) * evaluate_float(r.v2).adjoint());
  r.compiled = compile_forms({r.v1, r.v2}, CtrlMode::AncillaFree);
  r.v1m = r.compiled.branches[0].to_complex();
  r.v2m = r.compiled.branches[1].to_complex();
  r.distance = distance_2x2(r.v1m * r.v2m.adjoint(), target);
  return r;
}

Su4Result synth_su4(const Eigen::Matrix4cd& u_in, double epsilon, int m_cap) {
  if ((u_in.adjoint() * u_in - Eigen::Matrix4cd::Identity()).norm() > 1e-9)
    throw NotSpecialUnitary("synth_su4: input is not unitary");
  const Eigen::Matrix4cd u = u_in / std::pow(u_in.determinant(), 0.25);
  const double e4 = epsilon / 4;
  const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd h, s;
  h << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
  s << 1, 0, 0, cd(0, 1);

  Su4Result res;
  const FirstSplit fs = first_split(u);
  const auto& t = fs.theta;
  const Eigen::Matrix2cd a = xyz(t[2], t[3], t[4]), b = xyz(-t[2], -t[3], -t[4]);
  res.v12 = split_half(a * b.adjoint(), e4, m_cap);
  const Eigen::Matrix2cd& v1 = res.v12.v1m;

  // Rescale so the image fixes axis 6 with +1 rather than −1.
  Eigen::Matrix4cd w = kron(id2, v1.adjoint() * a) * fs.u1;
  w /= std::pow(w.determinant(), 0.25);
  for (int k = 0; k < 4 && so6_rep(w)(5, 5) < 0; ++k) w *= cd(0, 1);
  const SecondSplit ss = second_split(w);
  const auto& t2 = ss.theta;

  res.plan.u1 = fs.u1;
  res.plan.u2 = ss.u2;
  for (int i = 0; i < 5; ++i) res.plan.theta[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)];
  for (int i = 0; i < 4; ++i) res.plan.theta[static_cast<std::size_t>(5 + i)] = t2[static_cast<std::size_t>(i)];

  res.v3 = approx_su2({xyz(t[0], t[1], 0) * pauli1_exp('Z', t2[0]), e4, Parity::Any, m_cap});
  const Eigen::Matrix2cd a2 = xyz(t2[1], t2[2], t2[3]), b2 = xyz(-t2[1], -t2[2], -t2[3]);
  res.v45 = split_half(a2 * b2.adjoint(), e4, m_cap);
  const Eigen::Matrix2cd& v4 = res.v45.v1m;

  const Eigen::Matrix4cd hi = kron(h, id2);
  const Eigen::Matrix4cd bw = kron(id2, v4.adjoint() * a2) * hi * ss.u2 * hi;
  if (bw.block<2, 2>(0, 2).norm() + bw.block<2, 2>(2, 0).norm() > 1e-8)
    throw InconsistentInput("synth_su4: residual is not block-diagonal");
  const cd ph = std::sqrt(bw.block<2, 2>(0, 0).determinant());
  res.v67 = synth_controlled_su2({bw.block<2, 2>(0, 0) / ph, bw.block<2, 2>(2, 2) / ph}, e4,
                                 CtrlMode::AncillaFree, m_cap);

  Circuit c(Registers{1, 1, 0, 0});
  c.h(0);
  c.append(res.v67.circuit);
  c.h(0);
  c.sdg(0);
  c.h(0);
  c.append(res.v45.compiled.circuit);
  c.h(0);
  c.s(0);
  c.append(res.v12.compiled.circuit);
  for (GateKind g : form_gates(res.v3.form)) c.add(g, 0);
  c.add_phase(res.v3.form.phase_exp);
  res.circuit = std::move(c);
  res.t_count = res.circuit.t_count();

  const Eigen::Matrix4cd y = float_simulate(res.circuit);
  const Eigen::Matrix4cd v3 = kron(evaluate_float(res.v3.form), id2);
  const Eigen::Matrix4cd v12 = block_matrix(res.v12.compiled), v45 = block_matrix(res.v45.compiled);
  const Eigen::Matrix4cd g789 = pauli_exp("YX", t2[1]) * pauli_exp("YY", t2[2]) * pauli_exp("YZ", t2[3]);
  const Eigen::Matrix4cd s1 = v3 * v12 * kron(s * h, id2) * v45 * kron(h * s.adjoint(), id2) *
                              kron(id2, v4.adjoint() * a2) * ss.u2;
  const Eigen::Matrix4cd s2 = v3 * v12 * g789 * ss.u2;
  const Eigen::Matrix4cd s3 = v3 * pauli_exp("ZX", t[2]) * pauli_exp("ZY", t[3]) * pauli_exp("ZZ", t[4]) *
                              kron(id2, a.adjoint() * v1) * g789 * ss.u2;
  res.stage = {diamond_distance_unitary(y, s1), diamond_distance_unitary(s1, s2),
               diamond_distance_unitary(s2, s3), diamond_distance_unitary(s3, u)};
  res.distance = diamond_distance_unitary(y, u);
  return res;
}

U2Result synth_controlled_u2(const std::vector<Eigen::Matrix2cd>& blocks, double epsilon, int m_cap) {
  const int n = log2_blocks(blocks.size());
  U2Result res;
  std::vector<Eigen::Matrix2cd> su2, diag;
  for (const auto& u : blocks) {
    if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() > 1e-9)
      throw NotSpecialUnitary("block is not unitary");
    const cd ph = std::sqrt(u.determinant());
    res.phases.push_back(ph);
    su2.push_back(u / ph);
    Eigen::Matrix2cd d;
    d << ph, 0, 0, std::conj(ph);
    diag.push_back(d);
  }
  res.su2_part = synth_controlled_su2(su2, epsilon / 2, CtrlMode::Ancilla, m_cap);
  res.phase_part = synth_controlled_su2(diag, epsilon / 2, CtrlMode::Ancilla, m_cap);
  const int b = std::max(res.su2_part.table.b(), res.phase_part.table.b());
  Registers r{n, 1, 1 + b, std::max(0, n - 2)};
  Circuit c(r);
  std::vector<int> a, clean, spare;
  for (int i = 0; i < n; ++i) a.push_back(r.a(i));
  for (int j = 1; j <= b; ++j) clean.push_back(r.c(j));
  for (int j = 0; j < r.n_dirty; ++j) spare.push_back(r.d(j));
  res.phase_qubit = r.c(0);
  emit_controlled(c, res.su2_part.table, a, r.b(), clean, spare);
  const bool trivial_phase = std::all_of(res.phases.begin(), res.phases.end(),
                                         [](cd ph) { return std::abs(ph - 1.0) < 1e-12; });
  if (!trivial_phase) emit_controlled(c, res.phase_part.table, a, res.phase_qubit, clean, spare);
  res.circuit = std::move(c);
  return res;
}

std::vector<double> u2_trace_distances(const Circuit& circuit, const std::vector<Eigen::Matrix2cd>& blocks,
                                       int samples, std::uint64_t seed) {
  const auto& regs = circuit.registers();
  const int n = regs.n_control;
  const int low = circuit.num_qubits() - (n + 1);
  const Eigen::Index dim = Eigen::Index{2} << n;
  if (static_cast<Eigen::Index>(blocks.size()) * 2 != dim) throw DimensionMismatch("block count");
  Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t j = 0; j < blocks.size(); ++j)
    target.block(static_cast<Eigen::Index>(2 * j), static_cast<Eigen::Index>(2 * j), 2, 2) = blocks[j];
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<double> out;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) psi(i) = cd(nd(rng), nd(rng));
    psi.normalize();
    const std::uint64_t dirty = regs.n_dirty ? rng() % (std::uint64_t{1} << regs.n_dirty) : 0;
    SparseState<cd> in;
    for (Eigen::Index i = 0; i < dim; ++i) in[(static_cast<std::uint64_t>(i) << low) | dirty] = psi(i);
    const auto res = simulate_float(circuit, std::move(in));
    std::map<std::uint64_t, Eigen::VectorXcd> by_rest;
    const std::uint64_t mask = (std::uint64_t{1} << low) - 1;
    for (const auto& [key, amp] : res) {
      auto it = by_rest.find(key & mask);
      if (it == by_rest.end()) it = by_rest.emplace(key & mask, Eigen::VectorXcd::Zero(dim)).first;
      it->second(static_cast<Eigen::Index>(key >> low)) = amp;
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [rest, v] : by_rest) rho += v * v.adjoint();
    const Eigen::VectorXcd phi = target * psi;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho - phi * phi.adjoint());
    out.push_back(0.5 * es.eigenvalues().cwiseAbs().sum());
  }
  return out;
}

}  // namespace ctsynth
