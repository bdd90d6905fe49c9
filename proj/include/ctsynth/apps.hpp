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

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ctsynth/circuit.hpp"
#include "ctsynth/ctrl.hpp"
#include "ctsynth/synth1q.hpp"

namespace ctsynth {

using Matrix6d = Eigen::Matrix<double, 6, 6>;

/// Two-qubit Pauli from a label such as "ZX" (first letter on qubit 0).
Eigen::Matrix4cd pauli2(const std::string& label);
/// exp(iθP) = cos θ·I + i sin θ·P.
Eigen::Matrix4cd pauli_exp(const std::string& label, double theta);
Eigen::Matrix2cd pauli1_exp(char p, double theta);

/// Real 6×6 image of an SU(4) element; kernel {±I}.
Matrix6d so6_rep(const Eigen::Matrix4cd& u);

/// exp(iθP) acts in plane (a, b) as a rotation by 2θ:
/// e_a ↦ cos 2θ·e_a + κ sin 2θ·e_b. Axes are 1-based.
struct PlaneEntry {
  std::string pauli;
  int a;
  int b;
  int kappa;
};

/// The 15 calibrated Pauli ↔ plane assignments.
const std::vector<PlaneEntry>& pauli_plane_table();
const PlaneEntry& plane_of(const std::string& pauli);

struct GivensPlan {
  std::array<double, 9> theta{};
  /// so6_rep(u1) fixes axis 6; so6_rep(u2) fixes axes 5 and 6.
  Eigen::Matrix4cd u1;
  Eigen::Matrix4cd u2;
};

struct FirstSplit {
  std::array<double, 5> theta{};
  Eigen::Matrix4cd u1;
};
struct SecondSplit {
  std::array<double, 4> theta{};
  Eigen::Matrix4cd u2;
};

/// u = e^{iθ1 XI} e^{iθ2 YI} e^{iθ3 ZX} e^{iθ4 ZY} e^{iθ5 ZZ} u1.
FirstSplit first_split(const Eigen::Matrix4cd& u);
/// w = e^{iθ6 ZI} e^{iθ7 YX} e^{iθ8 YY} e^{iθ9 YZ} u2, for w fixing axis 6.
SecondSplit second_split(const Eigen::Matrix4cd& w);
GivensPlan decompose_su4(const Eigen::Matrix4cd& u);
Eigen::Matrix4cd reconstruct(const GivensPlan& plan);

/// V1 ⊕ V2 with V1·V2† ≈ target.
struct SplitHalfResult {
  SynthResult whole;
  NormalForm v1;
  NormalForm v2;
  Eigen::Matrix2cd v1m;
  Eigen::Matrix2cd v2m;
  CompiledControlled compiled;
  double distance = 0;
};

SplitHalfResult split_half(const Eigen::Matrix2cd& target, double epsilon, int m_cap = 26);

struct Su4Result {
  Circuit circuit;
  GivensPlan plan;
  SplitHalfResult v12;
  SynthResult v3;
  SplitHalfResult v45;
  CompiledControlled v67;
  /// D⋄(U′, U′_1), D⋄(U′_1, U′_2), D⋄(U′_2, U′_3), D⋄(U′_3, U).
  std::array<double, 4> stage{};
  double distance = 0;
  int t_count = 0;
};

/// U(4) inputs are rescaled into SU(4) first.
Su4Result synth_su4(const Eigen::Matrix4cd& u, double epsilon, int m_cap = 26);

struct U2Result {
  Circuit circuit;
  CompiledControlled su2_part;
  CompiledControlled phase_part;
  /// e^{iθ_j} with U_j = V_j·e^{iθ_j}.
  std::vector<std::complex<double>> phases;
  /// Qubit of the extra clean ancilla.
  int phase_qubit = 0;
};

/// Circuit on A (n), B, and C (extra ancilla first, then shared table bits).
U2Result synth_controlled_u2(const std::vector<Eigen::Matrix2cd>& blocks, double epsilon, int m_cap = 26);

/// Trace distances between the target state and the reduced output on A⊗B
/// for random pure inputs; ancillas start in |0⟩ (dirty ones in random basis states).
std::vector<double> u2_trace_distances(const Circuit& circuit, const std::vector<Eigen::Matrix2cd>& blocks,
                                       int samples, std::uint64_t seed);

}  // namespace ctsynth
