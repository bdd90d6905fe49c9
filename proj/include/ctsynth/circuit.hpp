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

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "ctsynth/exact_matrix.hpp"

namespace ctsynth {

enum class GateKind { H, S, Sdg, T, Tdg, X, Y, Z, CNOT, SWAP };

const char* gate_name(GateKind k);
bool is_two_qubit(GateKind k);

/// Absolute qubit indices; q1 is the target of CNOT.
struct Gate {
  GateKind kind;
  int q0;
  int q1 = -1;
  bool operator==(const Gate& o) const { return kind == o.kind && q0 == o.q0 && q1 == o.q1; }
};

/// Register layout; qubits are numbered A, then B, then C, then D.
struct Registers {
  int n_control = 0;
  int n_target = 1;
  int n_clean = 0;
  int n_dirty = 0;

  int total() const { return n_control + n_target + n_clean + n_dirty; }
  int a(int i) const { return i; }
  int b() const { return n_control; }
  int c(int i) const { return n_control + n_target + i; }
  int d(int i) const { return n_control + n_target + n_clean + i; }
  bool operator==(const Registers& o) const {
    return n_control == o.n_control && n_target == o.n_target && n_clean == o.n_clean &&
           n_dirty == o.n_dirty;
  }
};

inline constexpr int kMaxQubits = 64;
inline constexpr int kExactDenseCap = 12;
inline constexpr int kFloatDenseCap = 14;

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(Registers regs);

  const Registers& registers() const { return regs_; }
  const std::vector<Gate>& gates() const { return gates_; }
  int num_qubits() const { return regs_.total(); }
  /// Global phase ζ^k carried alongside the gate list, k in [0, 8).
  int global_phase() const { return phase_; }
  void add_phase(int k) { phase_ = ((phase_ + k) % 8 + 8) % 8; }

  void add(GateKind k, int q0, int q1 = -1);
  void h(int q) { add(GateKind::H, q); }
  void s(int q) { add(GateKind::S, q); }
  void sdg(int q) { add(GateKind::Sdg, q); }
  void t(int q) { add(GateKind::T, q); }
  void tdg(int q) { add(GateKind::Tdg, q); }
  void x(int q) { add(GateKind::X, q); }
  void z(int q) { add(GateKind::Z, q); }
  void cnot(int c, int t) { add(GateKind::CNOT, c, t); }
  void toffoli(int c0, int c1, int t);
  /// Appends another circuit's gates and phase; registers must be compatible.
  void append(const Circuit& o);
  Circuit inverse() const;

  int t_count() const;
  bool operator==(const Circuit& o) const {
    return regs_ == o.regs_ && gates_ == o.gates_ && phase_ == o.phase_;
  }

 private:
  Registers regs_;
  std::vector<Gate> gates_;
  int phase_ = 0;
};

/// Single-qubit gate matrix over the ring.
ExactMatrix gate_matrix(GateKind k);

/// Sparse state: basis index (qubit 0 is the most significant bit) to amplitude.
template <class Scalar>
using SparseState = std::unordered_map<std::uint64_t, Scalar>;

SparseState<ExactScalar> simulate_exact(const Circuit& c, SparseState<ExactScalar> state);
SparseState<std::complex<double>> simulate_float(const Circuit& c,
                                                 SparseState<std::complex<double>> state);

/// Full exact unitary; CapExceeded above kExactDenseCap qubits.
ExactMatrix exact_simulate(const Circuit& c);
/// Full complex unitary; CapExceeded above kFloatDenseCap qubits.
Eigen::MatrixXcd float_simulate(const Circuit& c);

/// 2^n diagonal 2×2 blocks of an (n+1)-qubit unitary; last qubit is the target.
std::vector<ExactMatrix> block_diagonal_extract(const ExactMatrix& u, int n);

/// D⋄ between unitary channels via the eigenphase arc of UV†.
double diamond_distance_unitary(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// Circuit text format.
std::string to_text(const Circuit& c);
Circuit parse_text(const std::string& text);

}  // namespace ctsynth
