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

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ctsynth/circuit.hpp"
#include "ctsynth/manf.hpp"
#include "ctsynth/pad.hpp"

namespace ctsynth {

/// Table column kinds. Each column drives one controlled gadget P ⊕ Q.
enum class SlotKind {
  CliffH,    // H^{d_{2k}} of C′           (I, H)
  CliffS,    // low bit of d_{2k−1}        (I, S)
  CliffZ,    // high bit of d_{2k−1}       (I, Z)
  HFlag,     // movable H at position j    (I, H)
  Syllable,  // M′_j                       (TSH, ζTH)
  FH,        // F ≠ I                      (I, H)
  FS,        // F = SH                     (I, S)
  Phase,     // s ≥ k                      (I, ζI)
};

struct Slot {
  SlotKind kind;
  int index;
};

/// Per-branch bit rows g(i), one column per slot, columns in time order.
struct GTable {
  int n = 0;
  int m = 0;
  int l = 0;
  int c = kCliffordPairs;
  std::vector<Slot> slots;
  std::vector<std::vector<std::uint8_t>> rows;
  /// Region boundaries as slot offsets: [0, clifford_end) Clifford word,
  /// then alternating H/M′ up to region2_end, M′ only up to region3_end,
  /// the two F bits, and the seven unary phase bits.
  int clifford_end = 0;
  int region2_end = 0;
  int region3_end = 0;
  int f_end = 0;
  int z_bits = 0;

  int b() const { return static_cast<int>(slots.size()); }
};

GTable build_gtable(const Equalized& eq);

/// (P, Q) of a slot kind.
std::pair<ExactMatrix, ExactMatrix> slot_pair(SlotKind k);
/// Controlled realization: control |0⟩ applies P, |1⟩ applies Q.
void emit_gadget(Circuit& out, SlotKind k, int control, int target);
/// Two-qubit circuit (q0 control, q1 target) for a slot kind.
Circuit gadget_circuit(SlotKind k);

/// Product of the slot gadgets selected by row i, in time order.
ExactMatrix branch_unitary(const GTable& g, int i);

/// Gadgets on registers C (controls) and B (target).
Circuit gadget_layer(const GTable& g);
/// m + 2(m − l) + 5c + 14.
int gadget_formula(int m, int l, int c);

/// Multi-controlled X; borrows k − 2 dirty qubits from `spare` for k ≥ 3.
void emit_mcx(Circuit& out, const std::vector<int>& controls, int target, const std::vector<int>& spare);
/// |i⟩|y⟩ ↦ |i⟩|y ⊕ g(i)⟩ from qubits `a` into `cq`, borrowing from `spare`.
void emit_oracle(Circuit& out, const GTable& g, const std::vector<int>& a, const std::vector<int>& cq,
                 const std::vector<int>& spare);
/// Oracle on registers A → C, borrowing D then unused C qubits.
Circuit build_oracle(const GTable& g, const Registers& regs);

enum class CtrlMode { Ancilla, AncillaFree };

struct CompiledControlled {
  Circuit circuit;
  GTable table;
  std::vector<NormalForm> forms;
  Equalized eq;
  /// Exact U′_i.
  std::vector<ExactMatrix> branches;
  /// D⋄(U_i, U′_i), filled when targets are known.
  std::vector<double> distances;
  int gadget_t_count = 0;
  int oracle_t_count = 0;
  int formula = 0;
};

/// Compiles ⊕ evaluate(forms[i]) exactly. AncillaFree needs two forms.
CompiledControlled compile_forms(const std::vector<NormalForm>& forms, CtrlMode mode, int n_dirty = -1);

/// Ancilla-mode layers emitted into `out`: oracle, gadgets, mirrored oracle.
void emit_controlled(Circuit& out, const GTable& g, const std::vector<int>& a, int target,
                     const std::vector<int>& clean, const std::vector<int>& spare);

/// Approximates ⊕ blocks[i] (SU(2) each) with even-T-count branches.
CompiledControlled synth_controlled_su2(const std::vector<Eigen::Matrix2cd>& blocks, double epsilon,
                                        CtrlMode mode, int m_cap = 26, int n_dirty = -1);

}  // namespace ctsynth
