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

#include "ctsynth/ctrl.hpp"

#include <algorithm>

#include "ctsynth/errors.hpp"
#include "ctsynth/synth1q.hpp"

namespace ctsynth {

namespace {

int log2_count(std::size_t v) {
  int n = 0;
  while ((std::size_t{1} << n) < v) ++n;
  if ((std::size_t{1} << n) != v || n < 1) throw InconsistentInput("branch count must be 2^n with n ≥ 1");
  return n;
}

// T^k on one qubit with at most one T gate.
void emit_t_power(Circuit& out, int q, int k) {
  switch (((k % 8) + 8) % 8) {
    case 1: out.t(q); break;
    case 2: out.s(q); break;
    case 3: out.s(q); out.t(q); break;
    case 4: out.z(q); break;
    case 5: out.z(q); out.t(q); break;
    case 6: out.sdg(q); break;
    case 7: out.tdg(q); break;
    default: break;
  }
}

// Uncontrolled P (which = 0) or Q (which = 1) of a slot on the target.
void emit_branch_gate(Circuit& out, SlotKind k, int which, int target) {
  switch (k) {
    case SlotKind::CliffH:
    case SlotKind::HFlag:
    case SlotKind::FH:
      if (which) out.h(target);
      break;
    case SlotKind::CliffS:
    case SlotKind::FS:
      if (which) out.s(target);
      break;
    case SlotKind::CliffZ:
      if (which) out.z(target);
      break;
    case SlotKind::Syllable:
      out.h(target);
      if (!which) out.s(target);
      out.t(target);
      if (which) out.add_phase(1);
      break;
    case SlotKind::Phase:
      if (which) out.add_phase(1);
      break;
  }
}

}  // namespace

GTable build_gtable(const Equalized& eq) {
  GTable g;
  g.n = log2_count(eq.padded.size());
  g.m = eq.m;
  g.l = eq.l;
  for (const auto& p : eq.padded)
    if (p.m() != eq.m || p.h_position < eq.l || p.h_position > eq.m)
      throw InconsistentInput("build_gtable: padded forms disagree with (m, l)");
  auto d_of = [](const PaddedForm& p, int idx) {
    return clifford_table()[static_cast<std::size_t>(p.c_prime)].d[static_cast<std::size_t>(idx)];
  };
  for (int k = g.c; k >= 1; --k) {
    g.slots.push_back({SlotKind::CliffH, k});
    g.slots.push_back({SlotKind::CliffS, k});
    bool need_z = false;
    for (const auto& p : eq.padded) need_z |= d_of(p, 2 * k - 2) >= 2;
    if (need_z) {
      g.slots.push_back({SlotKind::CliffZ, k});
      ++g.z_bits;
    }
  }
  g.clifford_end = g.b();
  for (int j = g.m; j >= g.l; --j) {
    g.slots.push_back({SlotKind::HFlag, j});
    if (j >= 1) g.slots.push_back({SlotKind::Syllable, j});
  }
  g.region2_end = g.b();
  for (int j = g.l - 1; j >= 1; --j) g.slots.push_back({SlotKind::Syllable, j});
  g.region3_end = g.b();
  g.slots.push_back({SlotKind::FH, 0});
  g.slots.push_back({SlotKind::FS, 0});
  g.f_end = g.b();
  for (int k = 1; k <= 7; ++k) g.slots.push_back({SlotKind::Phase, k});

  for (const auto& p : eq.padded) {
    std::vector<std::uint8_t> row;
    for (const Slot& s : g.slots) {
      bool bit = false;
      switch (s.kind) {
        case SlotKind::CliffH: bit = d_of(p, 2 * s.index - 1) != 0; break;
        case SlotKind::CliffS: bit = (d_of(p, 2 * s.index - 2) & 1) != 0; break;
        case SlotKind::CliffZ: bit = (d_of(p, 2 * s.index - 2) >> 1) != 0; break;
        case SlotKind::HFlag: bit = p.h_position == s.index; break;
        case SlotKind::Syllable: bit = p.syllables[static_cast<std::size_t>(s.index - 1)] == kZetaTH; break;
        case SlotKind::FH: bit = p.f != kFI; break;
        case SlotKind::FS: bit = p.f == kFSH; break;
        case SlotKind::Phase: bit = p.phase_exp >= s.index; break;
      }
      row.push_back(bit ? 1 : 0);
    }
    g.rows.push_back(std::move(row));
  }
  return g;
}

std::pair<ExactMatrix, ExactMatrix> slot_pair(SlotKind k) {
  const ExactMatrix id = ExactMatrix::identity(2);
  switch (k) {
    case SlotKind::CliffH:
    case SlotKind::HFlag:
    case SlotKind::FH: return {id, gate_matrix(GateKind::H)};
    case SlotKind::CliffS:
    case SlotKind::FS: return {id, gate_matrix(GateKind::S)};
    case SlotKind::CliffZ: return {id, gate_matrix(GateKind::Z)};
    case SlotKind::Syllable: return {syllable_matrix(kTSH), syllable_matrix(kTH).mul_zeta(1)};
    case SlotKind::Phase: return {id, id.mul_zeta(1)};
  }
  throw InconsistentInput("slot kind");
}

void emit_gadget(Circuit& out, SlotKind k, int c, int t) {
  switch (k) {
    case SlotKind::CliffH:
    case SlotKind::HFlag:
    case SlotKind::FH:
      out.sdg(t);
      out.h(t);
      out.tdg(t);
      out.cnot(c, t);
      out.t(t);
      out.h(t);
      out.s(t);
      break;
    case SlotKind::CliffS:
    case SlotKind::FS:
      out.t(c);
      out.t(t);
      out.cnot(c, t);
      out.tdg(t);
      out.cnot(c, t);
      break;
    case SlotKind::CliffZ:
      out.h(t);
      out.cnot(c, t);
      out.h(t);
      break;
    case SlotKind::Syllable:
      out.h(t);
      out.cnot(c, t);
      out.t(t);
      out.cnot(c, t);
      out.s(t);
      break;
    case SlotKind::Phase:
      out.t(c);
      break;
  }
}

Circuit gadget_circuit(SlotKind k) {
  Circuit c(Registers{1, 1, 0, 0});
  emit_gadget(c, k, 0, 1);
  return c;
}

ExactMatrix branch_unitary(const GTable& g, int i) {
  ExactMatrix u = ExactMatrix::identity(2);
  const auto& row = g.rows.at(static_cast<std::size_t>(i));
  for (std::size_t j = 0; j < g.slots.size(); ++j) {
    auto pq = slot_pair(g.slots[j].kind);
    u = (row[j] ? pq.second : pq.first) * u;
  }
  return u;
}

Circuit gadget_layer(const GTable& g) {
  Registers r{0, 1, g.b(), 0};
  Circuit c(r);
  for (int j = 0; j < g.b(); ++j) emit_gadget(c, g.slots[static_cast<std::size_t>(j)].kind, r.c(j), r.b());
  return c;
}

int gadget_formula(int m, int l, int c) { return m + 2 * (m - l) + 5 * c + 14; }

void emit_controlled(Circuit& out, const GTable& g, const std::vector<int>& a, int target,
                     const std::vector<int>& clean, const std::vector<int>& spare) {
  if (static_cast<int>(clean.size()) < g.b()) throw CapExceeded("not enough clean qubits for the table");
  Circuit oracle(out.registers());
  emit_oracle(oracle, g, a, clean, spare);
  out.append(oracle);
  for (int j = 0; j < g.b(); ++j)
    emit_gadget(out, g.slots[static_cast<std::size_t>(j)].kind, clean[static_cast<std::size_t>(j)], target);
  out.append(oracle.inverse());
}

CompiledControlled compile_forms(const std::vector<NormalForm>& forms, CtrlMode mode, int n_dirty) {
  CompiledControlled out;
  out.forms = forms;
  out.eq = equalize(forms);
  out.table = build_gtable(out.eq);
  for (const auto& p : out.eq.padded) out.branches.push_back(evaluate_padded(p));
  out.gadget_t_count = gadget_layer(out.table).t_count();
  out.formula = gadget_formula(out.eq.m, out.eq.l, out.table.c);
  const GTable& g = out.table;
  if (mode == CtrlMode::Ancilla) {
    const int n = g.n;
    const int d = n_dirty < 0 ? std::max(0, n - 2) : n_dirty;
    Registers r{n, 1, g.b(), d};
    Circuit c(r);
    std::vector<int> a, clean, spare;
    for (int i = 0; i < n; ++i) a.push_back(r.a(i));
    for (int j = 0; j < g.b(); ++j) clean.push_back(r.c(j));
    for (int j = 0; j < d; ++j) spare.push_back(r.d(j));
    emit_controlled(c, g, a, r.b(), clean, spare);
    Circuit oracle(r);
    emit_oracle(oracle, g, a, clean, spare);
    out.oracle_t_count = 2 * oracle.t_count();
    out.circuit = std::move(c);
    return out;
  }
  if (g.n != 1) throw InconsistentInput("ancilla-free mode needs exactly one control qubit");
  Registers r{1, 1, 0, 0};
  Circuit c(r);
  const int a = r.a(0), t = r.b();
  for (int j = 0; j < g.f_end; ++j) {
    const SlotKind k = g.slots[static_cast<std::size_t>(j)].kind;
    const int b0 = g.rows[0][static_cast<std::size_t>(j)], b1 = g.rows[1][static_cast<std::size_t>(j)];
    if (b0 == b1) {
      emit_branch_gate(c, k, b0, t);
    } else if (b1) {
      emit_gadget(c, k, a, t);
    } else {
      c.x(a);
      emit_gadget(c, k, a, t);
      c.x(a);
    }
  }
  // Unary phase bits collapse to ζ^{s_0} · T^{s_1 − s_0} on the control.
  const int s0 = out.eq.padded[0].phase_exp, s1 = out.eq.padded[1].phase_exp;
  emit_t_power(c, a, s1 - s0);
  c.add_phase(s0);
  out.circuit = std::move(c);
  return out;
}

CompiledControlled synth_controlled_su2(const std::vector<Eigen::Matrix2cd>& blocks, double epsilon,
                                        CtrlMode mode, int m_cap, int n_dirty) {
  log2_count(blocks.size());
  if (mode == CtrlMode::AncillaFree && blocks.size() != 2)
    throw InconsistentInput("ancilla-free mode needs exactly two blocks");
  std::vector<NormalForm> forms;
  for (const auto& b : blocks) {
    if (std::abs(b.determinant() - 1.0) > 1e-9) throw NotSpecialUnitary("block is not in SU(2)");
    forms.push_back(approx_su2({b, epsilon, Parity::Even, m_cap}).form);
  }
  CompiledControlled out = compile_forms(forms, mode, n_dirty);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out.distances.push_back(distance_2x2(blocks[i], out.branches[i].to_complex()));
  return out;
}

}  // namespace ctsynth
