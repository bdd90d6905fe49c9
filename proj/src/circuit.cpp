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

#include "ctsynth/circuit.hpp"

#include <cmath>

#include "ctsynth/errors.hpp"

namespace ctsynth {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "Tdg";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
  }
  return "?";
}

bool is_two_qubit(GateKind k) { return k == GateKind::CNOT || k == GateKind::SWAP; }

Circuit::Circuit(Registers regs) : regs_(regs) {
  if (regs.n_control < 0 || regs.n_target < 0 || regs.n_clean < 0 || regs.n_dirty < 0)
    throw InconsistentInput("negative register size");
  if (regs.total() > kMaxQubits) throw CapExceeded("register total exceeds 64 qubits");
}

void Circuit::add(GateKind k, int q0, int q1) {
  const int n = regs_.total();
  if (q0 < 0 || q0 >= n) throw InconsistentInput("qubit index out of range");
  if (is_two_qubit(k)) {
    if (q1 < 0 || q1 >= n) throw InconsistentInput("qubit index out of range");
    if (q0 == q1) throw InconsistentInput("two-qubit gate on a single qubit");
  } else {
    q1 = -1;
  }
  gates_.push_back({k, q0, q1});
}

void Circuit::toffoli(int a, int b, int t) {
  h(t);
  cnot(b, t);
  tdg(t);
  cnot(a, t);
  this->t(t);
  cnot(b, t);
  tdg(t);
  cnot(a, t);
  this->t(b);
  this->t(t);
  h(t);
  cnot(a, b);
  this->t(a);
  tdg(b);
  cnot(a, b);
}

void Circuit::append(const Circuit& o) {
  if (o.regs_.total() > regs_.total()) throw DimensionMismatch("append: register mismatch");
  gates_.insert(gates_.end(), o.gates_.begin(), o.gates_.end());
  add_phase(o.phase_);
}

Circuit Circuit::inverse() const {
  Circuit out(regs_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    Gate g = *it;
    switch (g.kind) {
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::T: g.kind = GateKind::Tdg; break;
      case GateKind::Tdg: g.kind = GateKind::T; break;
      default: break;
    }
    out.gates_.push_back(g);
  }
  out.phase_ = (8 - phase_) % 8;
  return out;
}

int Circuit::t_count() const {
  int n = 0;
  for (const auto& g : gates_) n += (g.kind == GateKind::T || g.kind == GateKind::Tdg);
  return n;
}

ExactMatrix gate_matrix(GateKind k) {
  const ExactScalar o(0), l(1), r = ExactScalar::inv_sqrt2();
  switch (k) {
    case GateKind::H: return ExactMatrix(2, {r, r, r, -r});
    case GateKind::S: return ExactMatrix(2, {l, o, o, ExactScalar::zeta(2)});
    case GateKind::Sdg: return ExactMatrix(2, {l, o, o, ExactScalar::zeta(6)});
    case GateKind::T: return ExactMatrix(2, {l, o, o, ExactScalar::zeta(1)});
    case GateKind::Tdg: return ExactMatrix(2, {l, o, o, ExactScalar::zeta(7)});
    case GateKind::X: return ExactMatrix(2, {o, l, l, o});
    case GateKind::Y: return ExactMatrix(2, {o, ExactScalar::zeta(6), ExactScalar::zeta(2), o});
    case GateKind::Z: return ExactMatrix(2, {l, o, o, -l});
    default: throw InconsistentInput("gate_matrix: not a single-qubit gate");
  }
}

namespace {

template <class Scalar>
struct Ops;

template <>
struct Ops<ExactScalar> {
  static ExactScalar zeta(const ExactScalar& x, int k) { return x.mul_zeta(k); }
  static ExactScalar half(const ExactScalar& x) { return x.div_sqrt2(); }
  static bool zero(const ExactScalar& x) { return x.is_zero(); }
};

template <>
struct Ops<std::complex<double>> {
  using C = std::complex<double>;
  static C zeta(const C& x, int k) { return x * std::polar(1.0, M_PI / 4 * ((k % 8 + 8) % 8)); }
  static C half(const C& x) { return x * M_SQRT1_2; }
  static bool zero(const C& x) { return std::abs(x) < 1e-15; }
};

// Diagonal phase (in powers of ζ) applied when the qubit is |1⟩.
int one_phase(GateKind k) {
  switch (k) {
    case GateKind::S: return 2;
    case GateKind::Sdg: return 6;
    case GateKind::T: return 1;
    case GateKind::Tdg: return 7;
    case GateKind::Z: return 4;
    default: return 0;
  }
}

template <class Scalar>
SparseState<Scalar> run(const Circuit& c, SparseState<Scalar> state) {
  using O = Ops<Scalar>;
  const int n = c.num_qubits();
  auto mask = [n](int q) { return std::uint64_t{1} << (n - 1 - q); };
  for (const Gate& g : c.gates()) {
    const std::uint64_t m0 = mask(g.q0);
    SparseState<Scalar> next;
    next.reserve(state.size() * (g.kind == GateKind::H ? 2 : 1));
    switch (g.kind) {
      case GateKind::H:
        for (const auto& [key, amp] : state) {
          const Scalar h = O::half(amp);
          next[key & ~m0] += h;
          if (key & m0) next[key | m0] += O::zeta(h, 4);
          else next[key | m0] += h;
        }
        for (auto it = next.begin(); it != next.end();) it = O::zero(it->second) ? next.erase(it) : std::next(it);
        break;
      case GateKind::X:
        for (const auto& [key, amp] : state) next.emplace(key ^ m0, amp);
        break;
      case GateKind::Y:
        for (const auto& [key, amp] : state) next.emplace(key ^ m0, O::zeta(amp, (key & m0) ? 6 : 2));
        break;
      case GateKind::CNOT: {
        const std::uint64_t m1 = mask(g.q1);
        for (const auto& [key, amp] : state) next.emplace((key & m0) ? key ^ m1 : key, amp);
        break;
      }
      case GateKind::SWAP: {
        const std::uint64_t m1 = mask(g.q1);
        for (const auto& [key, amp] : state) {
          const bool b0 = key & m0, b1 = key & m1;
          std::uint64_t k2 = key & ~(m0 | m1);
          if (b0) k2 |= m1;
          if (b1) k2 |= m0;
          next.emplace(k2, amp);
        }
        break;
      }
      default: {
        const int p = one_phase(g.kind);
        for (auto& [key, amp] : state) next.emplace(key, (key & m0) ? O::zeta(amp, p) : amp);
        break;
      }
    }
    state.swap(next);
  }
  if (c.global_phase() != 0)
    for (auto& [key, amp] : state) amp = O::zeta(amp, c.global_phase());
  return state;
}

}  // namespace

SparseState<ExactScalar> simulate_exact(const Circuit& c, SparseState<ExactScalar> state) {
  return run<ExactScalar>(c, std::move(state));
}

SparseState<std::complex<double>> simulate_float(const Circuit& c,
                                                 SparseState<std::complex<double>> state) {
  return run<std::complex<double>>(c, std::move(state));
}

ExactMatrix exact_simulate(const Circuit& c) {
  const int n = c.num_qubits();
  if (n > kExactDenseCap) throw CapExceeded("exact_simulate: too many qubits");
  const std::size_t dim = std::size_t{1} << n;
  ExactMatrix u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    auto out = simulate_exact(c, {{col, ExactScalar(1)}});
    for (auto& [row, amp] : out) u(row, col) = amp;
  }
  return u;
}

Eigen::MatrixXcd float_simulate(const Circuit& c) {
  const int n = c.num_qubits();
  if (n > kFloatDenseCap) throw CapExceeded("float_simulate: too many qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    auto out = simulate_float(c, {{static_cast<std::uint64_t>(col), 1.0}});
    for (auto& [row, amp] : out) u(static_cast<Eigen::Index>(row), col) = amp;
  }
  return u;
}

std::vector<ExactMatrix> block_diagonal_extract(const ExactMatrix& u, int n) {
  const std::size_t dim = std::size_t{2} << n;
  if (u.dim() != dim) throw DimensionMismatch("block_diagonal_extract: dimension");
  std::vector<ExactMatrix> blocks;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (r / 2 != c / 2 && !u(r, c).is_zero()) throw NotBlockDiagonal("nonzero off-block entry");
  for (std::size_t i = 0; i < dim / 2; ++i) {
    ExactMatrix b(2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) b(r, c) = u(2 * i + r, 2 * i + c);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace ctsynth
