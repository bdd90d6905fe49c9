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
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ctsynth/circuit.hpp"
#include "ctsynth/exact_matrix.hpp"

namespace ctsynth {

/// Leading factor F.
enum FPrefix : int { kFI = 0, kFH = 1, kFSH = 2 };
/// Syllable M = T·S^a·H with a = 0 (TH) or 1 (TSH).
enum Syllable : int { kTH = 0, kTSH = 1 };

/// ζ^phase_exp · F · M_1 ⋯ M_m · C with C an index into clifford_table().
///
/// Canonical forms (as produced by reduce_word and enumerate) have F = I
/// when m = 0 and end in TH when m ≥ 1.
struct NormalForm {
  int f = kFI;
  std::vector<int> syllables;
  int c = 0;
  int phase_exp = 0;

  int t_count() const { return static_cast<int>(syllables.size()); }
  bool operator==(const NormalForm& o) const {
    return f == o.f && syllables == o.syllables && c == o.c && phase_exp == o.phase_exp;
  }
};

/// Number of (S, H) exponent pairs in every Clifford word.
inline constexpr int kCliffordPairs = 2;

struct CliffordEntry {
  ExactMatrix matrix;
  /// Exponents of S^{d1} H^{d2} S^{d3} H^{d4}.
  std::array<int, 2 * kCliffordPairs> d;
};

/// The 24 single-qubit Cliffords mod phase, identity first.
const std::vector<CliffordEntry>& clifford_table();

struct CliffordMatch {
  int index;
  /// m = ζ^phase · table[index].
  int phase;
};

/// InconsistentInput if m is not a Clifford.
CliffordMatch clifford_lookup(const ExactMatrix& m);

ExactMatrix f_matrix(int f);
ExactMatrix syllable_matrix(int s);

ExactMatrix evaluate(const NormalForm& nf);
Eigen::Matrix2cd evaluate_float(const NormalForm& nf);

/// Time-ordered single-qubit gates for F·M_1⋯M_m·C (phase omitted).
std::vector<GateKind> form_gates(const NormalForm& nf);
std::vector<GateKind> clifford_gates(int index);

/// Canonical form of a word over {H, S, Sdg, T, Tdg, X, Y, Z} given in time order.
NormalForm reduce_word(const std::vector<GateKind>& gates);
/// Canonical form of an exact single-qubit Clifford+T unitary.
NormalForm normal_form_of(const ExactMatrix& u);

/// All canonical forms with T-count m, ordered by (F, syllables, C).
std::vector<NormalForm> enumerate(int m);
/// 24 for m = 0, 72·2^{m−1} otherwise.
long long enumerate_count(int m);

std::string to_string(const NormalForm& nf);

}  // namespace ctsynth
