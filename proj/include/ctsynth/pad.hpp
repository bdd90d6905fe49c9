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

#include <vector>

#include "ctsynth/exact_matrix.hpp"
#include "ctsynth/manf.hpp"

namespace ctsynth {

/// Padded syllable M′: ζTH or TSH.
enum PaddedSyllable : int { kZetaTH = 0, kPadTSH = 1 };

/// ζ^phase_exp · F · M′_1 ⋯ M′_h · H · M′_{h+1} ⋯ M′_m · C′.
struct PaddedForm {
  int f = kFI;
  std::vector<int> syllables;
  int h_position = 0;
  /// Index of C′ in clifford_table().
  int c_prime = 0;
  int phase_exp = 0;
  /// ζ^{phase_adjust}·F·M′⋯H⋯M′·C′ equals the input form without its phase;
  /// phase_exp = s_i + phase_adjust, so evaluate_padded reproduces the input.
  int phase_adjust = 0;
  int original_m = 0;

  int m() const { return static_cast<int>(syllables.size()); }
};

ExactMatrix evaluate_padded(const PaddedForm& p);

/// Pads to length m. ParityMismatch when m − m_i is odd.
PaddedForm pad_to(const NormalForm& form, int m);

struct Equalized {
  int m = 0;
  int l = 0;
  std::vector<PaddedForm> padded;
};

/// m = max m_i, l = (m + min m_i)/2. ParityMismatch unless all m_i share a parity.
Equalized equalize(const std::vector<NormalForm>& forms);

}  // namespace ctsynth
