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

#include <memory>

#include <Eigen/Dense>

#include "ctsynth/manf.hpp"

namespace ctsynth {

enum class Parity { Even, Any };

struct SynthRequest {
  Eigen::Matrix2cd target;
  double epsilon = 0.1;
  Parity parity = Parity::Even;
  int m_cap = 26;
};

struct SynthResult {
  NormalForm form;
  double achieved_distance = 0;
  int t_count = 0;
};

/// u / √det(u), sign chosen so that Re tr ≥ 0.
Eigen::Matrix2cd to_su2(const Eigen::Matrix2cd& u);

/// D⋄ between two 2×2 unitaries.
double distance_2x2(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v);

/// argmin over s of ‖target − ζ^s·evaluate(form)‖_F, smallest s on ties.
int choose_phase(const Eigen::Matrix2cd& target, const NormalForm& form);
/// Same rule for an arbitrary 2×2 matrix m.
int choose_phase_matrix(const Eigen::Matrix2cd& target, const Eigen::Matrix2cd& m);

/// Search strategy from a request to the least (T-count, F, syllables, C)
/// canonical form within ε.
class SearchBackend {
 public:
  virtual ~SearchBackend() = default;
  virtual SynthResult search(const SynthRequest& req) = 0;
};

/// Meet-in-the-middle over unit quaternions with a 4D grid index.
std::shared_ptr<SearchBackend> default_backend();

/// EpsilonTooSmall when nothing of the requested parity is found up to m_cap.
SynthResult approx_su2(const SynthRequest& req);
SynthResult approx_su2(const SynthRequest& req, SearchBackend& backend);

}  // namespace ctsynth
