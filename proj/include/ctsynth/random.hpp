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
#include <random>

#include <Eigen/Dense>

namespace ctsynth {

/// Haar-distributed unitary via QR of a complex Gaussian matrix.
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng);
Eigen::Matrix2cd haar_su2(std::mt19937_64& rng);
Eigen::Matrix2cd haar_u2(std::mt19937_64& rng);
Eigen::Matrix4cd haar_su4(std::mt19937_64& rng);

}  // namespace ctsynth
