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

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "ctsynth/circuit.hpp"
#include "ctsynth/errors.hpp"

namespace ctsynth {

double diamond_distance_unitary(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw DimensionMismatch("diamond_distance_unitary");
  const Eigen::MatrixXcd w = u * v.adjoint();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(w, false);
  std::vector<double> ph;
  for (Eigen::Index i = 0; i < w.rows(); ++i) ph.push_back(std::arg(es.eigenvalues()(i)));
  std::sort(ph.begin(), ph.end());
  // Largest empty arc between consecutive eigenphases.
  double gap = ph.front() + 2 * M_PI - ph.back();
  for (std::size_t i = 1; i < ph.size(); ++i) gap = std::max(gap, ph[i] - ph[i - 1]);
  if (gap <= M_PI) return 1.0;
  return std::clamp(std::sin((2 * M_PI - gap) / 2), 0.0, 1.0);
}

}  // namespace ctsynth
