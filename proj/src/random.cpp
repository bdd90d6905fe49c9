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

#include "ctsynth/random.hpp"

#include <cmath>
#include <complex>

namespace ctsynth {

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = {nd(rng), nd(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

Eigen::Matrix2cd haar_u2(std::mt19937_64& rng) { return haar_unitary(2, rng); }

Eigen::Matrix2cd haar_su2(std::mt19937_64& rng) {
  Eigen::Matrix2cd u = haar_unitary(2, rng);
  return u / std::sqrt(u.determinant());
}

Eigen::Matrix4cd haar_su4(std::mt19937_64& rng) {
  Eigen::Matrix4cd u = haar_unitary(4, rng);
  return u / std::pow(u.determinant(), 0.25);
}

}  // namespace ctsynth
