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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ctsynth/ring.hpp"

namespace ctsynth {

/// Dense square matrix over ExactScalar, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ExactMatrix(std::size_t dim, std::vector<ExactScalar> entries);

  static ExactMatrix identity(std::size_t dim);
  /// Block-diagonal matrix with the given blocks, first block top-left.
  static ExactMatrix direct_sum(const std::vector<ExactMatrix>& blocks);

  std::size_t dim() const { return dim_; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const { return dim_ == o.dim_ && data_ == o.data_; }

  ExactMatrix adjoint() const;
  ExactMatrix kron(const ExactMatrix& o) const;
  ExactMatrix mul_zeta(int k) const;
  ExactMatrix scaled(const ExactScalar& s) const;

  /// U†U = I, checked over the ring.
  bool is_unitary() const;
  /// Largest denominator exponent over all entries.
  int max_k() const;
  Eigen::MatrixXcd to_complex() const;
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<ExactScalar> data_;
};

/// Returns j in [0, 8) with a = ζ^j·b, if any.
std::optional<int> equal_up_to_zeta(const ExactMatrix& a, const ExactMatrix& b);

/// Phase-independent canonical key: the lexicographically smallest
/// serialization over the eight ζ rotations. Equal keys ⇔ equal up to ζ^j.
std::string phase_canonical_key(const ExactMatrix& m);

}  // namespace ctsynth
