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

#include "ctsynth/exact_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "ctsynth/errors.hpp"

namespace ctsynth {

ExactMatrix::ExactMatrix(std::size_t dim, std::vector<ExactScalar> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) throw DimensionMismatch("ExactMatrix: entry count mismatch");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = ExactScalar(1);
  return m;
}

ExactMatrix ExactMatrix::direct_sum(const std::vector<ExactMatrix>& blocks) {
  std::size_t dim = 0;
  for (const auto& b : blocks) dim += b.dim();
  ExactMatrix m(dim);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) m(off + r, off + c) = b(r, c);
    off += b.dim();
  }
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("ExactMatrix product");
  ExactMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const ExactScalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < dim_; ++c) {
        const ExactScalar& b = o(k, c);
        if (b.is_zero()) continue;
        out(r, c) += a * b;
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("ExactMatrix sum");
  ExactMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
  ExactMatrix out(dim_ * o.dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const ExactScalar& a = (*this)(r, c);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < o.dim_; ++r2)
        for (std::size_t c2 = 0; c2 < o.dim_; ++c2)
          out(r * o.dim_ + r2, c * o.dim_ + c2) = a * o(r2, c2);
    }
  return out;
}

ExactMatrix ExactMatrix::mul_zeta(int k) const {
  ExactMatrix out = *this;
  for (auto& v : out.data_) v = v.mul_zeta(k);
  return out;
}

ExactMatrix ExactMatrix::scaled(const ExactScalar& s) const {
  ExactMatrix out = *this;
  for (auto& v : out.data_) v = v * s;
  return out;
}

bool ExactMatrix::is_unitary() const { return adjoint() * (*this) == identity(dim_); }

int ExactMatrix::max_k() const {
  int k = 0;
  for (const auto& v : data_) k = std::max(k, v.k());
  return k;
}

Eigen::MatrixXcd ExactMatrix::to_complex() const {
  Eigen::MatrixXcd m(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).to_complex();
  return m;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << '\n';
  }
  return os.str();
}

std::optional<int> equal_up_to_zeta(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  // Locate the first nonzero entry of b to pin the candidate phase.
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) {
      if (b(r, c).is_zero()) {
        if (!a(r, c).is_zero()) return std::nullopt;
        continue;
      }
      for (int j = 0; j < 8; ++j)
        if (b(r, c).mul_zeta(j) == a(r, c)) return b.mul_zeta(j) == a ? std::optional<int>(j) : std::nullopt;
      return std::nullopt;
    }
  return a == b ? std::optional<int>(0) : std::nullopt;
}

std::string phase_canonical_key(const ExactMatrix& m) {
  std::string best;
  for (int j = 0; j < 8; ++j) {
    std::string s = m.mul_zeta(j).to_string();
    if (j == 0 || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace ctsynth
