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

#include <Eigen/Dense>

#include "ctsynth/circuit.hpp"
#include "ctsynth/exact_matrix.hpp"
#include "ctsynth/ring.hpp"

namespace ctsynth {

/// Pauli-basis channel matrix, entries in Z[1/√2].
///
/// Row and column indices are base-4 Pauli labels with the first qubit as
/// the most significant digit and digits 0..3 standing for I, X, Y, Z.
class ChannelRep {
 public:
  ChannelRep() = default;
  explicit ChannelRep(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  const DyadicRootTwo& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  DyadicRootTwo& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

  ChannelRep operator*(const ChannelRep& o) const;
  bool operator==(const ChannelRep& o) const { return dim_ == o.dim_ && data_ == o.data_; }
  Eigen::MatrixXd to_double() const;

 private:
  std::size_t dim_ = 0;
  std::vector<DyadicRootTwo> data_;
};

/// (1/2^n) tr(U P_i U† P_j), exact. NonRealEntry if an entry is not real.
ChannelRep channel_rep(const ExactMatrix& u);

/// Largest sde over all entries.
int sde_channel(const ChannelRep& r);

/// Channel rep of block i of a block-diagonal (n+1)-qubit unitary, read off
/// the full channel rep by summing over I/Z-only control Paulis.
ChannelRep extract_block_channel(const ChannelRep& r, int i);

struct LowerBoundReport {
  int t_count = 0;
  int sde_full = 0;
  int max_block_sde = 0;
  std::vector<int> block_sde;
  /// t_count ≥ sde_full ≥ max_block_sde.
  bool chain_holds() const { return t_count >= sde_full && sde_full >= max_block_sde; }
};

/// Requires an ancilla-free circuit (registers C and D empty) that is exactly
/// block-diagonal on A⊗B.
LowerBoundReport lower_bound_check(const Circuit& c);

}  // namespace ctsynth
