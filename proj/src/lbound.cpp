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

#include "ctsynth/lbound.hpp"

#include <algorithm>

#include "ctsynth/errors.hpp"

namespace ctsynth {

namespace {

int log2_exact(std::size_t v) {
  int n = 0;
  while ((std::size_t{1} << n) < v) ++n;
  if ((std::size_t{1} << n) != v) throw DimensionMismatch("dimension is not a power of two");
  return n;
}

// Column c of Pauli p has its single nonzero at row c ^ flip, value ζ^phase.
struct PauliColumn {
  std::size_t flip;
  int phase;
};

PauliColumn pauli_column(std::size_t p, std::size_t c, int n) {
  PauliColumn out{0, 0};
  for (int q = 0; q < n; ++q) {
    const int digit = static_cast<int>((p >> (2 * (n - 1 - q))) & 3);
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    const bool one = c & bit;
    switch (digit) {
      case 1: out.flip |= bit; break;
      case 2: out.flip |= bit; out.phase += one ? 6 : 2; break;
      case 3: out.phase += one ? 4 : 0; break;
      default: break;
    }
  }
  out.phase %= 8;
  return out;
}

}  // namespace

ChannelRep ChannelRep::operator*(const ChannelRep& o) const {
  if (dim_ != o.dim_) throw DimensionMismatch("ChannelRep product");
  ChannelRep out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < dim_; ++c)
        if (!o(k, c).is_zero()) out(r, c) = out(r, c) + a * o(k, c);
    }
  return out;
}

Eigen::MatrixXd ChannelRep::to_double() const {
  Eigen::MatrixXd m(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).to_double();
  return m;
}

ChannelRep channel_rep(const ExactMatrix& u) {
  const std::size_t d = u.dim();
  const int n = log2_exact(d);
  const std::size_t np = d * d;
  const ExactMatrix ud = u.adjoint();
  ChannelRep out(np);
  for (std::size_t i = 0; i < np; ++i) {
    // U·P_i built column by column, then conjugated.
    ExactMatrix up(d);
    for (std::size_t c = 0; c < d; ++c) {
      const auto pc = pauli_column(i, c, n);
      for (std::size_t r = 0; r < d; ++r) up(r, c) = u(r, c ^ pc.flip).mul_zeta(pc.phase);
    }
    const ExactMatrix a = up * ud;
    for (std::size_t j = 0; j < np; ++j) {
      ExactScalar tr(0);
      for (std::size_t c = 0; c < d; ++c) {
        const auto pc = pauli_column(j, c, n);
        const ExactScalar& v = a(c, c ^ pc.flip);
        if (!v.is_zero()) tr += v.mul_zeta(pc.phase);
      }
      if (!tr.is_real()) throw NonRealEntry("channel_rep: entry has an imaginary part");
      const DyadicRootTwo re = tr.real_part();
      out(i, j) = DyadicRootTwo(re.num(), re.k() + 2 * n);
    }
  }
  return out;
}

int sde_channel(const ChannelRep& r) {
  int best = 0;
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j) best = std::max(best, sde(r(i, j)));
  return best;
}

ChannelRep extract_block_channel(const ChannelRep& r, int i) {
  const int n = log2_exact(r.dim()) / 2 - 1;
  if (n < 0 || (std::size_t{1} << (2 * (n + 1))) != r.dim())
    throw DimensionMismatch("extract_block_channel: not an (n+1)-qubit channel rep");
  if (i < 0 || i >= (1 << n)) throw InconsistentInput("extract_block_channel: block index");
  const std::size_t nk = std::size_t{1} << (2 * n);
  auto iz_only = [n](std::size_t k) {
    for (int q = 0; q < n; ++q) {
      const auto digit = (k >> (2 * q)) & 3;
      if (digit == 1 || digit == 2) return false;
    }
    return true;
  };
  // A block-diagonal unitary never maps an I/Z control Pauli onto X/Y ones.
  for (std::size_t k = 0; k < nk; ++k) {
    if (!iz_only(k)) continue;
    for (std::size_t k2 = 0; k2 < nk; ++k2) {
      if (iz_only(k2)) continue;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
          if (!r(4 * k + a, 4 * k2 + b).is_zero())
            throw NotBlockDiagonal("channel rep mixes control Paulis");
    }
  }
  ChannelRep out(4);
  for (std::size_t k = 0; k < nk; ++k) {
    if (!iz_only(k)) continue;
    int sign = 1;
    for (int q = 0; q < n; ++q) {
      const auto digit = (k >> (2 * (n - 1 - q))) & 3;
      if (digit == 3 && ((i >> (n - 1 - q)) & 1)) sign = -sign;
    }
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        const auto& v = r(4 * k + a, b);
        out(a, b) = sign > 0 ? out(a, b) + v : out(a, b) - v;
      }
  }
  return out;
}

LowerBoundReport lower_bound_check(const Circuit& c) {
  const auto& regs = c.registers();
  if (regs.n_clean != 0 || regs.n_dirty != 0)
    throw InconsistentInput("lower_bound_check: circuit must be ancilla-free");
  const ExactMatrix u = exact_simulate(c);
  block_diagonal_extract(u, regs.n_control);
  const ChannelRep r = channel_rep(u);
  LowerBoundReport rep;
  rep.t_count = c.t_count();
  rep.sde_full = sde_channel(r);
  for (int i = 0; i < (1 << regs.n_control); ++i) {
    rep.block_sde.push_back(sde_channel(extract_block_channel(r, i)));
    rep.max_block_sde = std::max(rep.max_block_sde, rep.block_sde.back());
  }
  return rep;
}

}  // namespace ctsynth
