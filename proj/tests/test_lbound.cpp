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

#include <random>

#include <gtest/gtest.h>

#include "ctsynth/ctrl.hpp"
#include "ctsynth/errors.hpp"
#include "ctsynth/lbound.hpp"
#include "ctsynth/random.hpp"
#include "ctsynth/synth1q.hpp"
#include "oracles.hpp"

namespace {

using namespace ctsynth;
using namespace oracle;

Eigen::MatrixXcd pauli_n(std::size_t idx, int n) {
  const Eigen::Matrix2cd p[] = {Eigen::Matrix2cd::Identity(), fX(), m2(0, cd(0, -1), cd(0, 1), 0), fZ()};
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) m = kron(m, p[(idx >> (2 * q)) & 3]);
  return m;
}

Eigen::MatrixXd float_channel(const Eigen::MatrixXcd& u) {
  int n = 0;
  while ((Eigen::Index{1} << n) < u.rows()) ++n;
  const std::size_t d = std::size_t{1} << (2 * n);
  Eigen::MatrixXd r(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (u * pauli_n(i, n) * u.adjoint() * pauli_n(j, n)).trace().real() / static_cast<double>(1 << n);
  return r;
}

Circuit random_circuit(std::mt19937_64& rng, int nq, int len) {
  Circuit c(Registers{nq - 1, 1, 0, 0});
  for (int i = 0; i < len; ++i) {
    const int q = static_cast<int>(rng() % nq);
    switch (rng() % 4) {
      case 0: c.h(q); break;
      case 1: c.s(q); break;
      case 2: c.t(q); break;
      default:
        if (nq > 1) c.cnot(q, (q + 1) % nq);
    }
  }
  return c;
}

TEST(ChannelRep, Examples) {
  const ChannelRep id = channel_rep(eI());
  EXPECT_LT((id.to_double() - Eigen::Matrix4d::Identity()).norm(), 1e-15);
  const ChannelRep t = channel_rep(eT());
  const DyadicRootTwo r(RootTwoInt(1), 1);
  EXPECT_EQ(t(1, 1), r);
  EXPECT_EQ(t(1, 2), r);
  EXPECT_EQ(t(2, 1), -r);
  EXPECT_EQ(t(2, 2), r);
  EXPECT_EQ(t(0, 0), DyadicRootTwo(RootTwoInt(1)));
  EXPECT_EQ(t(3, 3), DyadicRootTwo(RootTwoInt(1)));
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  h(0, 0) = 1;
  h(1, 3) = 1;
  h(3, 1) = 1;
  h(2, 2) = -1;
  EXPECT_LT((channel_rep(eH()).to_double() - h).norm(), 1e-15);
}

TEST(ChannelRep, MatchesFloatDefinition) {
  std::mt19937_64 rng(71);
  for (int it = 0; it < 20; ++it) {
    const Circuit c = random_circuit(rng, 1 + it % 3, 25);
    const ExactMatrix u = exact_simulate(c);
    EXPECT_LT((channel_rep(u).to_double() - float_channel(u.to_complex())).norm(), 1e-10);
  }
}

TEST(ChannelRep, CompositionAndPhaseBlindness) {
  std::mt19937_64 rng(72);
  for (int it = 0; it < 20; ++it) {
    const int nq = 1 + it % 2;
    const ExactMatrix u = exact_simulate(random_circuit(rng, nq, 20));
    const ExactMatrix v = exact_simulate(random_circuit(rng, nq, 20));
    // With rows indexed by the input Pauli, composition reverses order.
    EXPECT_EQ(channel_rep(u * v), channel_rep(v) * channel_rep(u));
    EXPECT_EQ(channel_rep(u.mul_zeta(it % 8)), channel_rep(u));
  }
}

TEST(Sde, CliffordAndT) {
  std::mt19937_64 rng(73);
  Circuit c(Registers{1, 1, 0, 0});
  for (int i = 0; i < 30; ++i) {
    if (rng() % 3 == 0) c.cnot(0, 1);
    else if (rng() % 2) c.h(static_cast<int>(rng() % 2));
    else c.s(static_cast<int>(rng() % 2));
  }
  EXPECT_EQ(sde_channel(channel_rep(exact_simulate(c))), 0);
  EXPECT_EQ(sde_channel(channel_rep(eT())), 1);
  for (int m = 0; m <= 5; ++m)
    for (const auto& f : enumerate(m)) ASSERT_EQ(sde_channel(channel_rep(evaluate(f))), m);
}

TEST(ExtractBlock, Cnot) {
  Circuit cx(Registers{1, 1, 0, 0});
  cx.cnot(0, 1);
  const ChannelRep r = channel_rep(exact_simulate(cx));
  EXPECT_EQ(extract_block_channel(r, 0), channel_rep(eI()));
  EXPECT_EQ(extract_block_channel(r, 1), channel_rep(eX()));
  Circuit sw(Registers{1, 1, 0, 0});
  sw.add(GateKind::SWAP, 0, 1);
  EXPECT_THROW(extract_block_channel(channel_rep(exact_simulate(sw)), 0), NotBlockDiagonal);
}

TEST(ExtractBlock, CompiledBlocksMatchDirect) {
  std::mt19937_64 rng(74);
  for (int n = 1; n <= 2; ++n) {
    for (int it = 0; it < 3; ++it) {
      std::vector<ExactMatrix> blocks;
      for (int i = 0; i < (1 << n); ++i) blocks.push_back(exact_simulate(random_circuit(rng, 1, 12)));
      const ChannelRep r = channel_rep(ExactMatrix::direct_sum(blocks));
      for (int i = 0; i < (1 << n); ++i)
        EXPECT_EQ(extract_block_channel(r, i), channel_rep(blocks[static_cast<std::size_t>(i)]));
    }
  }
  const auto c = synth_controlled_su2({haar_su2(rng), haar_su2(rng)}, 0.1, CtrlMode::AncillaFree);
  const ChannelRep r = channel_rep(exact_simulate(c.circuit));
  for (int i = 0; i < 2; ++i)
    EXPECT_EQ(extract_block_channel(r, i), channel_rep(c.branches[static_cast<std::size_t>(i)]));
}

TEST(LowerBound, Chain) {
  Circuit cl(Registers{1, 1, 0, 0});
  cl.h(1);
  cl.cnot(0, 1);
  cl.s(0);
  cl.h(1);
  const LowerBoundReport z = lower_bound_check(cl);
  EXPECT_EQ(z.t_count, 0);
  EXPECT_EQ(z.sde_full, 0);
  EXPECT_EQ(z.max_block_sde, 0);

  std::mt19937_64 rng(75);
  const Eigen::Matrix2cd tlike = to_su2(fT() * fH() * fT() * fH());
  for (const auto& target : {tlike, haar_su2(rng), haar_su2(rng)}) {
    const auto c = synth_controlled_su2({Eigen::Matrix2cd::Identity(), target}, 0.1, CtrlMode::AncillaFree);
    const LowerBoundReport rep = lower_bound_check(c.circuit);
    EXPECT_TRUE(rep.chain_holds());
    EXPECT_EQ(rep.t_count, c.circuit.t_count());
    ASSERT_EQ(rep.block_sde.size(), 2u);
    for (int i = 0; i < 2; ++i)
      EXPECT_EQ(rep.block_sde[static_cast<std::size_t>(i)], sde_channel(channel_rep(c.branches[static_cast<std::size_t>(i)])));
  }
  Circuit anc(Registers{1, 1, 1, 0});
  EXPECT_THROW(lower_bound_check(anc), InconsistentInput);
}

TEST(LowerBound, PaddedBranchCircuits) {
  std::mt19937_64 rng(76);
  for (int it = 0; it < 20; ++it) {
    NormalForm f;
    const int m = 2 * static_cast<int>(rng() % 4);
    f.f = m == 0 ? kFI : static_cast<int>(rng() % 3);
    for (int j = 0; j < m; ++j) f.syllables.push_back(static_cast<int>(rng() % 2));
    if (m) f.syllables.back() = kTH;
    f.c = static_cast<int>(rng() % 24);
    const PaddedForm p = pad_to(f, m + 2 * static_cast<int>(rng() % 3));
    Circuit c(Registers{0, 1, 0, 0});
    for (GateKind g : form_gates(f)) c.add(g, 0);
    const int sde = sde_channel(channel_rep(evaluate_padded(p)));
    EXPECT_GE(c.t_count(), sde);
    EXPECT_EQ(sde, m);
  }
}

}  // namespace
