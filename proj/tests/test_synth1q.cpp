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

#include "ctsynth/errors.hpp"
#include "ctsynth/random.hpp"
#include "ctsynth/synth1q.hpp"
#include "oracles.hpp"

namespace {

using namespace ctsynth;
using namespace oracle;

double frob(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) { return (a - b).norm(); }

// First enumerated form (in (T-count, F, syllables, C) order) within eps.
std::optional<NormalForm> brute_force(const Eigen::Matrix2cd& target, double eps, Parity p, int cap) {
  for (int m = 0; m <= cap; m += p == Parity::Even ? 2 : 1)
    for (const auto& f : enumerate(m))
      if (hull_diamond(evaluate_float(f), target) < eps) return f;
  return std::nullopt;
}

TEST(ApproxSu2, Identity) {
  const SynthResult r = approx_su2({Eigen::Matrix2cd::Identity(), 0.1, Parity::Even, 26});
  EXPECT_EQ(r.t_count, 0);
  EXPECT_NEAR(r.achieved_distance, 0, 1e-12);
}

TEST(ApproxSu2, ExactT) {
  const Eigen::Matrix2cd t = fT() * std::polar(1.0, -M_PI / 8);
  const SynthResult r = approx_su2({t, 1e-9, Parity::Any, 26});
  EXPECT_EQ(r.t_count, 1);
  EXPECT_LT(r.achieved_distance, 1e-9);
  EXPECT_TRUE(equal_up_to_zeta(evaluate(r.form), eT()).has_value());
}

TEST(ApproxSu2, SmallZRotationIsMinimalEven) {
  const Eigen::Matrix2cd u = m2(std::polar(1.0, M_PI / 128), 0, 0, std::polar(1.0, -M_PI / 128));
  const SynthResult r = approx_su2({u, 0.05, Parity::Even, 26});
  EXPECT_EQ(r.t_count % 2, 0);
  EXPECT_LT(r.achieved_distance, 0.05);
  EXPECT_LT(hull_diamond(evaluate_float(r.form), u), 0.05);
  const auto b = brute_force(u, 0.05, Parity::Even, r.t_count);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->t_count(), r.t_count);
}

TEST(ApproxSu2, AgreesWithBruteForceAtSmallScale) {
  std::mt19937_64 rng(41);
  for (double eps : {0.2, 0.3}) {
    for (Parity p : {Parity::Even, Parity::Any}) {
      for (int it = 0; it < 10; ++it) {
        const Eigen::Matrix2cd u = haar_su2(rng);
        const auto b = brute_force(u, eps, p, 10);
        ASSERT_TRUE(b.has_value());
        const SynthResult r = approx_su2({u, eps, p, 10});
        EXPECT_EQ(r.t_count, b->t_count());
        NormalForm unphased = r.form;
        unphased.phase_exp = 0;
        // Forms at the ε boundary may legitimately differ by rounding.
        if (std::abs(hull_diamond(evaluate_float(*b), u) - eps) > 1e-9) EXPECT_EQ(unphased, *b);
      }
    }
  }
}

TEST(ApproxSu2, ParityAndDistance) {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 60; ++it) {
    const Eigen::Matrix2cd u = haar_su2(rng);
    const double eps = it % 2 ? 0.1 : 0.05;
    const SynthResult r = approx_su2({u, eps, Parity::Even, 26});
    EXPECT_EQ(r.t_count % 2, 0);
    EXPECT_EQ(r.t_count, r.form.t_count());
    EXPECT_LT(r.achieved_distance, eps);
    EXPECT_NEAR(hull_diamond(evaluate_float(r.form), u), r.achieved_distance, 1e-9);
  }
}

TEST(ApproxSu2, Deterministic) {
  std::mt19937_64 rng(43);
  const Eigen::Matrix2cd u = haar_su2(rng);
  const SynthResult a = approx_su2({u, 0.05, Parity::Even, 26});
  const SynthResult b = approx_su2({u, 0.05, Parity::Even, 26});
  EXPECT_EQ(a.form, b.form);
}

TEST(ApproxSu2, Errors) {
  std::mt19937_64 rng(44);
  const Eigen::Matrix2cd u = haar_su2(rng);
  EXPECT_THROW(approx_su2({u, 1e-6, Parity::Even, 8}), EpsilonTooSmall);
  EXPECT_THROW(approx_su2({u, 0.0, Parity::Even, 8}), InconsistentInput);
  EXPECT_THROW(approx_su2({u, 1.5, Parity::Even, 8}), InconsistentInput);
}

TEST(ChoosePhase, Examples) {
  NormalForm f;
  f.f = kFH;
  f.syllables = {kTSH, kTH};
  f.c = 5;
  const Eigen::Matrix2cd e = evaluate_float(f);
  EXPECT_EQ(choose_phase(e, f), 0);
  EXPECT_EQ(choose_phase(e * std::polar(1.0, 3 * M_PI / 4), f), 3);
}

TEST(ChoosePhase, MinimizesFrobenius) {
  std::mt19937_64 rng(45);
  const auto forms = enumerate(2);
  for (int it = 0; it < 200; ++it) {
    const Eigen::Matrix2cd u = haar_su2(rng);
    const NormalForm& f = forms[rng() % forms.size()];
    const int s = choose_phase(u, f);
    const Eigen::Matrix2cd e = evaluate_float(f);
    for (int k = 0; k < 8; ++k)
      EXPECT_LE(frob(u, std::polar(1.0, M_PI / 4 * s) * e), frob(u, std::polar(1.0, M_PI / 4 * k) * e) + 1e-12);
    // Even T-count: eigenphases of u†·ζ^s·e are ±θ with |sin θ| the distance.
    Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(u.adjoint() * std::polar(1.0, M_PI / 4 * s) * e);
    const auto ev = es.eigenvalues();
    EXPECT_NEAR(std::arg(ev(0)), -std::arg(ev(1)), 1e-9);
    EXPECT_LE(std::abs(std::arg(ev(0))), M_PI / 2 + 1e-9);
    EXPECT_NEAR(std::abs(std::sin(std::arg(ev(0)))), distance_2x2(u, e), 1e-9);
  }
}

TEST(ToSu2, BranchAndDeterminant) {
  std::mt19937_64 rng(46);
  for (int it = 0; it < 100; ++it) {
    const Eigen::Matrix2cd u = haar_u2(rng);
    const Eigen::Matrix2cd v = to_su2(u);
    EXPECT_NEAR(std::abs(v.determinant() - 1.0), 0, 1e-12);
    EXPECT_GE(v.trace().real(), -1e-12);
    EXPECT_NEAR(hull_diamond(u, v), 0, 1e-7);
  }
}

}  // namespace
