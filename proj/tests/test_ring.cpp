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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ctsynth/ring.hpp"

namespace {

using namespace ctsynth;
using cd = std::complex<double>;

// sde by direct search: √2^k·(a + b√2)/2^j ∈ Z[√2], using only integer tests.
int brute_sde(long a, long b, int j) {
  for (int k = 0;; ++k) {
    const long t = 1L << (k / 2);
    long x = a * t, y = b * t;
    if (k % 2) std::tie(x, y) = std::make_pair(2 * y, x);
    if (x % (1L << j) == 0 && y % (1L << j) == 0) return k;
  }
}

OmegaInt rand_omega(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<long> d(-range, range);
  return OmegaInt(d(rng), d(rng), d(rng), d(rng));
}

cd omega_value(const OmegaInt& x) {
  cd v = 0;
  for (int i = 0; i < 4; ++i) v += x.coeff(i).get_d() * std::polar(1.0, M_PI / 4 * i);
  return v;
}

TEST(Sde, Examples) {
  EXPECT_EQ(sde(DyadicRootTwo(RootTwoInt(3))), 0);
  EXPECT_EQ(sde(DyadicRootTwo(RootTwoInt(1), 1)), 1);
  EXPECT_EQ(sde(DyadicRootTwo(RootTwoInt(1, 1), 2)), 2);
  EXPECT_EQ(brute_sde(1, 1, 1), 2);
}

TEST(Sde, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-40, 40);
  std::uniform_int_distribution<int> jd(0, 5);
  for (int it = 0; it < 500; ++it) {
    const long a = d(rng), b = d(rng);
    if (a == 0 && b == 0) continue;
    const int j = jd(rng);
    EXPECT_EQ(sde(DyadicRootTwo(RootTwoInt(a, b), 2 * j)), brute_sde(a, b, j)) << a << " " << b << " " << j;
  }
}

TEST(Sde, SubadditiveUnderProductAndSum) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> d(-30, 30);
  std::uniform_int_distribution<int> kd(0, 8);
  for (int it = 0; it < 500; ++it) {
    const DyadicRootTwo x(RootTwoInt(d(rng), d(rng)), kd(rng)), y(RootTwoInt(d(rng), d(rng)), kd(rng));
    EXPECT_LE(sde(x * y), sde(x) + sde(y));
    EXPECT_LE(sde(x + y), std::max(sde(x), sde(y)));
  }
}

TEST(Reduce, Examples) {
  const ExactScalar a = reduce(OmegaInt(0, 1, 0, -1), 1);
  EXPECT_EQ(a.k(), 0);
  EXPECT_EQ(a.num(), OmegaInt(1));
  const ExactScalar b = reduce(OmegaInt(2), 2);
  EXPECT_EQ(b.k(), 0);
  EXPECT_EQ(b.num(), OmegaInt(1));
  // (1 + ζ²)/√2 = ζ.
  const ExactScalar c = reduce(OmegaInt(1, 0, 1, 0), 1);
  EXPECT_EQ(c.k(), 0);
  EXPECT_EQ(c.num(), OmegaInt::zeta(1));
  const ExactScalar d = reduce(OmegaInt(1, 1, 0, 0), 1);
  EXPECT_EQ(d.k(), 1);
  EXPECT_EQ(d.num(), OmegaInt(1, 1, 0, 0));
}

TEST(Reduce, PreservesValueAndIsMinimal) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 500; ++it) {
    const OmegaInt x = rand_omega(rng, 50);
    const int k = static_cast<int>(rng() % 7);
    const ExactScalar r = reduce(x, k);
    EXPECT_LT(std::abs(r.to_complex() - omega_value(x) / std::pow(std::sqrt(2.0), k)), 1e-9);
    if (r.k() > 0) EXPECT_FALSE(r.num().divisible_by_sqrt2());
  }
}

TEST(ToComplex, Examples) {
  EXPECT_LT(std::abs(ExactScalar(1).to_complex() - cd(1, 0)), 1e-15);
  EXPECT_LT(std::abs(ExactScalar::zeta(1).to_complex() - std::sqrt(0.5) * cd(1, 1)), 1e-15);
  EXPECT_LT(std::abs(ExactScalar(OmegaInt(1, 0, 1, 0), 1).to_complex() - cd(1, 1) / std::sqrt(2.0)), 1e-15);
}

TEST(ToComplex, IsHomomorphism) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 300; ++it) {
    const ExactScalar x(rand_omega(rng, 1 << 20), static_cast<int>(rng() % 5));
    const ExactScalar y(rand_omega(rng, 1 << 20), static_cast<int>(rng() % 5));
    const double scale = std::max(1.0, std::abs(x.to_complex()) * std::abs(y.to_complex()));
    EXPECT_LT(std::abs((x * y).to_complex() - x.to_complex() * y.to_complex()) / scale, 1e-12);
    EXPECT_LT(std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())), 1e-12 * (1 << 21));
  }
}

TEST(RingLaws, OmegaInt) {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 300; ++it) {
    const OmegaInt a = rand_omega(rng, 1000), b = rand_omega(rng, 1000), c = rand_omega(rng, 1000);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ(a.mul_zeta(8), a);
    EXPECT_EQ(a.mul_zeta(3), a * OmegaInt::zeta(3));
  }
  EXPECT_EQ(OmegaInt::zeta(4), OmegaInt(-1));
}

TEST(RingLaws, RootTwoInt) {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int it = 0; it < 300; ++it) {
    const RootTwoInt a(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
  }
}

TEST(RingLaws, BigCoefficientsStayExact) {
  // (1 + √2)^80 has coefficients far past 64 bits; its conjugate norm stays 1.
  RootTwoInt p(1), u(1, 1);
  for (int i = 0; i < 80; ++i) p = p * u;
  const RootTwoInt n = p * p.conj();
  EXPECT_EQ(n, RootTwoInt(1));
  EXPECT_GT(mpz_sizeinbase(p.a().get_mpz_t(), 2), 64u);
}

TEST(ExactScalar, SqrtTwoFactorization) {
  const ExactScalar r2(OmegaInt(0, 1, 0, -1));
  EXPECT_LT(std::abs(r2.to_complex() - std::sqrt(2.0)), 1e-15);
  EXPECT_EQ(r2 * ExactScalar::inv_sqrt2(), ExactScalar(1));
  EXPECT_TRUE(r2.is_real());
  EXPECT_EQ(r2.real_part(), DyadicRootTwo(RootTwoInt(0, 1)));
}

}  // namespace
