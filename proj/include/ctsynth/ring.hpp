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

// Exact arithmetic over Z[√2], Z[1/√2] and Z[ζ] with ζ = e^{iπ/4}.
//
// Values are immutable and every operation returns a fresh value. Integer
// coefficients are arbitrary precision.

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ctsynth {

using BigInt = mpz_class;

/// a + b√2 with integer a, b.
class RootTwoInt {
 public:
  RootTwoInt() = default;
  RootTwoInt(BigInt a, BigInt b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  RootTwoInt(long a) : a_(a), b_(0) {}

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  RootTwoInt operator+(const RootTwoInt& o) const { return {a_ + o.a_, b_ + o.b_}; }
  RootTwoInt operator-(const RootTwoInt& o) const { return {a_ - o.a_, b_ - o.b_}; }
  RootTwoInt operator-() const { return {-a_, -b_}; }
  RootTwoInt operator*(const RootTwoInt& o) const {
    return {a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
  }
  bool operator==(const RootTwoInt& o) const { return a_ == o.a_ && b_ == o.b_; }

  /// a − b√2.
  RootTwoInt conj() const { return {a_, -b_}; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  /// True when the value is √2·y for some y in Z[√2].
  bool divisible_by_sqrt2() const { return mpz_even_p(a_.get_mpz_t()) != 0; }
  /// Precondition: divisible_by_sqrt2().
  RootTwoInt div_sqrt2() const { return {b_, a_ / 2}; }
  RootTwoInt mul_sqrt2() const { return {2 * b_, a_}; }
  double to_double() const;

 private:
  BigInt a_ = 0;
  BigInt b_ = 0;
};

/// num / √2^k, kept canonical: k == 0 or num not divisible by √2.
class DyadicRootTwo {
 public:
  DyadicRootTwo() = default;
  DyadicRootTwo(RootTwoInt num, int k = 0);

  const RootTwoInt& num() const { return num_; }
  int k() const { return k_; }

  DyadicRootTwo operator+(const DyadicRootTwo& o) const;
  DyadicRootTwo operator-(const DyadicRootTwo& o) const;
  DyadicRootTwo operator-() const { return {-num_, k_}; }
  DyadicRootTwo operator*(const DyadicRootTwo& o) const { return {num_ * o.num_, k_ + o.k_}; }
  bool operator==(const DyadicRootTwo& o) const { return k_ == o.k_ && num_ == o.num_; }

  bool is_zero() const { return num_.is_zero(); }
  double to_double() const;
  std::string to_string() const;

 private:
  RootTwoInt num_;
  int k_ = 0;
};

/// Smallest k ≥ 0 with √2^k·x ∈ Z[√2].
int sde(const DyadicRootTwo& x);

/// a + bζ + cζ² + dζ³ with ζ⁴ = −1.
class OmegaInt {
 public:
  OmegaInt() = default;
  OmegaInt(BigInt a, BigInt b, BigInt c, BigInt d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  OmegaInt(long a) : c_{BigInt(a), BigInt(0), BigInt(0), BigInt(0)} {}

  /// ζ^k for any integer k.
  static OmegaInt zeta(int k);

  const BigInt& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  OmegaInt operator+(const OmegaInt& o) const;
  OmegaInt operator-(const OmegaInt& o) const;
  OmegaInt operator-() const;
  OmegaInt operator*(const OmegaInt& o) const;
  OmegaInt operator*(const BigInt& s) const;
  bool operator==(const OmegaInt& o) const { return c_ == o.c_; }

  /// Complex conjugate (ζ ↦ ζ⁷).
  OmegaInt conj() const;
  /// Multiply by ζ^k.
  OmegaInt mul_zeta(int k) const;
  OmegaInt mul_sqrt2() const;
  /// a ≡ c and b ≡ d (mod 2), using √2 = ζ − ζ³.
  bool divisible_by_sqrt2() const;
  /// Precondition: divisible_by_sqrt2().
  OmegaInt div_sqrt2() const;
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  std::array<BigInt, 4> c_{BigInt(0), BigInt(0), BigInt(0), BigInt(0)};
};

/// num / √2^k with canonical (minimal) k; the entry type of exact unitaries.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : num_(v), k_(0) {}
  ExactScalar(OmegaInt num, int k = 0);

  static ExactScalar zeta(int k) { return ExactScalar(OmegaInt::zeta(k)); }
  /// 1/√2.
  static ExactScalar inv_sqrt2() { return ExactScalar(OmegaInt(1), 1); }

  const OmegaInt& num() const { return num_; }
  int k() const { return k_; }

  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator-() const { return ExactScalar(-num_, k_); }
  ExactScalar operator*(const ExactScalar& o) const { return ExactScalar(num_ * o.num_, k_ + o.k_); }
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  bool operator==(const ExactScalar& o) const { return k_ == o.k_ && num_ == o.num_; }

  ExactScalar conj() const { return ExactScalar(num_.conj(), k_); }
  ExactScalar mul_zeta(int k) const { return ExactScalar(num_.mul_zeta(k), k_); }
  ExactScalar div_sqrt2() const { return ExactScalar(num_, k_ + 1); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_real() const;
  /// Precondition: is_real().
  DyadicRootTwo real_part() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  OmegaInt num_;
  int k_ = 0;
};

/// Canonicalize num / √2^k. Precondition: k ≥ 0.
ExactScalar reduce(const OmegaInt& num, int k);

std::complex<double> to_complex(const ExactScalar& x);

std::ostream& operator<<(std::ostream& os, const OmegaInt& x);
std::ostream& operator<<(std::ostream& os, const ExactScalar& x);
std::ostream& operator<<(std::ostream& os, const DyadicRootTwo& x);

}  // namespace ctsynth
