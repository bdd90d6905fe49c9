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

#include "ctsynth/ring.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace ctsynth {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double pow_sqrt2_inv(int k) { return std::pow(kSqrt2, -k); }

// Brings both operands to the larger exponent.
template <typename Num, typename Lift>
void align(Num& x, int kx, Num& y, int ky, Lift lift) {
  while (kx < ky) {
    x = lift(x);
    ++kx;
  }
  while (ky < kx) {
    y = lift(y);
    ++ky;
  }
}

}  // namespace

double RootTwoInt::to_double() const { return a_.get_d() + b_.get_d() * kSqrt2; }

DyadicRootTwo::DyadicRootTwo(RootTwoInt num, int k) : num_(std::move(num)), k_(k) {
  assert(k >= 0);
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && num_.divisible_by_sqrt2()) {
    num_ = num_.div_sqrt2();
    --k_;
  }
}

DyadicRootTwo DyadicRootTwo::operator+(const DyadicRootTwo& o) const {
  RootTwoInt x = num_, y = o.num_;
  align(x, k_, y, o.k_, [](const RootTwoInt& v) { return v.mul_sqrt2(); });
  return {x + y, std::max(k_, o.k_)};
}

DyadicRootTwo DyadicRootTwo::operator-(const DyadicRootTwo& o) const { return *this + (-o); }

double DyadicRootTwo::to_double() const { return num_.to_double() * pow_sqrt2_inv(k_); }

std::string DyadicRootTwo::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

int sde(const DyadicRootTwo& x) { return x.k(); }

OmegaInt OmegaInt::zeta(int k) {
  int r = ((k % 8) + 8) % 8;
  OmegaInt out;
  out.c_[static_cast<std::size_t>(r % 4)] = r < 4 ? 1 : -1;
  return out;
}

OmegaInt OmegaInt::operator+(const OmegaInt& o) const {
  return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

OmegaInt OmegaInt::operator-(const OmegaInt& o) const {
  return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}

OmegaInt OmegaInt::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

OmegaInt OmegaInt::operator*(const OmegaInt& o) const {
  std::array<BigInt, 7> s;
  for (auto& v : s) v = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) s[i + j] += c_[i] * o.c_[j];
  }
  return {s[0] - s[4], s[1] - s[5], s[2] - s[6], s[3]};
}

OmegaInt OmegaInt::operator*(const BigInt& s) const {
  return {c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s};
}

OmegaInt OmegaInt::conj() const { return {c_[0], -c_[3], -c_[2], -c_[1]}; }

OmegaInt OmegaInt::mul_zeta(int k) const {
  int r = ((k % 8) + 8) % 8;
  OmegaInt out = *this;
  for (int i = 0; i < r; ++i) out = OmegaInt(-out.c_[3], out.c_[0], out.c_[1], out.c_[2]);
  return out;
}

OmegaInt OmegaInt::mul_sqrt2() const {
  const auto& [a, b, c, d] = c_;
  return {b - d, a + c, b + d, c - a};
}

bool OmegaInt::divisible_by_sqrt2() const {
  auto parity = [](const BigInt& v) { return mpz_odd_p(v.get_mpz_t()) != 0; };
  return parity(c_[0]) == parity(c_[2]) && parity(c_[1]) == parity(c_[3]);
}

OmegaInt OmegaInt::div_sqrt2() const {
  const auto& [a, b, c, d] = c_;
  return {BigInt((b - d) / 2), BigInt((a + c) / 2), BigInt((b + d) / 2), BigInt((c - a) / 2)};
}

std::complex<double> OmegaInt::to_complex() const {
  const double a = c_[0].get_d(), b = c_[1].get_d(), c = c_[2].get_d(), d = c_[3].get_d();
  return {a + (b - d) / kSqrt2, c + (b + d) / kSqrt2};
}

std::string OmegaInt::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

ExactScalar::ExactScalar(OmegaInt num, int k) : num_(std::move(num)), k_(k) {
  assert(k >= 0);
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && num_.divisible_by_sqrt2()) {
    num_ = num_.div_sqrt2();
    --k_;
  }
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  OmegaInt x = num_, y = o.num_;
  align(x, k_, y, o.k_, [](const OmegaInt& v) { return v.mul_sqrt2(); });
  return ExactScalar(x + y, std::max(k_, o.k_));
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

bool ExactScalar::is_real() const {
  return num_.coeff(2) == 0 && num_.coeff(1) == -num_.coeff(3);
}

DyadicRootTwo ExactScalar::real_part() const {
  assert(is_real());
  return DyadicRootTwo(RootTwoInt(num_.coeff(0), num_.coeff(1)), k_);
}

std::complex<double> ExactScalar::to_complex() const {
  return num_.to_complex() * pow_sqrt2_inv(k_);
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

ExactScalar reduce(const OmegaInt& num, int k) { return ExactScalar(num, k); }

std::complex<double> to_complex(const ExactScalar& x) { return x.to_complex(); }

std::ostream& operator<<(std::ostream& os, const OmegaInt& x) {
  return os << '(' << x.coeff(0) << ',' << x.coeff(1) << ',' << x.coeff(2) << ',' << x.coeff(3)
            << ')';
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << x.num() << "/r2^" << x.k();
}

std::ostream& operator<<(std::ostream& os, const DyadicRootTwo& x) {
  return os << '(' << x.num().a() << '+' << x.num().b() << "r2)/r2^" << x.k();
}

}  // namespace ctsynth
