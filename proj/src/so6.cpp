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
#include <mutex>

#include "ctsynth/apps.hpp"
#include "ctsynth/errors.hpp"

namespace ctsynth {

namespace {

using cd = std::complex<double>;

Eigen::Matrix2cd pauli1(char p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw InconsistentInput(std::string("unknown Pauli '") + p + "'");
  }
  return m;
}

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

// Ordered real basis of the antisymmetric 4×4 matrices; entry k is axis k+1.
const std::array<Eigen::Matrix4cd, 6>& axis_basis() {
  static const std::array<Eigen::Matrix4cd, 6> b = [] {
    const cd i(0, 1);
    return std::array<Eigen::Matrix4cd, 6>{pauli2("YZ"), i * pauli2("YI"), pauli2("YX"),
                                           i * pauli2("ZY"), pauli2("IY"), i * pauli2("XY")};
  }();
  return b;
}

// Listed assignments; kappa is filled in by calibration.
const char* kPlaneLabels[15] = {"IX", "IY", "IZ", "XI", "YI", "ZI", "XX", "YX",
                                "ZX", "XY", "YY", "ZY", "XZ", "YZ", "ZZ"};
const int kPlaneAxes[15][2] = {{2, 3}, {1, 3}, {1, 2}, {5, 6}, {4, 6}, {4, 5}, {1, 4}, {1, 5},
                               {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}};

void check_su4(const Eigen::Matrix4cd& u) {
  if ((u.adjoint() * u - Eigen::Matrix4cd::Identity()).norm() > 1e-9 || std::abs(u.determinant() - 1.0) > 1e-9)
    throw NotSpecialUnitary("matrix is not in SU(4)");
}

double givens_angle(double wa, double wb, int kappa) {
  if (std::abs(wa) < 1e-12 && wb >= 0) return 0;
  return std::atan2(-kappa * wa, wb) / 2;
}

}  // namespace

Eigen::Matrix4cd pauli2(const std::string& label) {
  if (label.size() != 2) throw InconsistentInput("two-qubit Pauli label expected");
  return kron2(pauli1(label[0]), pauli1(label[1]));
}

Eigen::Matrix4cd pauli_exp(const std::string& label, double theta) {
  return std::cos(theta) * Eigen::Matrix4cd::Identity() + cd(0, std::sin(theta)) * pauli2(label);
}

Eigen::Matrix2cd pauli1_exp(char p, double theta) {
  return std::cos(theta) * Eigen::Matrix2cd::Identity() + cd(0, std::sin(theta)) * pauli1(p);
}

Matrix6d so6_rep(const Eigen::Matrix4cd& u) {
  check_su4(u);
  const auto& e = axis_basis();
  Matrix6d r;
  for (int l = 0; l < 6; ++l) {
    const Eigen::Matrix4cd el = e[static_cast<std::size_t>(l)].adjoint();
    for (int k = 0; k < 6; ++k)
      r(l, k) = (el * u * e[static_cast<std::size_t>(k)] * u.transpose()).trace().real() / 4;
  }
  return r;
}

const std::vector<PlaneEntry>& pauli_plane_table() {
  static const std::vector<PlaneEntry> table = [] {
    std::vector<PlaneEntry> t;
    const double theta = 0.3;
    for (int p = 0; p < 15; ++p) {
      const Matrix6d r = so6_rep(pauli_exp(kPlaneLabels[p], theta));
      const int a = kPlaneAxes[p][0] - 1, b = kPlaneAxes[p][1] - 1;
      for (int k = 0; k < 6; ++k)
        if (k != a && k != b && std::abs(r(k, k) - 1) > 1e-9)
          throw InconsistentInput(std::string("plane calibration failed for ") + kPlaneLabels[p]);
      const double s = r(b, a);
      if (std::abs(std::abs(s) - std::sin(2 * theta)) > 1e-9 || std::abs(r(a, a) - std::cos(2 * theta)) > 1e-9)
        throw InconsistentInput(std::string("angle calibration failed for ") + kPlaneLabels[p]);
      t.push_back({kPlaneLabels[p], a + 1, b + 1, s > 0 ? 1 : -1});
    }
    return t;
  }();
  return table;
}

const PlaneEntry& plane_of(const std::string& pauli) {
  for (const auto& e : pauli_plane_table())
    if (e.pauli == pauli) return e;
  throw InconsistentInput("no plane for Pauli " + pauli);
}

namespace {

// Zeroes axis `pivot_axis` entries in order using the listed planes.
template <std::size_t N>
std::array<double, N> zero_column(Eigen::Matrix4cd& w, const std::array<const char*, N>& paulis, int pivot_axis) {
  std::array<double, N> theta{};
  for (std::size_t s = 0; s < N; ++s) {
    const PlaneEntry& pe = plane_of(paulis[s]);
    const int other = pe.a == pivot_axis ? pe.b : pe.a;
    const Matrix6d r = so6_rep(w);
    const double wa = r(other - 1, pivot_axis - 1), wb = r(pivot_axis - 1, pivot_axis - 1);
    // Plane orientation: κ relates axis a to axis b; flip when the pivot is a.
    const int kappa = pe.a == other ? pe.kappa : -pe.kappa;
    theta[s] = givens_angle(wa, wb, kappa);
    w = pauli_exp(paulis[s], -theta[s]) * w;
  }
  return theta;
}

}  // namespace

FirstSplit first_split(const Eigen::Matrix4cd& u) {
  check_su4(u);
  FirstSplit out;
  out.u1 = u;
  out.theta = zero_column<5>(out.u1, {"XI", "YI", "ZX", "ZY", "ZZ"}, 6);
  return out;
}

SecondSplit second_split(const Eigen::Matrix4cd& w) {
  check_su4(w);
  SecondSplit out;
  out.u2 = w;
  out.theta = zero_column<4>(out.u2, {"ZI", "YX", "YY", "YZ"}, 5);
  return out;
}

GivensPlan decompose_su4(const Eigen::Matrix4cd& u) {
  const FirstSplit fs = first_split(u);
  const SecondSplit ss = second_split(fs.u1);
  GivensPlan p;
  for (int i = 0; i < 5; ++i) p.theta[static_cast<std::size_t>(i)] = fs.theta[static_cast<std::size_t>(i)];
  for (int i = 0; i < 4; ++i) p.theta[static_cast<std::size_t>(5 + i)] = ss.theta[static_cast<std::size_t>(i)];
  p.u1 = fs.u1;
  p.u2 = ss.u2;
  return p;
}

Eigen::Matrix4cd reconstruct(const GivensPlan& p) {
  static const char* order[9] = {"XI", "YI", "ZX", "ZY", "ZZ", "ZI", "YX", "YY", "YZ"};
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  for (int i = 0; i < 9; ++i) u = u * pauli_exp(order[i], p.theta[static_cast<std::size_t>(i)]);
  return u * p.u2;
}

}  // namespace ctsynth
