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

#include <algorithm>
#include <map>

#include "ctsynth/ctrl.hpp"
#include "ctsynth/errors.hpp"

namespace ctsynth {

void emit_mcx(Circuit& out, const std::vector<int>& controls, int target, const std::vector<int>& spare) {
  const std::size_t k = controls.size();
  if (k == 0) {
    out.x(target);
    return;
  }
  if (k == 1) {
    out.cnot(controls[0], target);
    return;
  }
  if (k == 2) {
    out.toffoli(controls[0], controls[1], target);
    return;
  }
  std::vector<int> anc;
  for (int q : spare) {
    if (anc.size() == k - 2) break;
    if (q == target || std::find(controls.begin(), controls.end(), q) != controls.end()) continue;
    anc.push_back(q);
  }
  if (anc.size() < k - 2) throw CapExceeded("not enough borrowable qubits for multi-controlled X");
  const auto& c = controls;
  auto ladder = [&]() {
    for (std::size_t i = k - 2; i >= 2; --i) out.toffoli(c[i], anc[i - 2], anc[i - 1]);
    out.toffoli(c[0], c[1], anc[0]);
    for (std::size_t i = 2; i <= k - 2; ++i) out.toffoli(c[i], anc[i - 2], anc[i - 1]);
  };
  out.toffoli(c[k - 1], anc[k - 3], target);
  ladder();
  out.toffoli(c[k - 1], anc[k - 3], target);
  ladder();
}

void emit_oracle(Circuit& out, const GTable& g, const std::vector<int>& a, const std::vector<int>& cq,
                 const std::vector<int>& spare) {
  const int n = static_cast<int>(a.size());
  if (n != g.n) throw DimensionMismatch("oracle: control count differs from table");
  if (static_cast<int>(cq.size()) < g.b()) throw CapExceeded("oracle: not enough target qubits");
  const std::size_t rows = std::size_t{1} << n;
  // Algebraic normal form of every column, grouped by monomial.
  std::map<std::size_t, std::vector<int>> groups;
  for (int j = 0; j < g.b(); ++j) {
    std::vector<std::uint8_t> f(rows);
    for (std::size_t i = 0; i < rows; ++i) f[i] = g.rows[i][static_cast<std::size_t>(j)];
    for (int bit = 0; bit < n; ++bit)
      for (std::size_t i = 0; i < rows; ++i)
        if (i & (std::size_t{1} << bit)) f[i] ^= f[i ^ (std::size_t{1} << bit)];
    for (std::size_t mono = 0; mono < rows; ++mono)
      if (f[mono]) groups[mono].push_back(cq[static_cast<std::size_t>(j)]);
  }
  for (const auto& [mono, targets] : groups) {
    std::vector<int> controls;
    for (int q = 0; q < n; ++q)
      if (mono & (std::size_t{1} << (n - 1 - q))) controls.push_back(a[static_cast<std::size_t>(q)]);
    if (controls.size() <= 1) {
      for (int t : targets) emit_mcx(out, controls, t, {});
      continue;
    }
    const int y1 = targets[0];
    for (std::size_t i = 1; i < targets.size(); ++i) out.cnot(y1, targets[i]);
    std::vector<int> borrow = spare;
    for (int q : cq)
      if (q != y1) borrow.push_back(q);
    emit_mcx(out, controls, y1, borrow);
    for (std::size_t i = 1; i < targets.size(); ++i) out.cnot(y1, targets[i]);
  }
}

Circuit build_oracle(const GTable& g, const Registers& regs) {
  if (regs.n_control != g.n || regs.n_clean < g.b()) throw DimensionMismatch("build_oracle: registers");
  Circuit c(regs);
  std::vector<int> a, cq, spare;
  for (int i = 0; i < regs.n_control; ++i) a.push_back(regs.a(i));
  for (int j = 0; j < regs.n_clean; ++j) cq.push_back(regs.c(j));
  for (int j = 0; j < regs.n_dirty; ++j) spare.push_back(regs.d(j));
  for (int j = g.b(); j < regs.n_clean; ++j) spare.push_back(regs.c(j));
  std::vector<int> used(cq.begin(), cq.begin() + g.b());
  emit_oracle(c, g, a, used, spare);
  return c;
}

}  // namespace ctsynth
