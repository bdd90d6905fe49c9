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

#include "ctsynth/pad.hpp"

#include <algorithm>

#include "ctsynth/errors.hpp"

namespace ctsynth {

namespace {

ExactMatrix padded_syllable(int s) {
  return s == kZetaTH ? syllable_matrix(kTH).mul_zeta(1) : syllable_matrix(kTSH);
}

ExactMatrix unphased(const PaddedForm& p) {
  ExactMatrix u = f_matrix(p.f);
  for (int j = 1; j <= p.m(); ++j) {
    u = u * padded_syllable(p.syllables[static_cast<std::size_t>(j - 1)]);
    if (j == p.h_position) u = u * gate_matrix(GateKind::H);
  }
  if (p.h_position == 0) u = u * gate_matrix(GateKind::H);
  return u * clifford_table()[static_cast<std::size_t>(p.c_prime)].matrix;
}

}  // namespace

ExactMatrix evaluate_padded(const PaddedForm& p) { return unphased(p).mul_zeta(p.phase_exp); }

PaddedForm pad_to(const NormalForm& form, int m) {
  const int mi = form.t_count();
  if (m < mi) throw InconsistentInput("pad_to: target length below form length");
  if ((m - mi) % 2 != 0) throw ParityMismatch("pad_to: m - m_i must be even");
  PaddedForm p;
  p.f = form.f;
  p.original_m = mi;
  p.h_position = (mi + m) / 2;
  const int h = p.h_position;
  for (int j = 1; j <= m; ++j) {
    int s;
    if (j <= mi) s = form.syllables[static_cast<std::size_t>(j - 1)] == kTH ? kZetaTH : kPadTSH;
    else if (j <= h) s = kZetaTH;
    else s = ((j - h - 2) % 3 == 0) ? kZetaTH : kPadTSH;
    p.syllables.push_back(s);
  }
  const ExactMatrix& c = clifford_table()[static_cast<std::size_t>(form.c)].matrix;
  const ExactMatrix hm = gate_matrix(GateKind::H);
  ExactMatrix cp;
  switch (((m - mi) / 2) % 3) {
    case 1: cp = hm * gate_matrix(GateKind::Z) * c; break;
    case 2: cp = hm * gate_matrix(GateKind::X) * c; break;
    default: cp = hm * c; break;
  }
  p.c_prime = clifford_lookup(cp).index;
  NormalForm bare = form;
  bare.phase_exp = 0;
  auto j = equal_up_to_zeta(evaluate(bare), unphased(p));
  if (!j) throw InconsistentInput("pad_to: padded form does not reproduce the input");
  p.phase_adjust = *j;
  p.phase_exp = (form.phase_exp + *j) % 8;
  return p;
}

Equalized equalize(const std::vector<NormalForm>& forms) {
  if (forms.empty()) throw InconsistentInput("equalize: no forms");
  Equalized e;
  int lo = forms.front().t_count();
  for (const auto& f : forms) {
    if ((f.t_count() - lo) % 2 != 0) throw ParityMismatch("equalize: mixed T-count parity");
    e.m = std::max(e.m, f.t_count());
    lo = std::min(lo, f.t_count());
  }
  e.l = (e.m + lo) / 2;
  for (const auto& f : forms) e.padded.push_back(pad_to(f, e.m));
  return e;
}

}  // namespace ctsynth
