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

#include "ctsynth/manf.hpp"

#include <map>
#include <sstream>

#include "ctsynth/errors.hpp"
#include "ctsynth/lbound.hpp"

namespace ctsynth {

namespace {

ExactMatrix power(const ExactMatrix& m, int e) {
  ExactMatrix out = ExactMatrix::identity(m.dim());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

struct Table {
  std::vector<CliffordEntry> entries;
  std::map<std::string, int> index;
};

const Table& table() {
  static const Table t = [] {
    Table out;
    const ExactMatrix s = gate_matrix(GateKind::S), h = gate_matrix(GateKind::H);
    for (int d1 = 0; d1 < 4; ++d1)
      for (int d2 = 0; d2 < 2; ++d2)
        for (int d3 = 0; d3 < 4; ++d3)
          for (int d4 = 0; d4 < 2; ++d4) {
            ExactMatrix m = power(s, d1) * power(h, d2) * power(s, d3) * power(h, d4);
            std::string key = phase_canonical_key(m);
            if (out.index.count(key)) continue;
            out.index.emplace(std::move(key), static_cast<int>(out.entries.size()));
            out.entries.push_back({std::move(m), {d1, d2, d3, d4}});
          }
    if (out.entries.size() != 24) throw InconsistentInput("Clifford closure is not 24");
    return out;
  }();
  return t;
}

int channel_sde(const ExactMatrix& u) { return sde_channel(channel_rep(u)); }

}  // namespace

const std::vector<CliffordEntry>& clifford_table() { return table().entries; }

CliffordMatch clifford_lookup(const ExactMatrix& m) {
  const auto& t = table();
  auto it = t.index.find(phase_canonical_key(m));
  if (it == t.index.end()) throw InconsistentInput("not a single-qubit Clifford");
  auto j = equal_up_to_zeta(m, t.entries[static_cast<std::size_t>(it->second)].matrix);
  if (!j) throw InconsistentInput("Clifford lookup phase mismatch");
  return {it->second, *j};
}

ExactMatrix f_matrix(int f) {
  switch (f) {
    case kFI: return ExactMatrix::identity(2);
    case kFH: return gate_matrix(GateKind::H);
    case kFSH: return gate_matrix(GateKind::S) * gate_matrix(GateKind::H);
    default: throw InconsistentInput("F index");
  }
}

ExactMatrix syllable_matrix(int s) {
  static const ExactMatrix th = gate_matrix(GateKind::T) * gate_matrix(GateKind::H);
  static const ExactMatrix tsh = gate_matrix(GateKind::T) * gate_matrix(GateKind::S) * gate_matrix(GateKind::H);
  if (s == kTH) return th;
  if (s == kTSH) return tsh;
  throw InconsistentInput("syllable index");
}

ExactMatrix evaluate(const NormalForm& nf) {
  if (nf.c < 0 || nf.c >= 24) throw InconsistentInput("Clifford index");
  ExactMatrix m = f_matrix(nf.f);
  for (int s : nf.syllables) m = m * syllable_matrix(s);
  return (m * clifford_table()[static_cast<std::size_t>(nf.c)].matrix).mul_zeta(nf.phase_exp);
}

Eigen::Matrix2cd evaluate_float(const NormalForm& nf) {
  static const Eigen::Matrix2cd th = syllable_matrix(kTH).to_complex();
  static const Eigen::Matrix2cd tsh = syllable_matrix(kTSH).to_complex();
  Eigen::Matrix2cd m = f_matrix(nf.f).to_complex();
  for (int s : nf.syllables) m = m * (s == kTH ? th : tsh);
  m = m * clifford_table()[static_cast<std::size_t>(nf.c)].matrix.to_complex();
  return m * std::polar(1.0, M_PI / 4 * nf.phase_exp);
}

std::vector<GateKind> clifford_gates(int index) {
  const auto& d = clifford_table()[static_cast<std::size_t>(index)].d;
  std::vector<GateKind> g;
  auto s_pow = [&g](int e) {
    if (e == 3) g.push_back(GateKind::Sdg);
    else
      for (int i = 0; i < e; ++i) g.push_back(GateKind::S);
  };
  for (int k = kCliffordPairs - 1; k >= 0; --k) {
    if (d[static_cast<std::size_t>(2 * k + 1)]) g.push_back(GateKind::H);
    s_pow(d[static_cast<std::size_t>(2 * k)]);
  }
  return g;
}

std::vector<GateKind> form_gates(const NormalForm& nf) {
  std::vector<GateKind> g = clifford_gates(nf.c);
  for (auto it = nf.syllables.rbegin(); it != nf.syllables.rend(); ++it) {
    g.push_back(GateKind::H);
    if (*it == kTSH) g.push_back(GateKind::S);
    g.push_back(GateKind::T);
  }
  if (nf.f != kFI) g.push_back(GateKind::H);
  if (nf.f == kFSH) g.push_back(GateKind::S);
  return g;
}

NormalForm normal_form_of(const ExactMatrix& u) {
  if (u.dim() != 2) throw DimensionMismatch("normal_form_of: expects 2×2");
  const ExactMatrix tdg = gate_matrix(GateKind::Tdg), h = gate_matrix(GateKind::H),
                    sdg = gate_matrix(GateKind::Sdg);
  int t = channel_sde(u);
  NormalForm nf;
  ExactMatrix w = u;
  if (t > 0) {
    // Peel (F·T)^{-1} then successive (S^a·H·T)^{-1}; exactly one choice
    // lowers the channel sde at each step.
    bool found = false;
    for (int f = kFI; f <= kFSH && !found; ++f) {
      ExactMatrix cand = tdg * f_matrix(f).adjoint() * w;
      if (channel_sde(cand) == t - 1) {
        nf.f = f;
        w = std::move(cand);
        found = true;
      }
    }
    if (!found) throw InconsistentInput("normal_form_of: no F prefix lowers sde");
    for (int step = 1; step < t; ++step) {
      found = false;
      for (int a = 0; a < 2 && !found; ++a) {
        ExactMatrix cand = tdg * h * (a ? sdg : ExactMatrix::identity(2)) * w;
        if (channel_sde(cand) == t - 1 - step) {
          nf.syllables.push_back(a);
          w = std::move(cand);
          found = true;
        }
      }
      if (!found) throw InconsistentInput("normal_form_of: no syllable lowers sde");
    }
    nf.syllables.push_back(kTH);
    w = h * w;
  }
  nf.c = clifford_lookup(w).index;
  auto j = equal_up_to_zeta(u, evaluate(nf));
  if (!j) throw InconsistentInput("normal_form_of: reconstruction failed");
  nf.phase_exp = *j;
  return nf;
}

NormalForm reduce_word(const std::vector<GateKind>& gates) {
  ExactMatrix u = ExactMatrix::identity(2);
  for (GateKind g : gates) u = gate_matrix(g) * u;
  return normal_form_of(u);
}

long long enumerate_count(int m) { return m == 0 ? 24 : 72LL << (m - 1); }

std::vector<NormalForm> enumerate(int m) {
  std::vector<NormalForm> out;
  if (m < 0) throw InconsistentInput("enumerate: negative T-count");
  out.reserve(static_cast<std::size_t>(enumerate_count(m)));
  if (m == 0) {
    for (int c = 0; c < 24; ++c) out.push_back({kFI, {}, c, 0});
    return out;
  }
  for (int f = kFI; f <= kFSH; ++f)
    for (long long bits = 0; bits < (1LL << (m - 1)); ++bits) {
      NormalForm nf{f, std::vector<int>(static_cast<std::size_t>(m), kTH), 0, 0};
      for (int j = 0; j < m - 1; ++j) nf.syllables[static_cast<std::size_t>(j)] = (bits >> (m - 2 - j)) & 1;
      for (int c = 0; c < 24; ++c) {
        nf.c = c;
        out.push_back(nf);
      }
    }
  return out;
}

std::string to_string(const NormalForm& nf) {
  static const char* fs[] = {"I", "H", "SH"};
  std::ostringstream os;
  os << "zeta^" << nf.phase_exp << " " << fs[nf.f];
  for (int s : nf.syllables) os << (s == kTH ? " TH" : " TSH");
  os << " C" << nf.c;
  return os.str();
}

}  // namespace ctsynth
