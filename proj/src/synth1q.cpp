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

#include "ctsynth/synth1q.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "ctsynth/errors.hpp"

namespace ctsynth {

using cd = std::complex<double>;

Eigen::Matrix2cd to_su2(const Eigen::Matrix2cd& u) {
  Eigen::Matrix2cd v = u / std::sqrt(u.determinant());
  if (v.trace().real() < 0) v = -v;
  return v;
}

double distance_2x2(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v) {
  return diamond_distance_unitary(u, v);
}

int choose_phase(const Eigen::Matrix2cd& target, const NormalForm& form) {
  return choose_phase_matrix(target, evaluate_float(form));
}

int choose_phase_matrix(const Eigen::Matrix2cd& target, const Eigen::Matrix2cd& e) {
  int best = 0;
  double best_norm = 0;
  for (int s = 0; s < 8; ++s) {
    const double v = (target - std::polar(1.0, M_PI / 4 * s) * e).norm();
    if (s == 0 || v < best_norm - 1e-12) {
      best = s;
      best_norm = v;
    }
  }
  return best;
}

namespace {

// SU(2) element [[a, −conj(b)], [b, conj(a)]].
struct Su2 {
  cd a, b;
};

Su2 mul(const Su2& x, const Su2& y) {
  return {x.a * y.a - std::conj(x.b) * y.b, x.b * y.a + std::conj(x.a) * y.b};
}
Su2 inv(const Su2& x) { return {std::conj(x.a), -x.b}; }
// Distance between x and ±y as unit quaternions; D⋄ = c·√(1 − c²/4).
double chord(const Su2& x, const Su2& y) {
  const double m = std::norm(x.a - y.a) + std::norm(x.b - y.b);
  const double p = std::norm(x.a + y.a) + std::norm(x.b + y.b);
  return std::sqrt(std::min(m, p));
}
Su2 from_matrix(const Eigen::Matrix2cd& m) {
  const Eigen::Matrix2cd v = m / std::sqrt(m.determinant());
  return {v(0, 0), v(1, 0)};
}

struct Grid {
  double cell;
  std::unordered_map<std::uint64_t, std::vector<int>> cells;
};

std::uint64_t cell_key(const std::array<std::int64_t, 4>& c) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : c) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return h;
}

std::array<std::int64_t, 4> cell_of(const Su2& q, double cell) {
  return {static_cast<std::int64_t>(std::floor(q.a.real() / cell)),
          static_cast<std::int64_t>(std::floor(q.a.imag() / cell)),
          static_cast<std::int64_t>(std::floor(q.b.real() / cell)),
          static_cast<std::int64_t>(std::floor(q.b.imag() / cell))};
}

class MeetInMiddle final : public SearchBackend {
 public:
  MeetInMiddle() {
    for (int f = kFI; f <= kFSH; ++f) f_.push_back(from_matrix(f_matrix(f).to_complex()));
    for (int s = kTH; s <= kTSH; ++s) syl_.push_back(from_matrix(syllable_matrix(s).to_complex()));
    for (const auto& e : clifford_table()) cliff_.push_back(from_matrix(e.matrix.to_complex()));
    left_.push_back(f_);
    right_.emplace_back();
  }

  SynthResult search(const SynthRequest& req) override {
    if (!(req.epsilon > 0 && req.epsilon < 1)) throw InconsistentInput("epsilon must lie in (0, 1)");
    const Su2 r = from_matrix(req.target);
    const double eps = req.epsilon;
    const double cell = eps * std::sqrt(2 / (1 + std::sqrt(1 - eps * eps)));
    const double thr = cell * (1 + 1e-9);
    const int step = req.parity == Parity::Even ? 2 : 1;
    for (int m = 0; m <= req.m_cap; m += step) {
      if (m == 0) {
        for (int c = 0; c < 24; ++c)
          if (chord(cliff_[static_cast<std::size_t>(c)], r) < thr) {
            if (auto res = accept(req, NormalForm{kFI, {}, c, 0})) return *res;
          }
        continue;
      }
      const int m1 = m / 2, m2 = m - m1;
      std::lock_guard<std::mutex> lock(mu_);
      ensure_levels(std::max(m1, m2));
      const Grid& grid = grid_for(m2, cell);
      const auto& lefts = left_[static_cast<std::size_t>(m1)];
      const auto& rights = right_[static_cast<std::size_t>(m2)];
      std::vector<int> hits;
      for (std::size_t li = 0; li < lefts.size(); ++li) {
        const Su2 q = mul(inv(lefts[li]), r);
        hits.clear();
        const auto base = cell_of(q, cell);
        for (int d = 0; d < 81; ++d) {
          std::array<std::int64_t, 4> c = base;
          int t = d;
          for (int k = 0; k < 4; ++k, t /= 3) c[static_cast<std::size_t>(k)] += t % 3 - 1;
          auto it = grid.cells.find(cell_key(c));
          if (it == grid.cells.end()) continue;
          for (int idx : it->second)
            if (chord(rights[static_cast<std::size_t>(idx)], q) < thr) hits.push_back(idx);
        }
        if (hits.empty()) continue;
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (int idx : hits)
          if (auto res = accept(req, make_form(m1, m2, static_cast<int>(li), idx))) return *res;
      }
    }
    throw EpsilonTooSmall("no form within epsilon up to the T-count cap");
  }

 private:
  static NormalForm make_form(int m1, int m2, int li, int ri) {
    NormalForm nf;
    nf.f = li >> m1;
    for (int j = m1 - 1; j >= 0; --j) nf.syllables.push_back((li >> j) & 1);
    const int bits = ri / 24;
    for (int j = m2 - 2; j >= 0; --j) nf.syllables.push_back((bits >> j) & 1);
    nf.syllables.push_back(kTH);
    nf.c = ri % 24;
    return nf;
  }

  static std::optional<SynthResult> accept(const SynthRequest& req, NormalForm nf) {
    const double d = distance_2x2(req.target, evaluate_float(nf));
    if (!(d < req.epsilon)) return std::nullopt;
    nf.phase_exp = choose_phase(req.target, nf);
    return SynthResult{nf, d, nf.t_count()};
  }

  void ensure_levels(int k) {
    while (static_cast<int>(left_.size()) <= k) {
      const auto& prev = left_.back();
      std::vector<Su2> next(prev.size() * 2);
      for (std::size_t i = 0; i < prev.size(); ++i)
        for (int a = 0; a < 2; ++a) next[2 * i + static_cast<std::size_t>(a)] = mul(prev[i], syl_[static_cast<std::size_t>(a)]);
      left_.push_back(std::move(next));
    }
    while (static_cast<int>(right_.size()) <= k) {
      const int lvl = static_cast<int>(right_.size());
      std::vector<Su2> next;
      if (lvl == 1) {
        for (const auto& c : cliff_) next.push_back(mul(syl_[kTH], c));
      } else {
        const auto& prev = right_.back();
        next.resize(prev.size() * 2);
        for (int a = 0; a < 2; ++a)
          for (std::size_t i = 0; i < prev.size(); ++i)
            next[static_cast<std::size_t>(a) * prev.size() + i] = mul(syl_[static_cast<std::size_t>(a)], prev[i]);
      }
      right_.push_back(std::move(next));
    }
  }

  const Grid& grid_for(int level, double cell) {
    auto key = std::make_pair(level, cell);
    auto it = grids_.find(key);
    if (it != grids_.end()) return it->second;
    if (grids_.size() > 16) grids_.clear();
    Grid g{cell, {}};
    const auto& pts = right_[static_cast<std::size_t>(level)];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Su2 p = pts[i], n{-p.a, -p.b};
      g.cells[cell_key(cell_of(p, cell))].push_back(static_cast<int>(i));
      g.cells[cell_key(cell_of(n, cell))].push_back(static_cast<int>(i));
    }
    return grids_.emplace(key, std::move(g)).first->second;
  }

  std::vector<Su2> f_, syl_, cliff_;
  std::vector<std::vector<Su2>> left_, right_;
  std::map<std::pair<int, double>, Grid> grids_;
  std::mutex mu_;
};

}  // namespace

std::shared_ptr<SearchBackend> default_backend() {
  static std::shared_ptr<SearchBackend> b = std::make_shared<MeetInMiddle>();
  return b;
}

SynthResult approx_su2(const SynthRequest& req) { return approx_su2(req, *default_backend()); }

SynthResult approx_su2(const SynthRequest& req, SearchBackend& backend) {
  if (req.m_cap < 0) throw InconsistentInput("m_cap must be non-negative");
  return backend.search(req);
}

}  // namespace ctsynth
