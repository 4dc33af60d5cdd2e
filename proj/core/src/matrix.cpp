// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wopda/matrix.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

namespace wopda {

SqMatrix::SqMatrix(int n, Weight fill)
    : n_(n), cells_(static_cast<size_t>(n) * n, fill) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

SqMatrix SqMatrix::identity(const Semiring& sr, int n) {
  SqMatrix m(n, sr.zero());
  for (int i = 0; i < n; ++i) m.at(i, i) = sr.one();
  return m;
}

SqMatrix mat_add(const Semiring& sr, const SqMatrix& a, const SqMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("mat_add: dimension mismatch");
  SqMatrix r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = sr.add(a.at(i, j), b.at(i, j));
  return r;
}

SqMatrix mat_mul(const Semiring& sr, const SqMatrix& a, const SqMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("mat_mul: dimension mismatch");
  const int n = a.dim();
  SqMatrix r(n, sr.zero());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Weight& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        r.at(i, j) = sr.add(r.at(i, j), sr.mul(aik, b.at(k, j)));
    }
  return r;
}

namespace {

SqMatrix submatrix(const SqMatrix& a, int r0, int c0, int size) {
  SqMatrix s(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) s.at(i, j) = a.at(r0 + i, c0 + j);
  return s;
}

void place(SqMatrix& dst, const SqMatrix& src, int r0, int c0) {
  for (int i = 0; i < src.dim(); ++i)
    for (int j = 0; j < src.dim(); ++j) dst.at(r0 + i, c0 + j) = src.at(i, j);
}

}  // namespace

SqMatrix mat_star(const Semiring& sr, const SqMatrix& m) {
  const int n = m.dim();
  if (n == 1) {
    SqMatrix r(1);
    r.at(0, 0) = sr.star(m.at(0, 0));
    return r;
  }
  // Conway block star with split point floor(n/2):
  //   [a b]*   [f        f b d*          ]
  //   [c d]  = [d* c f   d* + d* c f b d*]   with f = (a + b d* c)*.
  const int h = n / 2;
  const int k = n - h;
  SqMatrix a = submatrix(m, 0, 0, h);
  // Off-diagonal blocks are rectangular; handled with explicit loops below.
  SqMatrix ds = mat_star(sr, submatrix(m, h, h, k));

  // bds = b * d*   (h x k), dsc = d* * c   (k x h)
  std::vector<Weight> bds(static_cast<size_t>(h) * k, sr.zero());
  std::vector<Weight> dsc(static_cast<size_t>(k) * h, sr.zero());
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < k; ++j) {
      Weight acc = sr.zero();
      for (int t = 0; t < k; ++t)
        acc = sr.add(acc, sr.mul(m.at(i, h + t), ds.at(t, j)));
      bds[static_cast<size_t>(i) * k + j] = acc;
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < h; ++j) {
      Weight acc = sr.zero();
      for (int t = 0; t < k; ++t)
        acc = sr.add(acc, sr.mul(ds.at(i, t), m.at(h + t, j)));
      dsc[static_cast<size_t>(i) * h + j] = acc;
    }

  // f = (a + b d* c)*
  SqMatrix core = a;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      Weight acc = core.at(i, j);
      for (int t = 0; t < k; ++t)
        acc = sr.add(acc, sr.mul(bds[static_cast<size_t>(i) * k + t], m.at(h + t, j)));
      core.at(i, j) = acc;
    }
  SqMatrix f = mat_star(sr, core);

  SqMatrix r(n, sr.zero());
  place(r, f, 0, 0);
  // top-right: f * b d*
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < k; ++j) {
      Weight acc = sr.zero();
      for (int t = 0; t < h; ++t)
        acc = sr.add(acc, sr.mul(f.at(i, t), bds[static_cast<size_t>(t) * k + j]));
      r.at(i, h + j) = acc;
    }
  // bottom-left: d* c * f
  std::vector<Weight> dscf(static_cast<size_t>(k) * h, sr.zero());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < h; ++j) {
      Weight acc = sr.zero();
      for (int t = 0; t < h; ++t)
        acc = sr.add(acc, sr.mul(dsc[static_cast<size_t>(i) * h + t], f.at(t, j)));
      dscf[static_cast<size_t>(i) * h + j] = acc;
      r.at(h + i, j) = acc;
    }
  // bottom-right: d* + (d* c f) (b d*)
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Weight acc = ds.at(i, j);
      for (int t = 0; t < h; ++t)
        acc = sr.add(acc, sr.mul(dscf[static_cast<size_t>(i) * h + t],
                                 bds[static_cast<size_t>(t) * k + j]));
      r.at(h + i, h + j) = acc;
    }
  return r;
}

bool nfa_buchi_lasso_accept(const std::map<Letter, SqMatrix>& by_letter,
                            const std::vector<bool>& initial,
                            const std::vector<int>& repeated,
                            std::string_view u, std::string_view v) {
  if (v.empty()) throw std::invalid_argument("nfa_buchi_lasso_accept: v must be nonempty");
  if (by_letter.empty()) return false;
  const int n = by_letter.begin()->second.dim();

  auto step_set = [&](const std::vector<bool>& from, Letter a) {
    std::vector<bool> to(n, false);
    auto it = by_letter.find(a);
    if (it == by_letter.end()) return to;
    for (int i = 0; i < n; ++i) {
      if (!from[i]) continue;
      for (int j = 0; j < n; ++j)
        if (!it->second.at(i, j).is_zero()) to[j] = true;
    }
    return to;
  };

  std::vector<bool> cur = initial;
  for (char a : u) cur = step_set(cur, a);

  const int m = static_cast<int>(v.size());
  auto node = [&](int q, int pos) { return q * m + pos; };
  std::vector<bool> reach(static_cast<size_t>(n) * m, false);
  std::deque<std::pair<int, int>> queue;
  for (int q = 0; q < n; ++q)
    if (cur[q]) {
      reach[node(q, 0)] = true;
      queue.emplace_back(q, 0);
    }
  auto succs = [&](int q, int pos, auto&& fn) {
    auto it = by_letter.find(v[pos]);
    if (it == by_letter.end()) return;
    const int next = (pos + 1) % m;
    for (int j = 0; j < n; ++j)
      if (!it->second.at(q, j).is_zero()) fn(j, next);
  };
  while (!queue.empty()) {
    auto [q, pos] = queue.front();
    queue.pop_front();
    succs(q, pos, [&](int j, int next) {
      if (!reach[node(j, next)]) {
        reach[node(j, next)] = true;
        queue.emplace_back(j, next);
      }
    });
  }

  // A lasso is accepted iff some reachable (repeated state, position) lies on
  // a cycle of the product graph.
  std::set<int> rep(repeated.begin(), repeated.end());
  for (int r : rep) {
    if (r < 0 || r >= n) continue;
    for (int pos = 0; pos < m; ++pos) {
      if (!reach[node(r, pos)]) continue;
      std::vector<bool> seen(static_cast<size_t>(n) * m, false);
      std::deque<std::pair<int, int>> q2;
      succs(r, pos, [&](int j, int next) {
        if (!seen[node(j, next)]) {
          seen[node(j, next)] = true;
          q2.emplace_back(j, next);
        }
      });
      bool back = seen[node(r, pos)];
      while (!back && !q2.empty()) {
        auto [q, p] = q2.front();
        q2.pop_front();
        succs(q, p, [&](int j, int next) {
          if (!seen[node(j, next)]) {
            seen[node(j, next)] = true;
            q2.emplace_back(j, next);
          }
        });
        back = seen[node(r, pos)];
      }
      if (back) return true;
    }
  }
  return false;
}

}  // namespace wopda
