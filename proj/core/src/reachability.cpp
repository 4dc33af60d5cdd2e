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

#include "wopda/reachability.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace wopda {

StarTripleSet::StarTripleSet(int n, int gamma_count)
    : n_(n), g_(gamma_count),
      flags_(static_cast<size_t>(n) * gamma_count * n, 0) {}

size_t StarTripleSet::idx(State i, StackSym p, State j) const {
  return (static_cast<size_t>(i - 1) * g_ + p) * n_ + (j - 1);
}

bool StarTripleSet::reach(State i, StackSym p, State j) const {
  return flags_[idx(i, p, j)] & 1;
}
bool StarTripleSet::via(State i, StackSym p, State j) const {
  return flags_[idx(i, p, j)] & 2;
}
bool StarTripleSet::consumes(State i, StackSym p, State j) const {
  return flags_[idx(i, p, j)] & 4;
}

bool StarTripleSet::join(State i, StackSym p, State j, bool via,
                         bool consumes) {
  unsigned char want = 1;
  if (via) want |= 2;
  if (consumes) want |= 4;
  unsigned char& cur = flags_[idx(i, p, j)];
  if ((cur | want) == cur) return false;
  cur |= want;
  return true;
}

std::vector<FlaggedTriple> StarTripleSet::items() const {
  std::vector<FlaggedTriple> out;
  for (State i = 1; i <= n_; ++i)
    for (StackSym p = 0; p < g_; ++p)
      for (State j = 1; j <= n_; ++j)
        if (reach(i, p, j))
          out.push_back(FlaggedTriple{i, p, j, true, via(i, p, j),
                                      consumes(i, p, j)});
  return out;
}

namespace {

// Relation over state pairs augmented with the two witness flags: r holds a
// path, v a path through a repeated state, c a path consuming a letter.
struct FlaggedRelation {
  int n;
  std::vector<unsigned char> bits;  // bit0 r, bit1 v, bit2 c

  explicit FlaggedRelation(int n_) : n(n_), bits(static_cast<size_t>(n_) * n_, 0) {}

  static FlaggedRelation identity(int n_) {
    FlaggedRelation r(n_);
    for (int s = 0; s < n_; ++s) r.bits[static_cast<size_t>(s) * n_ + s] = 1;
    return r;
  }

  unsigned char get(State a, State b) const {
    return bits[static_cast<size_t>(a - 1) * n + (b - 1)];
  }
  void join(State a, State b, unsigned char f) {
    bits[static_cast<size_t>(a - 1) * n + (b - 1)] |= f;
  }
};

// Sequential composition; flags propagate along whichever half carries them.
FlaggedRelation compose(const FlaggedRelation& x, const FlaggedRelation& y) {
  FlaggedRelation r(x.n);
  for (State a = 1; a <= x.n; ++a)
    for (State m = 1; m <= x.n; ++m) {
      unsigned char xf = x.get(a, m);
      if (!(xf & 1)) continue;
      for (State b = 1; b <= x.n; ++b) {
        unsigned char yf = y.get(m, b);
        if (!(yf & 1)) continue;
        unsigned char f = 1;
        if ((xf | yf) & 2) f |= 2;
        if ((xf | yf) & 4) f |= 4;
        r.join(a, b, f);
      }
    }
  return r;
}

FlaggedRelation segment_relation(const StarTripleSet& t, StackSym p) {
  FlaggedRelation r(t.states());
  for (State a = 1; a <= t.states(); ++a)
    for (State b = 1; b <= t.states(); ++b)
      if (t.reach(a, p, b)) {
        unsigned char f = 1;
        if (t.via(a, p, b)) f |= 2;
        if (t.consumes(a, p, b)) f |= 4;
        r.join(a, b, f);
      }
  return r;
}

FlaggedRelation chain_relation(const StarTripleSet& t, const StackWord& syms) {
  FlaggedRelation r = FlaggedRelation::identity(t.states());
  for (StackSym s : syms) r = compose(r, segment_relation(t, s));
  return r;
}

}  // namespace

StarTripleSet star_triples(const OmegaPda& pda) {
  const int l = pda.repeated_bound;
  StarTripleSet t(pda.n, static_cast<int>(pda.gamma.size()));
  // Round-based saturation: each pass composes every block with the triples
  // known so far; the seeds are exactly the (p, eps) blocks.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [key, cells] : pda.matrix.blocks()) {
      const auto& [top, repl] = key;
      FlaggedRelation chain = chain_relation(t, repl);
      for (State i = 1; i <= pda.n; ++i)
        for (State m1 = 1; m1 <= pda.n; ++m1) {
          const LetterPoly& poly = pda.matrix.cell(cells, i, m1);
          if (poly.is_zero()) continue;
          const bool step_consumes = poly.has_nonepsilon();
          if (repl.empty()) {
            // Direct pop: the path is (i, p ...) -> (m1, ...).
            changed |= t.join(i, top, m1, i <= l || m1 <= l, step_consumes);
          } else {
            for (State j = 1; j <= pda.n; ++j) {
              unsigned char f = chain.get(m1, j);
              if (!(f & 1)) continue;
              // The chain flags already include every intermediate endpoint,
              // in particular m1 and j.
              changed |= t.join(i, top, j, i <= l || (f & 2) != 0,
                                step_consumes || (f & 4) != 0);
            }
          }
        }
    }
  }
  return t;
}

std::vector<FlaggedEdge> a_m_edges(const OmegaPda& pda,
                                   const StarTripleSet& triples) {
  const int l = pda.repeated_bound;
  std::map<std::tuple<State, StackSym, State, StackSym>,
           std::pair<bool, bool>>
      acc;  // (via, consumes)
  for (const auto& [key, cells] : pda.matrix.blocks()) {
    const auto& [top, repl] = key;
    const int k = static_cast<int>(repl.size());
    if (k == 0) continue;  // pops contribute nothing to A_M
    FlaggedRelation prefix = FlaggedRelation::identity(pda.n);
    for (int j = 1; j <= k; ++j) {
      if (j >= 2) {
        prefix = compose(prefix,
                         segment_relation(triples, repl[static_cast<size_t>(j) - 2]));
      }
      const StackSym target_sym = repl[static_cast<size_t>(j) - 1];
      for (State i = 1; i <= pda.n; ++i)
        for (State m1 = 1; m1 <= pda.n; ++m1) {
          const LetterPoly& poly = pda.matrix.cell(cells, i, m1);
          if (poly.is_zero()) continue;
          const bool step_consumes = poly.has_nonepsilon();
          for (State m = 1; m <= pda.n; ++m) {
            unsigned char f = prefix.get(m1, m);
            if (!(f & 1)) continue;
            const bool via =
                i <= l || m1 <= l || (f & 2) != 0 || m <= l;
            const bool consumes = step_consumes || (f & 4) != 0;
            auto& slot = acc[{i, top, m, target_sym}];
            slot.first |= via;
            slot.second |= consumes;
          }
        }
    }
  }
  std::vector<FlaggedEdge> out;
  out.reserve(acc.size());
  for (const auto& [key, flags] : acc) {
    const auto& [i, p, m, p2] = key;
    out.push_back(FlaggedEdge{i, p, m, p2, true, flags.first, flags.second});
  }
  return out;
}

namespace {

// Nodes of the A_M graph indexed densely as (state-1) * gamma + symbol.
struct PairGraph {
  int n, g;
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;
  struct EdgeInfo {
    int from, to;
    bool via, consumes;
  };
  std::vector<EdgeInfo> edges;

  PairGraph(const OmegaPda& pda, const std::vector<FlaggedEdge>& es)
      : n(pda.n), g(static_cast<int>(pda.gamma.size())),
        succ(static_cast<size_t>(n) * g), pred(static_cast<size_t>(n) * g) {
    for (const FlaggedEdge& e : es) {
      int a = (e.i - 1) * g + e.p;
      int b = (e.m - 1) * g + e.p2;
      succ[a].push_back(b);
      pred[b].push_back(a);
      edges.push_back(EdgeInfo{a, b, e.via_repeated, e.consumes_letter});
    }
  }
};

// Iterative Tarjan SCC.
std::vector<int> scc_ids(const PairGraph& gr) {
  const int nn = static_cast<int>(gr.succ.size());
  std::vector<int> index(nn, -1), low(nn, 0), comp(nn, -1);
  std::vector<bool> on_stack(nn, false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;
  struct Frame {
    int v;
    size_t child;
  };
  for (int root = 0; root < nn; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < gr.succ[f.v].size()) {
        int w = gr.succ[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back(Frame{w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
          } while (w != f.v);
          ++next_comp;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

std::vector<StatePair> accepting_pairs(const OmegaPda& pda,
                                       bool require_letter) {
  StarTripleSet triples = star_triples(pda);
  std::vector<FlaggedEdge> edges = a_m_edges(pda, triples);
  PairGraph gr(pda, edges);
  std::vector<int> comp = scc_ids(gr);

  // An SCC is accepting if it contains an internal via edge and (when
  // requested) an internal letter-consuming edge; traversing the cycle can
  // alternate between the witnesses, so the two edges need not coincide.
  int comp_count = 0;
  for (int c : comp) comp_count = std::max(comp_count, c + 1);
  std::vector<bool> has_via(comp_count, false), has_letter(comp_count, false),
      internal(comp_count, false);
  for (const auto& e : gr.edges) {
    if (comp[e.from] != comp[e.to]) continue;
    internal[comp[e.from]] = true;
    if (e.via) has_via[comp[e.from]] = true;
    if (e.consumes) has_letter[comp[e.from]] = true;
  }
  std::deque<int> queue;
  std::vector<bool> good(gr.succ.size(), false);
  for (size_t v = 0; v < gr.succ.size(); ++v) {
    int c = comp[v];
    if (internal[c] && has_via[c] && (!require_letter || has_letter[c])) {
      good[v] = true;
      queue.push_back(static_cast<int>(v));
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : gr.pred[v])
      if (!good[u]) {
        good[u] = true;
        queue.push_back(u);
      }
  }

  std::vector<StatePair> out;
  for (State i = 1; i <= pda.n; ++i)
    for (StackSym p = 0; p < static_cast<StackSym>(pda.gamma.size()); ++p)
      if (good[static_cast<size_t>(i - 1) * pda.gamma.size() + p])
        out.emplace_back(i, p);
  return out;
}

}  // namespace

std::vector<StatePair> omega_pairs(const OmegaPda& pda) {
  return accepting_pairs(pda, /*require_letter=*/false);
}

std::vector<StatePair> omega_word_pairs(const OmegaPda& pda) {
  return accepting_pairs(pda, /*require_letter=*/true);
}

namespace {

using CoeffTable = std::map<std::string, std::vector<Weight>>;

Weight table_at(const CoeffTable& t, const std::string& w, int n, State i,
                State j) {
  auto it = t.find(w);
  if (it == t.end()) return Weight::nat(0);
  return it->second[static_cast<size_t>(i - 1) * n + (j - 1)];
}

}  // namespace

bool check_factorization(const OmegaPda& pda, StackSym p, const StackWord& pi,
                         int max_len) {
  if (pi.empty()) return true;  // (M*)_{p,eps} times the empty-stack unit
  const Semiring& sr = pda.semiring;
  const int n = pda.n;

  StackWord combined;
  combined.push_back(p);
  combined.insert(combined.end(), pi.begin(), pi.end());

  CoeffTable lhs = bounded_run_coefficients(pda, combined, max_len);
  CoeffTable left = bounded_run_coefficients(pda, StackWord{p}, max_len);
  CoeffTable right = bounded_run_coefficients(pda, pi, max_len);

  // Every word that can appear on either side.
  std::set<std::string> words;
  for (const auto& [w, _] : lhs) words.insert(w);
  for (const auto& [w1, _] : left)
    for (const auto& [w2, _2] : right)
      if (static_cast<int>(w1.size() + w2.size()) <= max_len)
        words.insert(w1 + w2);

  for (const std::string& w : words) {
    for (State i = 1; i <= n; ++i)
      for (State j = 1; j <= n; ++j) {
        Weight expect = Weight::nat(0);
        for (size_t cut = 0; cut <= w.size(); ++cut) {
          const std::string w1 = w.substr(0, cut);
          const std::string w2 = w.substr(cut);
          for (State m = 1; m <= n; ++m) {
            expect = sr.add(expect, sr.mul(table_at(left, w1, n, i, m),
                                           table_at(right, w2, n, m, j)));
          }
        }
        if (!(table_at(lhs, w, n, i, j) == expect)) return false;
      }
  }
  return true;
}

}  // namespace wopda
