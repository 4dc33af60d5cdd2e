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

#include "wopda/lasso.hpp"

#include <algorithm>
#include <stdexcept>

#include "wopda/reachability.hpp"

namespace wopda {

std::string lasso_prefix(const LassoWord& w, std::size_t len) {
  if (w.v.empty()) throw std::invalid_argument("lasso: v must be nonempty");
  std::string out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    if (k < w.u.size()) {
      out.push_back(w.u[k]);
    } else {
      out.push_back(w.v[(k - w.u.size()) % w.v.size()]);
    }
  }
  return out;
}

LassoWord lasso_normalize(const LassoWord& w) {
  if (w.v.empty()) throw std::invalid_argument("lasso: v must be nonempty");
  LassoWord r = w;
  // Primitive root of the cycle.
  for (std::size_t d = 1; d < r.v.size(); ++d) {
    if (r.v.size() % d != 0) continue;
    bool periodic = true;
    for (std::size_t k = d; k < r.v.size() && periodic; ++k)
      periodic = r.v[k] == r.v[k - d];
    if (periodic) {
      r.v.resize(d);
      break;
    }
  }
  // Absorb the tail of u into the cycle: u' c (v' c)^omega = u' (c v')^omega.
  while (!r.u.empty() && r.u.back() == r.v.back()) {
    r.u.pop_back();
    r.v.insert(r.v.begin(), r.v.back());
    r.v.pop_back();
  }
  return r;
}

int lasso_positions(const LassoWord& normalized) {
  return static_cast<int>(normalized.u.size() + normalized.v.size());
}

State product_state(const OmegaPda& base, const LassoWord& normalized,
                    State i, int pos) {
  const int m = lasso_positions(normalized);
  const int l = base.repeated_bound;
  if (i <= l) return (i - 1) * m + pos + 1;
  return l * m + (i - l - 1) * m + pos + 1;
}

namespace {

Letter stream_at(const LassoWord& w, int pos) {
  return pos < static_cast<int>(w.u.size())
             ? w.u[pos]
             : w.v[pos - static_cast<int>(w.u.size())];
}

int stream_advance(const LassoWord& w, int pos) {
  const int m = static_cast<int>(w.u.size() + w.v.size());
  return pos + 1 < m ? pos + 1 : static_cast<int>(w.u.size());
}

}  // namespace

OmegaPda product_pda(const OmegaPda& pda, const LassoWord& w) {
  if (w.v.empty()) throw std::invalid_argument("lasso: v must be nonempty");
  const LassoWord norm = lasso_normalize(w);
  const int m = lasso_positions(norm);

  OmegaPda prod;
  prod.semiring = pda.semiring;
  prod.n = pda.n * m;
  prod.gamma = pda.gamma;
  prod.sigma = pda.sigma;
  prod.start_symbol = pda.start_symbol;
  prod.repeated_bound = pda.repeated_bound * m;
  prod.initial.assign(static_cast<size_t>(prod.n), LetterPoly{});
  prod.final_weights.assign(static_cast<size_t>(prod.n), LetterPoly{});
  prod.matrix = PdMatrix(prod.n);

  auto id = [&](State i, int pos) { return product_state(pda, norm, i, pos); };

  for (const auto& [key, cells] : pda.matrix.blocks()) {
    const auto& [top, repl] = key;
    for (State i = 1; i <= pda.n; ++i)
      for (State j = 1; j <= pda.n; ++j) {
        const LetterPoly& poly = pda.matrix.cell(cells, i, j);
        for (const auto& [a, wt] : poly.terms()) {
          if (a == kEpsilon) {
            for (int pos = 0; pos < m; ++pos)
              prod.matrix.add_entry(prod.semiring, top, repl, id(i, pos),
                                    id(j, pos), kEpsilon, wt);
          } else {
            for (int pos = 0; pos < m; ++pos) {
              if (stream_at(norm, pos) != a) continue;
              prod.matrix.add_entry(prod.semiring, top, repl, id(i, pos),
                                    id(j, stream_advance(norm, pos)), a, wt);
            }
          }
        }
      }
  }

  for (State i = 1; i <= pda.n; ++i) {
    for (const auto& [a, wt] : pda.initial[i - 1].terms()) {
      if (a == kEpsilon) {
        prod.initial[id(i, 0) - 1].add(prod.semiring, kEpsilon, wt);
      } else if (stream_at(norm, 0) == a) {
        prod.initial[id(i, stream_advance(norm, 0)) - 1].add(prod.semiring,
                                                             kEpsilon, wt);
      }
    }
  }
  return prod;
}

bool lasso_accepts(const OmegaPda& pda, const LassoWord& w) {
  if (w.v.empty()) throw std::invalid_argument("lasso: v must be nonempty");
  if (pda.repeated_bound == 0) return false;
  OmegaPda prod = product_pda(pda, w);
  std::vector<StatePair> accepting = omega_word_pairs(prod);
  for (State s = 1; s <= prod.n; ++s) {
    if (prod.initial[s - 1].is_zero()) continue;
    if (std::binary_search(accepting.begin(), accepting.end(),
                           StatePair{s, prod.start_symbol})) {
      return true;
    }
  }
  return false;
}

}  // namespace wopda
