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

#pragma once

#include <utility>
#include <vector>

#include "wopda/pda.hpp"

namespace wopda {

/// Boolean support of one star-block entry: reach says that some finite
/// computation starting in state i with exactly `p` on the stack empties it
/// and ends in state j. via_repeated says that some such witness visits a
/// repeated state anywhere on its path, endpoints included; consumes_letter
/// says that some witness reads at least one real input letter.
struct FlaggedTriple {
  State i = 1;
  StackSym p = 0;
  State j = 1;
  bool reach = false;
  bool via_repeated = false;
  bool consumes_letter = false;

  friend bool operator==(const FlaggedTriple&, const FlaggedTriple&) = default;
};

/// Dense triple table produced by the saturation.
class StarTripleSet {
 public:
  StarTripleSet(int n, int gamma_count);

  bool reach(State i, StackSym p, State j) const;
  bool via(State i, StackSym p, State j) const;
  bool consumes(State i, StackSym p, State j) const;

  /// true if any flag was newly set.
  bool join(State i, StackSym p, State j, bool via, bool consumes);

  /// All triples with reach = 1, sorted by (i, p, j).
  std::vector<FlaggedTriple> items() const;

  int states() const { return n_; }
  int gamma_count() const { return g_; }

 private:
  size_t idx(State i, StackSym p, State j) const;
  int n_, g_;
  std::vector<unsigned char> flags_;  // bit0 reach, bit1 via, bit2 consumes
};

/// Least solution of the star-block system, computed by saturation: seeds
/// from the (p, eps) blocks, then repeatedly composes one block step with
/// already-known triples until nothing changes. Over nat-inf automata this
/// computes the Boolean support.
StarTripleSet star_triples(const OmegaPda& pda);

/// One edge of the A_M graph between (state, top symbol) nodes: a single
/// block step from `p` into p_1..p_k, a choice of j with p_j = p2, and star
/// segments emptying p_1..p_{j-1} that land in state m. The flags record
/// whether some witness visits a repeated state / consumes a letter.
struct FlaggedEdge {
  State i = 1;
  StackSym p = 0;
  State m = 1;
  StackSym p2 = 0;
  bool reach = true;
  bool via_repeated = false;
  bool consumes_letter = false;

  friend bool operator==(const FlaggedEdge&, const FlaggedEdge&) = default;
};

/// All A_M edges, deduplicated by endpoints with flags OR-ed over witnesses,
/// sorted by (i, p, m, p2).
std::vector<FlaggedEdge> a_m_edges(const OmegaPda& pda,
                                   const StarTripleSet& triples);

using StatePair = std::pair<State, StackSym>;

/// Boolean support of the omega blocks: (i,p) is in the result iff, in the
/// A_M graph, (i,p) can reach a cycle containing at least one via_repeated
/// edge. Empty whenever l = 0. Sorted by (state, symbol).
std::vector<StatePair> omega_pairs(const OmegaPda& pda);

/// Like omega_pairs but the cycle must additionally contain an edge whose
/// witness consumes an input letter, so runs that eventually read only eps
/// do not count. This is the right notion when the automaton is synchronized
/// with a concrete omega-word (see lasso_accepts).
std::vector<StatePair> omega_word_pairs(const OmegaPda& pda);

/// Bounded equality check for the star-block factorization: compares, for
/// every word up to length L, the coefficient of the word in the star block
/// of the stack p pi against the convolution of the star blocks of p and pi,
/// all three computed by bounded run enumeration. Exact for instances whose
/// eps transitions never grow the stack; returns 0 on any mismatch.
bool check_factorization(const OmegaPda& pda, StackSym p, const StackWord& pi,
                         int max_len);

}  // namespace wopda
