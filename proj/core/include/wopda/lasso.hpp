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

#include <string>

#include "wopda/pda.hpp"

namespace wopda {

/// Ultimately periodic omega-word u v^omega. v must be nonempty.
struct LassoWord {
  std::string u;
  std::string v;

  friend bool operator==(const LassoWord&, const LassoWord&) = default;
};

/// First `len` letters of u v^omega.
std::string lasso_prefix(const LassoWord& w, std::size_t len);

/// Canonical representative of the omega-word: v is replaced by its
/// primitive root, then the tail of u is absorbed into the cycle while u's
/// last letter equals v's last letter (rotating v right each time). Two
/// LassoWords denote the same omega-word iff their normal forms are equal.
/// Throws std::invalid_argument if v is empty.
LassoWord lasso_normalize(const LassoWord& w);

/// Positions of the deterministic lasso consumer for a normalized word:
/// 0..|u|-1 walk through u, then |u|..|u|+|v|-1 cycle forever.
int lasso_positions(const LassoWord& normalized);

/// Product state numbering: repeated base states come first so that the
/// product's repeated states are exactly 1..l*positions.
State product_state(const OmegaPda& base, const LassoWord& normalized,
                    State i, int pos);

/// Synchronous product of the automaton with the lasso consumer of the
/// normalized word. States are (base state, position) pairs; letter steps
/// must match the stream and advance the position, eps steps keep it.
/// Transitions on letters that never occur at the required position are
/// dropped. The initial vector is lifted from I: an eps entry starts at
/// stream position 0, a letter entry starts after consuming that letter.
/// The final vector is zero; only the omega behavior of the product is used.
OmegaPda product_pda(const OmegaPda& pda, const LassoWord& w);

/// Buchi membership of u v^omega: whether the coefficient of the word in the
/// omega part of the behavior is nonzero, read over the Boolean support.
/// Computed on the product automaton via the A_M cycle analysis; accepting
/// cycles must consume input letters, so runs that eventually read only eps
/// never count. Throws std::invalid_argument if v is empty.
bool lasso_accepts(const OmegaPda& pda, const LassoWord& w);

}  // namespace wopda
