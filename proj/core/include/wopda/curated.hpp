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
#include <vector>

#include "wopda/lasso.hpp"
#include "wopda/pda.hpp"

namespace wopda {
namespace curated {

/// Reference instance: one state, gamma {p}, sigma {a,b}; `a` pushes a
/// second p, `b` pops; I and P accept on eps; no repeated states. Its finite
/// language solves x = a x x + b.
OmegaPda e1();

/// e1 with state 1 repeated.
OmegaPda e2();

/// One state, gamma {p,q}, sigma {a}: `a` either pops p or swaps it for q,
/// and q pops silently; the word "a" has two distinct accepting runs.
OmegaPda e3();

/// e1 plus a silent self-loop block p -> p, which pumps unboundedly many
/// distinct derivations into every accepted word.
OmegaPda e4();

/// Copy with the semiring switched; 0/1 coefficients stay valid either way.
OmegaPda with_kind(OmegaPda pda, SemiringKind kind);

struct OmegaCase {
  LassoWord word;
  bool expected;
};

struct CuratedOmegaInstance {
  std::string name;
  OmegaPda pda;
  std::vector<OmegaCase> cases;
};

/// Hand-analyzed Buchi membership suite: every expected bit was derived by
/// walking the runs on paper (push/pop balance, reachable cycle structure,
/// repeated-state occupancy). Used as ground truth for lasso_accepts.
std::vector<CuratedOmegaInstance> curated_omega_suite();

}  // namespace curated
}  // namespace wopda
