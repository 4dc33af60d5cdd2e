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

#include <random>
#include <vector>

#include "wopda/lasso.hpp"
#include "wopda/pda.hpp"

namespace wopda {

/// Shape knobs for random desk-scale instances. The hard bounds are fixed:
/// n <= 3, |gamma| <= 3, |sigma| <= 2, at most 6 blocks, replacements of
/// length <= 2. The profile flags keep the brute-force oracles exhaustive:
/// letter_only forbids eps coefficients everywhere, no_eps_growth allows eps
/// only on blocks that do not grow the stack, gamma_preserving restricts
/// every block to the shape p -> p (the stack-free degeneration).
struct GenOptions {
  SemiringKind semiring = SemiringKind::kBoolean;
  bool letter_only = false;
  bool no_eps_growth = false;
  bool gamma_preserving = false;
};

/// Deterministic in the engine state; always returns a validate_pda-clean
/// automaton with at least one initial and one final entry.
OmegaPda random_pda(std::mt19937_64& rng, const GenOptions& options);

/// Random lasso words over the instance alphabet, |u| <= 3, 1 <= |v| <= 3.
std::vector<LassoWord> random_lasso_suite(std::mt19937_64& rng,
                                          const std::vector<Letter>& sigma,
                                          int count);

}  // namespace wopda
