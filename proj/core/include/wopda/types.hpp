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

namespace wopda {

/// Terminal letter. kEpsilon marks the empty word; it never occurs inside
/// input words, only as a coefficient index in letter polynomials.
using Letter = char;
inline constexpr Letter kEpsilon = '\0';

/// Automaton states are 1-based throughout the public API.
using State = int;

/// Index into OmegaPda::gamma. Pushdown words store the TOP symbol first.
using StackSym = int;
using StackWord = std::vector<StackSym>;

inline std::string letter_name(Letter a) {
  return a == kEpsilon ? std::string("eps") : std::string(1, a);
}

}  // namespace wopda
