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

#include <map>
#include <string_view>
#include <vector>

#include "wopda/semiring.hpp"
#include "wopda/types.hpp"

namespace wopda {

/// Dense square matrix over semiring elements. Rows and columns are 0-based
/// here; this module is internal plumbing and not tied to automaton state
/// numbering.
class SqMatrix {
 public:
  explicit SqMatrix(int n, Weight fill = Weight::nat(0));
  static SqMatrix identity(const Semiring& sr, int n);

  int dim() const { return n_; }
  Weight& at(int r, int c) { return cells_[static_cast<size_t>(r) * n_ + c]; }
  const Weight& at(int r, int c) const {
    return cells_[static_cast<size_t>(r) * n_ + c];
  }

  friend bool operator==(const SqMatrix&, const SqMatrix&) = default;

 private:
  int n_;
  std::vector<Weight> cells_;
};

/// Entrywise sum. Throws std::invalid_argument on dimension mismatch.
SqMatrix mat_add(const Semiring& sr, const SqMatrix& a, const SqMatrix& b);

/// Semiring matrix product. Throws std::invalid_argument on mismatch.
SqMatrix mat_mul(const Semiring& sr, const SqMatrix& a, const SqMatrix& b);

/// A* = sum of all powers of A, by recursive 2x2 block decomposition with
/// the scalar star at the 1x1 base. Over the Boolean semiring this is the
/// reflexive-transitive closure.
SqMatrix mat_star(const Semiring& sr, const SqMatrix& a);

/// Buchi membership oracle for a stack-free automaton: decides whether some
/// run over u * v^omega, starting in a state with a nonzero initial bit,
/// visits a repeated state infinitely often. States are 0-based. The search
/// works on the finite product graph (state, position in v) and looks for a
/// reachable cycle through a repeated state. Throws std::invalid_argument if
/// v is empty.
bool nfa_buchi_lasso_accept(const std::map<Letter, SqMatrix>& by_letter,
                            const std::vector<bool>& initial,
                            const std::vector<int>& repeated,
                            std::string_view u, std::string_view v);

}  // namespace wopda
