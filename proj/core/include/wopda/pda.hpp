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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wopda/semiring.hpp"
#include "wopda/types.hpp"

namespace wopda {

/// Finite map from Sigma u {eps} to semiring values. Zero entries are never
/// stored. This is the coefficient domain for the I and P vectors and for
/// every transition-matrix cell.
class LetterPoly {
 public:
  /// Inserts or replaces; a zero weight erases the entry.
  void set(Letter a, Weight w);
  /// Accumulates with the semiring addition.
  void add(const Semiring& sr, Letter a, Weight w);
  Weight at(Letter a) const;
  bool is_zero() const { return terms_.empty(); }
  bool has_nonepsilon() const;
  const std::map<Letter, Weight>& terms() const { return terms_; }

  friend bool operator==(const LetterPoly&, const LetterPoly&) = default;

 private:
  std::map<Letter, Weight> terms_;
};

/// One stored block of a pushdown transition matrix: the n x n grid of
/// letter polynomials that rewrites top symbol `top` into `repl` (top symbol
/// first). Blocks that would be entirely zero are never stored.
struct PdBlock {
  StackSym top = 0;
  StackWord repl;
  std::vector<LetterPoly> cells;  // n*n, row-major, states 1-based via cell()
};

/// Pushdown transition matrix. Only the finitely many nonzero blocks
/// (top symbol, replacement) are materialized; lookups for arbitrary stack
/// pairs resolve through the shift-invariance rule: the entry at
/// (p pi', pi pi') equals the stored block (p, pi), and everything else is
/// zero.
class PdMatrix {
 public:
  explicit PdMatrix(int n = 1);

  int dim() const { return n_; }

  /// Accumulates a single coefficient into block (top, repl), creating the
  /// block on first use. Zero weights are ignored.
  void add_entry(const Semiring& sr, StackSym top, const StackWord& repl,
                 State i, State j, Letter a, Weight w);

  const std::map<std::pair<StackSym, StackWord>, std::vector<LetterPoly>>&
  blocks() const {
    return blocks_;
  }

  const std::vector<LetterPoly>* find_block(StackSym top,
                                            const StackWord& repl) const;

  /// Shift-invariant lookup for a full stack pair; nullptr encodes the zero
  /// block.
  const std::vector<LetterPoly>* lookup(const StackWord& pi1,
                                        const StackWord& pi2) const;

  const LetterPoly& cell(const std::vector<LetterPoly>& block, State i,
                         State j) const;

  friend bool operator==(const PdMatrix&, const PdMatrix&) = default;

 private:
  int n_;
  std::map<std::pair<StackSym, StackWord>, std::vector<LetterPoly>> blocks_;
};

/// A weighted omega-pushdown automaton: states 1..n of which 1..l are the
/// repeated (Buchi) states, pushdown alphabet gamma with initial symbol
/// start_symbol, input alphabet sigma, initial and final letter-polynomial
/// vectors, and the transition matrix. Immutable after validation; all
/// operations on it are pure.
struct OmegaPda {
  Semiring semiring{SemiringKind::kBoolean};
  int n = 1;
  std::vector<std::string> gamma;
  std::vector<Letter> sigma;  // sorted, unique
  std::vector<LetterPoly> initial;        // I, one entry per state
  PdMatrix matrix{1};
  std::vector<LetterPoly> final_weights;  // P, one entry per state
  StackSym start_symbol = 0;
  int repeated_bound = 0;  // l; states 1..l are repeated

  bool has_letter(Letter a) const;
  const std::string& gamma_name(StackSym p) const { return gamma[p]; }
  std::optional<StackSym> gamma_index(std::string_view name) const;

  friend bool operator==(const OmegaPda&, const OmegaPda&) = default;
};

struct Configuration {
  State state = 1;
  StackWord stack;  // front is the top of the pushdown

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Checks every structural invariant and returns one message per violation;
/// an empty result means the automaton is well formed.
std::vector<std::string> validate_pda(const OmegaPda& pda);

struct StepEdge {
  Letter letter = kEpsilon;
  Weight weight;
  Configuration to;
};

/// All one-step successors of a configuration, sorted by (letter, target
/// stack, target state). An empty stack has no successors.
std::vector<StepEdge> step(const OmegaPda& pda, const Configuration& c);

struct RunStep {
  Configuration from;
  Letter letter = kEpsilon;
  StackSym block_top = 0;
  StackWord block_repl;
  Configuration to;
  Weight weight;
};

/// One accepting computation: the choice of initial entry (state + consumed
/// I-letter), the transition steps, and the final entry (state + consumed
/// P-letter). The consumed letters of the whole computation are
/// initial_letter, then the step letters, then final_letter.
struct AcceptingRun {
  State start_state = 1;
  Letter initial_letter = kEpsilon;
  Weight initial_weight;
  std::vector<RunStep> steps;
  State end_state = 1;
  Letter final_letter = kEpsilon;
  Weight final_weight;

  Weight total_weight(const Semiring& sr) const;
  std::string word() const;
};

/// Exhaustively enumerates every accepting computation of at most max_steps
/// transition steps that spells exactly `word` (including the I/P letters).
/// Throws std::runtime_error if the search exceeds node_budget expansions.
std::vector<AcceptingRun> enumerate_accepting_runs(const OmegaPda& pda,
                                                   std::string_view word,
                                                   int max_steps,
                                                   std::size_t node_budget =
                                                       1u << 22);

/// Bounded one-directional Buchi oracle on raw configurations synchronized
/// with the stream u v^omega. Returns 1 only if a replayable pump exists
/// inside the stack_cap-bounded configuration graph: a path that returns to
/// the same (state, stream position), leaves the untouched bottom of the
/// starting stack in place while the read top part recurs as a prefix of the
/// grown top part, consumes at least one letter, and visits a repeated state
/// at least min_repeats times. A result of 1 implies true acceptance; 0 is
/// inconclusive. Throws std::invalid_argument if v is empty.
bool enumerate_omega_run_prefixes(const OmegaPda& pda, std::string_view u,
                                  std::string_view v, int stack_cap,
                                  int min_repeats = 1,
                                  std::size_t node_budget = 1u << 22);

/// Bounded coefficient table: for every word of length <= max_len, the n x n
/// matrix of run weights from (i, start_stack) to (j, empty stack) spelling
/// exactly that word. Boolean instances saturate (exact whenever no block
/// both reads epsilon and grows the stack); nat-inf counting is exact for
/// letter-only instances, where every step consumes a letter. Words with an
/// all-zero matrix are omitted. Throws std::runtime_error on budget
/// exhaustion.
std::map<std::string, std::vector<Weight>> bounded_run_coefficients(
    const OmegaPda& pda, const StackWord& start_stack, int max_len,
    int step_cap = 64, std::size_t node_budget = 1u << 22);

}  // namespace wopda
