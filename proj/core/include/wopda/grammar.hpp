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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wopda/lasso.hpp"
#include "wopda/pda.hpp"
#include "wopda/reachability.hpp"

namespace wopda {

/// Grammar variable: the finite-derivation start x0, a triple [i,p,j], the
/// infinite-derivation start z0, or a pair [i,p]. The ordering (x0, triples,
/// z0, pairs) is the emission order.
struct Var {
  enum class Kind : std::uint8_t { kStartX = 0, kTriple = 1, kStartZ = 2, kPair = 3 };
  Kind kind = Kind::kStartX;
  State i = 0;
  StackSym p = 0;
  State j = 0;

  static Var start_x() { return Var{}; }
  static Var triple(State i, StackSym p, State j) {
    return Var{Kind::kTriple, i, p, j};
  }
  static Var start_z() { return Var{Kind::kStartZ, 0, 0, 0}; }
  static Var pair(State i, StackSym p) { return Var{Kind::kPair, i, p, 0}; }

  bool is_x_side() const {
    return kind == Kind::kStartX || kind == Kind::kTriple;
  }

  friend auto operator<=>(const Var&, const Var&) = default;
};

/// Right-hand-side symbol: a real terminal (never eps) or a variable.
/// The variant ordering puts terminals before variables, which together with
/// Var's ordering gives the deterministic production order.
using RhsSym = std::variant<Letter, Var>;

struct Production {
  Var lhs;
  std::vector<RhsSym> rhs;  // eps is never stored; an all-eps rhs is empty
  bool is_omega = false;    // member of P_Z rather than P_X

  /// The schema terminal: the leading terminal of the stored rhs, or eps.
  Letter lead() const;

  friend bool operator==(const Production&, const Production&) = default;
};

bool production_less(const Production& a, const Production& b);

/// Output of the triple-pair construction: separate production sets and
/// start variables for finite (P_X, x0) and infinite (P_Z, z0) derivations.
/// Pair variables [i,p] with i <= l are the repeated variables.
struct MixedGrammar {
  SemiringKind semiring = SemiringKind::kBoolean;
  int n = 1;
  std::vector<std::string> gamma;
  std::vector<Letter> sigma;
  int l = 0;
  std::vector<Production> px;  // sorted by production_less
  std::vector<Production> pz;
  std::vector<Var> repeated_z;  // declared pair variables [i,p] with i <= l

  std::string var_name(const Var& v) const;
  std::string rhs_text(const Production& prod) const;
};

/// Builds G_l from a validated automaton: one x0 production per pair of
/// nonzero I/P coefficients, one triple production per block coefficient and
/// state tuple, one z0 production per nonzero I coefficient, and one pair
/// production per block coefficient, split position and state tuple.
/// Throws std::invalid_argument when validate_pda reports violations.
MixedGrammar triple_pair_construct(const OmegaPda& pda);

/// Removes X variables that are non-productive or unreachable and Z
/// variables that are unreachable from z0 or cannot head an accepting
/// infinite derivation (live_pairs is the omega-viability set of the source
/// automaton). The generated language is unchanged.
MixedGrammar trim_grammar(const MixedGrammar& g,
                          std::span<const StatePair> live_pairs);

/// Byte-stable text form: #semiring / #l / #repeated-z headers, then P_X and
/// P_Z productions in sorted order, one per line.
std::string emit_grammar(const MixedGrammar& g);

/// Weight of w in the finite part of the generated series: over the Boolean
/// view, whether x0 derives w; over nat-inf, the exact number of distinct
/// finite leftmost derivations of w, with inf when the count diverges.
/// Throws std::invalid_argument if w contains a letter outside sigma.
Weight word_weight(const MixedGrammar& g, std::string_view w);
Weight word_weight_as(const MixedGrammar& g, std::string_view w,
                      SemiringKind mode);

/// Weights of every word of length <= max_len, zero entries omitted.
std::map<std::string, Weight> word_weights_up_to(const MixedGrammar& g,
                                                 int max_len,
                                                 SemiringKind mode);

/// Exhaustive leftmost derivation enumeration from x0: every word of length
/// <= max_len derivable within max_steps leftmost steps, with multiplicity
/// the number of distinct leftmost derivations found within the bound.
std::map<std::string, std::uint64_t> derive_finite(const MixedGrammar& g,
                                                   int max_len, int max_steps);

struct UnambiguityVerdict {
  bool ambiguous = false;
  bool omega_witness = false;    // the witness is a lasso, not a finite word
  std::string witness_word;
  LassoWord witness_lasso;
  std::string summary;
};

/// Reports a finite witness word with at least two leftmost derivations, or
/// a suite lasso with at least two viable bounded infinite-derivation
/// prefixes; otherwise "unambiguous up to the tested bounds".
UnambiguityVerdict unambiguity_check(const MixedGrammar& g, const OmegaPda& pda,
                                     int max_len,
                                     std::span<const LassoWord> lasso_suite);

}  // namespace wopda
