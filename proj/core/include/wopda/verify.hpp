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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wopda/pda.hpp"

namespace wopda::verify {

struct CheckResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;

  bool ok() const { return failures == 0; }
};

/// Star and omega laws plus the semiring axioms: exhaustive over the Boolean
/// carrier, sampled (1000 values / triples) over the completed naturals.
CheckResult semiring_laws(std::uint64_t seed);

/// Star-block factorization on 100 seeded Boolean instances and 25 nat-inf
/// counting instances, every top symbol against every replacement word of
/// length <= 2, word length truncation 6.
CheckResult factorization(std::uint64_t seed,
                          std::span<const OmegaPda> extra = {});

/// The triple saturation is a fixpoint of the star-block system, it is
/// least (removing any member breaks the equations), and reach agrees with
/// a bounded emptying-run search, on 100 seeded instances.
CheckResult system2_fixpoint(std::uint64_t seed,
                             std::span<const OmegaPda> extra = {});

/// The omega pair set is a solution of z = A_M z, is monotone in the
/// repeated bound, and is empty at l = 0, on 100 seeded instances.
CheckResult omega_equation(std::uint64_t seed,
                           std::span<const OmegaPda> extra = {});

/// Grammar membership equals oracle run acceptance for every word of length
/// <= 6, on 100 seeded Boolean instances.
CheckResult finite_equivalence(std::uint64_t seed,
                               std::span<const OmegaPda> extra = {});

/// The curated hand-analyzed Buchi suite, the soundness direction of the
/// bounded omega-prefix oracle, and the lasso representation invariances.
CheckResult lasso_acceptance(std::uint64_t seed,
                             std::span<const OmegaPda> extra = {});

/// Grammar derivation counts equal exhaustive run counts on 50 letter-only
/// nat-inf instances; pump instances yield inf with strictly growing oracle
/// counts.
CheckResult derivation_counting(std::uint64_t seed,
                                std::span<const OmegaPda> extra = {});

/// e1 is unambiguous up to length 8; e3 and e4 are ambiguous with witnesses
/// "a" and "b".
CheckResult unambiguity_corollary(std::uint64_t seed);

/// lasso_accepts agrees with the stack-free Buchi oracle on 50
/// gamma-preserving instances and 10 lassos each.
CheckResult stack_free_agreement(std::uint64_t seed);

std::vector<std::string> suite_names();

/// Runs one named suite: semiring-laws | factorization | fixpoints |
/// triple-equivalence | lasso | counting. Throws std::invalid_argument for
/// unknown names.
std::vector<CheckResult> run_suite(std::string_view name, std::uint64_t seed,
                                   std::span<const OmegaPda> extra = {});

}  // namespace wopda::verify
