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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wopda/pda.hpp"

namespace wopda {

/// Aggregated parse failure; messages carry line numbers where applicable.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

/// Parses the line-based automaton format. Sections may come in any order:
///
///   # comment
///   semiring boolean|nat-inf
///   states N
///   repeated L
///   gamma p q ...
///   sigma a b ...
///   initial-stack p
///   I i letter|eps [weight]
///   P j letter|eps [weight]
///   trans i p letter|eps j REPL... [weight]
///
/// REPL is `eps` or a top-first sequence of gamma symbols; a missing weight
/// defaults to 1. Throws ParseError with one line-numbered message per
/// problem; the result always satisfies validate_pda.
OmegaPda parse_spec(std::string_view text);

/// Canonical text form; parse_spec(serialize_spec(pda)) reproduces the
/// automaton exactly.
std::string serialize_spec(const OmegaPda& pda);

}  // namespace wopda
