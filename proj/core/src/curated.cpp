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

#include "wopda/curated.hpp"

#include <initializer_list>
#include <stdexcept>

namespace wopda {
namespace curated {

namespace {

constexpr Letter kEps = kEpsilon;

/// Small fluent builder; gamma names here are single characters, so a
/// replacement can be written as a plain string like "pp" or "" for eps.
struct Builder {
  OmegaPda pda;

  Builder(SemiringKind kind, int n, std::initializer_list<const char*> gamma,
          const char* sigma, char p0, int l) {
    pda.semiring = Semiring(kind);
    pda.n = n;
    for (const char* g : gamma) pda.gamma.emplace_back(g);
    for (const char* c = sigma; *c; ++c) pda.sigma.push_back(*c);
    pda.initial.assign(static_cast<size_t>(n), LetterPoly{});
    pda.final_weights.assign(static_cast<size_t>(n), LetterPoly{});
    pda.matrix = PdMatrix(n);
    pda.start_symbol = *pda.gamma_index(std::string(1, p0));
    pda.repeated_bound = l;
  }

  StackSym sym(char c) const {
    auto idx = pda.gamma_index(std::string(1, c));
    if (!idx) throw std::logic_error("curated builder: unknown gamma symbol");
    return *idx;
  }

  Builder& initial(State s, Letter a, std::uint64_t w = 1) {
    pda.initial[static_cast<size_t>(s) - 1].set(a, Weight::nat(w));
    return *this;
  }
  Builder& final(State s, Letter a, std::uint64_t w = 1) {
    pda.final_weights[static_cast<size_t>(s) - 1].set(a, Weight::nat(w));
    return *this;
  }
  Builder& trans(State i, char p, Letter a, State j, const char* repl,
                 std::uint64_t w = 1) {
    StackWord r;
    for (const char* c = repl; *c; ++c) r.push_back(sym(*c));
    pda.matrix.add_entry(pda.semiring, sym(p), r, i, j, a, Weight::nat(w));
    return *this;
  }

  OmegaPda done() {
    std::vector<std::string> violations = validate_pda(pda);
    if (!violations.empty())
      throw std::logic_error("curated instance invalid: " + violations.front());
    return std::move(pda);
  }
};

}  // namespace

OmegaPda e1() {
  return Builder(SemiringKind::kBoolean, 1, {"p"}, "ab", 'p', 0)
      .initial(1, kEps)
      .final(1, kEps)
      .trans(1, 'p', 'a', 1, "pp")
      .trans(1, 'p', 'b', 1, "")
      .done();
}

OmegaPda e2() {
  OmegaPda pda = e1();
  pda.repeated_bound = 1;
  return pda;
}

OmegaPda e3() {
  return Builder(SemiringKind::kBoolean, 1, {"p", "q"}, "a", 'p', 0)
      .initial(1, kEps)
      .final(1, kEps)
      .trans(1, 'p', 'a', 1, "")
      .trans(1, 'p', 'a', 1, "q")
      .trans(1, 'q', kEps, 1, "")
      .done();
}

OmegaPda e4() {
  return Builder(SemiringKind::kBoolean, 1, {"p"}, "ab", 'p', 0)
      .initial(1, kEps)
      .final(1, kEps)
      .trans(1, 'p', 'a', 1, "pp")
      .trans(1, 'p', 'b', 1, "")
      .trans(1, 'p', kEps, 1, "p")
      .done();
}

OmegaPda with_kind(OmegaPda pda, SemiringKind kind) {
  pda.semiring = Semiring(kind);
  return pda;
}

std::vector<CuratedOmegaInstance> curated_omega_suite() {
  std::vector<CuratedOmegaInstance> suite;

  // e2: a pushes, b pops, the single state is repeated. Acceptance is
  // exactly "the stack never empties": the push/pop balance of the cycle
  // must not drain it.
  suite.push_back(CuratedOmegaInstance{
      "e2-push-pop",
      e2(),
      {
          {{"", "a"}, true},     // push forever
          {{"", "b"}, false},    // pops the only symbol, then stuck
          {{"a", "ab"}, true},   // oscillates at height >= 1
          {{"", "ab"}, true},    // push/pop oscillation
          {{"", "abb"}, false},  // net -1 per period drains the stack
          {{"", "aab"}, true},   // net +1 per period
          {{"b", "a"}, false},   // the prefix already empties the stack
          {{"ab", "b"}, false},  // one push survives two pops
          {{"", "ba"}, false},   // first letter pops to empty
          {{"aa", "b"}, false},  // three symbols, then pops forever
      }});

  // e1 has no repeated states: nothing is omega-accepted.
  suite.push_back(CuratedOmegaInstance{
      "e1-vacuous",
      e1(),
      {
          {{"", "a"}, false},
          {{"a", "ab"}, false},
      }});

  // A silent self-loop alone: no input letter is ever consumed, so no
  // omega-word is accepted even though the loop visits a repeated state.
  {
    OmegaPda trap = Builder(SemiringKind::kBoolean, 1, {"p"}, "a", 'p', 1)
                        .initial(1, kEps)
                        .trans(1, 'p', kEps, 1, "p")
                        .done();
    suite.push_back(CuratedOmegaInstance{
        "silent-trap", std::move(trap), {{{"", "a"}, false}}});
  }

  // Silent loop on the repeated state 1, letter loop on state 2 only:
  // consuming a^omega forces the run to leave state 1 for good, so with
  // l = 1 the Buchi condition fails; with l = 2 it holds.
  {
    Builder b(SemiringKind::kBoolean, 2, {"p"}, "a", 'p', 1);
    b.initial(1, kEps)
        .trans(1, 'p', kEps, 1, "p")
        .trans(1, 'p', 'a', 2, "p")
        .trans(2, 'p', 'a', 2, "p");
    OmegaPda l1 = b.done();
    OmegaPda l2 = l1;
    l2.repeated_bound = 2;
    suite.push_back(CuratedOmegaInstance{
        "silent-then-letters-l1", std::move(l1), {{{"", "a"}, false}}});
    suite.push_back(CuratedOmegaInstance{
        "silent-then-letters-l2", std::move(l2), {{{"", "a"}, true}}});
  }

  // Two states alternating through the stack: a pushes and moves 1 -> 2,
  // b pops and moves 2 -> 1. Only (ab)^omega-shaped words keep the cycle
  // alive, and the cycle passes the repeated state 1.
  {
    OmegaPda alt = Builder(SemiringKind::kBoolean, 2, {"p"}, "ab", 'p', 1)
                       .initial(1, kEps)
                       .trans(1, 'p', 'a', 2, "pp")
                       .trans(2, 'p', 'b', 1, "")
                       .done();
    OmegaPda alt0 = alt;
    alt0.repeated_bound = 0;
    suite.push_back(CuratedOmegaInstance{
        "ab-alternator",
        std::move(alt),
        {
            {{"", "ab"}, true},
            {{"", "a"}, false},   // state 2 has no a-move
            {{"", "ba"}, false},  // state 1 has no b-move
            {{"a", "ba"}, true},  // same cycle entered after the prefix
        }});
    suite.push_back(CuratedOmegaInstance{
        "ab-alternator-l0", std::move(alt0), {{{"", "ab"}, false}}});
  }

  // Stack-free variant of the alternator (every block preserves gamma).
  {
    OmegaPda nfa = Builder(SemiringKind::kBoolean, 2, {"p"}, "ab", 'p', 1)
                       .initial(1, kEps)
                       .trans(1, 'p', 'a', 2, "p")
                       .trans(2, 'p', 'b', 1, "p")
                       .done();
    suite.push_back(CuratedOmegaInstance{
        "stack-free-alternator",
        std::move(nfa),
        {
            {{"", "ab"}, true},
            {{"", "a"}, false},
            {{"a", "ba"}, true},
            {{"", "b"}, false},
        }});
  }

  // Two pushdown symbols: a turns p into qp, b pops q. The stack alternates
  // p, qp, p, ... so exactly the (ab)^omega tail survives.
  {
    OmegaPda two = Builder(SemiringKind::kBoolean, 1, {"p", "q"}, "ab", 'p', 1)
                       .initial(1, kEps)
                       .trans(1, 'p', 'a', 1, "qp")
                       .trans(1, 'q', 'b', 1, "")
                       .done();
    suite.push_back(CuratedOmegaInstance{
        "two-symbol-ping",
        std::move(two),
        {
            {{"", "ab"}, true},
            {{"", "a"}, false},  // top q only reacts to b
            {{"", "b"}, false},  // top p only reacts to a
            {{"ab", "ab"}, true},
        }});
  }

  // Pure drain: the only move pops the start symbol.
  {
    OmegaPda drain = Builder(SemiringKind::kBoolean, 1, {"p"}, "a", 'p', 1)
                         .initial(1, kEps)
                         .final(1, kEps)
                         .trans(1, 'p', 'a', 1, "")
                         .done();
    suite.push_back(CuratedOmegaInstance{
        "drain", std::move(drain), {{{"", "a"}, false}}});
  }

  // Initial vector on a letter: the run only exists when the stream starts
  // with that letter; afterwards it behaves like the push loop.
  {
    OmegaPda il = Builder(SemiringKind::kBoolean, 1, {"p"}, "ab", 'p', 1)
                      .initial(1, 'a')
                      .trans(1, 'p', 'a', 1, "pp")
                      .trans(1, 'p', 'b', 1, "")
                      .done();
    suite.push_back(CuratedOmegaInstance{
        "letter-initial",
        std::move(il),
        {
            {{"", "a"}, true},
            {{"", "b"}, false},
        }});
  }

  return suite;
}

}  // namespace curated
}  // namespace wopda
