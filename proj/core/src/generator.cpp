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

#include "wopda/generator.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace wopda {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(std::mt19937_64& rng, int percent) {
  return pick(rng, 1, 100) <= percent;
}

const char* kGammaNames[] = {"p", "q", "r"};

}  // namespace

OmegaPda random_pda(std::mt19937_64& rng, const GenOptions& options) {
  OmegaPda pda;
  pda.semiring = Semiring(options.semiring);
  pda.n = pick(rng, 1, 3);
  const int gamma_count = options.gamma_preserving ? pick(rng, 1, 2) : pick(rng, 1, 3);
  for (int g = 0; g < gamma_count; ++g) pda.gamma.emplace_back(kGammaNames[g]);
  const int sigma_count = pick(rng, 1, 2);
  pda.sigma.push_back('a');
  if (sigma_count == 2) pda.sigma.push_back('b');
  pda.start_symbol = pick(rng, 0, gamma_count - 1);
  pda.repeated_bound = pick(rng, 0, pda.n);
  pda.initial.assign(static_cast<size_t>(pda.n), LetterPoly{});
  pda.final_weights.assign(static_cast<size_t>(pda.n), LetterPoly{});
  pda.matrix = PdMatrix(pda.n);

  auto letter_pool = [&](bool allow_eps) {
    std::vector<Letter> pool = pda.sigma;
    if (allow_eps && !options.letter_only) pool.push_back(kEpsilon);
    return pool;
  };

  // Initial/final entries: at least one each. Gamma-preserving instances
  // keep I on eps so the stack-free oracle sees the same start set;
  // otherwise an I entry occasionally sits on a letter.
  {
    State s = static_cast<State>(pick(rng, 1, pda.n));
    Letter a = kEpsilon;
    if (!options.gamma_preserving && chance(rng, 25)) {
      a = pda.sigma[static_cast<size_t>(
          pick(rng, 0, static_cast<int>(pda.sigma.size()) - 1))];
    }
    pda.initial[static_cast<size_t>(s) - 1].set(a, Weight::nat(1));
    if (chance(rng, 30) && pda.n > 1) {
      State s2 = static_cast<State>(pick(rng, 1, pda.n));
      pda.initial[static_cast<size_t>(s2) - 1].set(kEpsilon, Weight::nat(1));
    }
  }
  {
    State s = static_cast<State>(pick(rng, 1, pda.n));
    pda.final_weights[static_cast<size_t>(s) - 1].set(kEpsilon, Weight::nat(1));
    if (chance(rng, 25)) {
      State s2 = static_cast<State>(pick(rng, 1, pda.n));
      Letter a = pda.sigma[static_cast<size_t>(pick(
          rng, 0, static_cast<int>(pda.sigma.size()) - 1))];
      pda.final_weights[static_cast<size_t>(s2) - 1].set(a, Weight::nat(1));
    }
  }

  // Candidate block shapes.
  std::vector<std::pair<StackSym, StackWord>> shapes;
  if (options.gamma_preserving) {
    for (StackSym g = 0; g < gamma_count; ++g)
      shapes.emplace_back(g, StackWord{g});
  } else {
    std::set<std::pair<StackSym, StackWord>> chosen;
    const int block_count = pick(rng, 1, 6);
    int guard = 0;
    while (static_cast<int>(chosen.size()) < block_count && ++guard < 100) {
      StackSym top = pick(rng, 0, gamma_count - 1);
      StackWord repl;
      const int len = pick(rng, 0, 2);
      for (int t = 0; t < len; ++t)
        repl.push_back(pick(rng, 0, gamma_count - 1));
      chosen.emplace(top, std::move(repl));
    }
    shapes.assign(chosen.begin(), chosen.end());
  }

  for (const auto& [top, repl] : shapes) {
    const bool grows = repl.size() >= 2;
    const bool allow_eps = !options.letter_only &&
                           !(options.no_eps_growth && grows) &&
                           !options.gamma_preserving;
    std::vector<Letter> pool = letter_pool(allow_eps);
    bool any = false;
    for (State i = 1; i <= pda.n; ++i)
      for (State j = 1; j <= pda.n; ++j)
        for (Letter a : pool)
          if (chance(rng, 22)) {
            pda.matrix.add_entry(pda.semiring, top, repl, i, j, a,
                                 Weight::nat(1));
            any = true;
          }
    if (!any) {
      // Keep the block nonzero: pick one cell and one visible letter.
      State i = static_cast<State>(pick(rng, 1, pda.n));
      State j = static_cast<State>(pick(rng, 1, pda.n));
      Letter a = pda.sigma[static_cast<size_t>(pick(
          rng, 0, static_cast<int>(pda.sigma.size()) - 1))];
      pda.matrix.add_entry(pda.semiring, top, repl, i, j, a, Weight::nat(1));
    }
  }

  std::vector<std::string> violations = validate_pda(pda);
  if (!violations.empty())
    throw std::logic_error("random_pda produced an invalid instance: " +
                           violations.front());
  return pda;
}

std::vector<LassoWord> random_lasso_suite(std::mt19937_64& rng,
                                          const std::vector<Letter>& sigma,
                                          int count) {
  std::vector<LassoWord> out;
  out.reserve(static_cast<size_t>(count));
  auto word = [&](int lo, int hi) {
    std::string w;
    const int len = pick(rng, lo, hi);
    for (int k = 0; k < len; ++k)
      w.push_back(sigma[static_cast<size_t>(
          pick(rng, 0, static_cast<int>(sigma.size()) - 1))]);
    return w;
  };
  for (int k = 0; k < count; ++k)
    out.push_back(LassoWord{word(0, 3), word(1, 3)});
  return out;
}

}  // namespace wopda
