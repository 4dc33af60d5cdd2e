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

#include "wopda/pda.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace wopda {

void LetterPoly::set(Letter a, Weight w) {
  if (w.is_zero()) {
    terms_.erase(a);
  } else {
    terms_[a] = w;
  }
}

void LetterPoly::add(const Semiring& sr, Letter a, Weight w) {
  if (w.is_zero()) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_[a] = w;
  } else {
    it->second = sr.add(it->second, w);
  }
}

Weight LetterPoly::at(Letter a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Weight::nat(0) : it->second;
}

bool LetterPoly::has_nonepsilon() const {
  for (const auto& [a, w] : terms_)
    if (a != kEpsilon) return true;
  return false;
}

PdMatrix::PdMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("PdMatrix: state count must be >= 1");
}

void PdMatrix::add_entry(const Semiring& sr, StackSym top,
                         const StackWord& repl, State i, State j, Letter a,
                         Weight w) {
  if (w.is_zero()) return;
  auto key = std::make_pair(top, repl);
  auto it = blocks_.find(key);
  if (it == blocks_.end()) {
    it = blocks_.emplace(key, std::vector<LetterPoly>(static_cast<size_t>(n_) * n_))
             .first;
  }
  it->second[static_cast<size_t>(i - 1) * n_ + (j - 1)].add(sr, a, w);
}

const std::vector<LetterPoly>* PdMatrix::find_block(
    StackSym top, const StackWord& repl) const {
  auto it = blocks_.find(std::make_pair(top, repl));
  return it == blocks_.end() ? nullptr : &it->second;
}

const std::vector<LetterPoly>* PdMatrix::lookup(const StackWord& pi1,
                                                const StackWord& pi2) const {
  if (pi1.empty()) return nullptr;
  const StackSym p = pi1.front();
  // pi1 = p pi', so pi2 must end in pi'; the block replacement is what is
  // left of pi2 after stripping that common suffix.
  const size_t suffix = pi1.size() - 1;
  if (pi2.size() < suffix) return nullptr;
  if (!std::equal(pi1.begin() + 1, pi1.end(), pi2.end() - suffix, pi2.end()))
    return nullptr;
  StackWord repl(pi2.begin(), pi2.end() - suffix);
  return find_block(p, repl);
}

const LetterPoly& PdMatrix::cell(const std::vector<LetterPoly>& block, State i,
                                 State j) const {
  return block[static_cast<size_t>(i - 1) * n_ + (j - 1)];
}

bool OmegaPda::has_letter(Letter a) const {
  return std::find(sigma.begin(), sigma.end(), a) != sigma.end();
}

std::optional<StackSym> OmegaPda::gamma_index(std::string_view name) const {
  for (size_t k = 0; k < gamma.size(); ++k)
    if (gamma[k] == name) return static_cast<StackSym>(k);
  return std::nullopt;
}

namespace {

void check_poly(const OmegaPda& pda, const LetterPoly& poly,
                const std::string& where, std::vector<std::string>& out) {
  for (const auto& [a, w] : poly.terms()) {
    if (a != kEpsilon && !pda.has_letter(a)) {
      out.push_back(where + ": letter '" + letter_name(a) +
                    "' is not in the input alphabet");
    }
    if (!pda.semiring.valid(w)) {
      out.push_back(where + ": weight " + w.to_string() +
                    " is not a valid " + std::string(pda.semiring.name()) +
                    " value");
    }
    if (w.is_zero()) {
      out.push_back(where + ": explicit zero coefficient stored");
    }
  }
}

}  // namespace

std::vector<std::string> validate_pda(const OmegaPda& pda) {
  std::vector<std::string> out;
  const int g = static_cast<int>(pda.gamma.size());
  if (pda.n < 1) out.push_back("state count must be >= 1");
  if (g == 0) out.push_back("pushdown alphabet is empty");
  if (pda.start_symbol < 0 || pda.start_symbol >= g) {
    out.push_back("initial pushdown symbol index " +
                  std::to_string(pda.start_symbol) + " is not in gamma");
  }
  if (pda.repeated_bound < 0 || pda.repeated_bound > pda.n) {
    out.push_back("repeated bound out of range (repeated " +
                  std::to_string(pda.repeated_bound) + ", states " +
                  std::to_string(pda.n) + ")");
  }
  if (pda.matrix.dim() != pda.n)
    out.push_back("transition matrix state count does not match n");
  if (static_cast<int>(pda.initial.size()) != pda.n)
    out.push_back("initial vector I must have one entry per state");
  if (static_cast<int>(pda.final_weights.size()) != pda.n)
    out.push_back("final vector P must have one entry per state");

  {
    std::set<Letter> seen;
    for (Letter a : pda.sigma) {
      if (a == kEpsilon) out.push_back("input alphabet contains eps");
      if (!seen.insert(a).second)
        out.push_back(std::string("duplicate input letter '") + a + "'");
    }
  }

  for (size_t k = 0; k < pda.initial.size(); ++k)
    check_poly(pda, pda.initial[k], "I[" + std::to_string(k + 1) + "]", out);
  for (size_t k = 0; k < pda.final_weights.size(); ++k)
    check_poly(pda, pda.final_weights[k], "P[" + std::to_string(k + 1) + "]", out);

  for (const auto& [key, cells] : pda.matrix.blocks()) {
    const auto& [top, repl] = key;
    std::string where = "block (" +
                        (top >= 0 && top < g ? pda.gamma[top]
                                             : "#" + std::to_string(top)) +
                        " ->";
    for (StackSym s : repl)
      where += " " + (s >= 0 && s < g ? pda.gamma[s] : "#" + std::to_string(s));
    where += repl.empty() ? " eps)" : ")";

    if (top < 0 || top >= g)
      out.push_back(where + ": top symbol is not in gamma");
    for (StackSym s : repl)
      if (s < 0 || s >= g)
        out.push_back(where + ": replacement symbol is not in gamma");
    if (cells.size() != static_cast<size_t>(pda.n) * pda.n) {
      out.push_back(where + ": cell grid does not match the state count");
      continue;
    }
    bool all_zero = true;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (!cells[c].is_zero()) all_zero = false;
      State i = static_cast<State>(c / pda.n) + 1;
      State j = static_cast<State>(c % pda.n) + 1;
      check_poly(pda, cells[c],
                 where + " cell (" + std::to_string(i) + "," +
                     std::to_string(j) + ")",
                 out);
    }
    if (all_zero) out.push_back(where + ": stored block is entirely zero");
  }
  return out;
}

std::vector<StepEdge> step(const OmegaPda& pda, const Configuration& c) {
  std::vector<StepEdge> out;
  if (c.stack.empty()) return out;
  const StackSym top = c.stack.front();
  for (const auto& [key, cells] : pda.matrix.blocks()) {
    if (key.first != top) continue;
    const StackWord& repl = key.second;
    for (State j = 1; j <= pda.n; ++j) {
      const LetterPoly& poly = pda.matrix.cell(cells, c.state, j);
      for (const auto& [a, w] : poly.terms()) {
        StackWord stack = repl;
        stack.insert(stack.end(), c.stack.begin() + 1, c.stack.end());
        out.push_back(StepEdge{a, w, Configuration{j, std::move(stack)}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const StepEdge& x, const StepEdge& y) {
    return std::tie(x.letter, x.to.stack, x.to.state) <
           std::tie(y.letter, y.to.stack, y.to.state);
  });
  return out;
}

Weight AcceptingRun::total_weight(const Semiring& sr) const {
  Weight w = initial_weight;
  for (const RunStep& s : steps) w = sr.mul(w, s.weight);
  return sr.mul(w, final_weight);
}

std::string AcceptingRun::word() const {
  std::string w;
  if (initial_letter != kEpsilon) w.push_back(initial_letter);
  for (const RunStep& s : steps)
    if (s.letter != kEpsilon) w.push_back(s.letter);
  if (final_letter != kEpsilon) w.push_back(final_letter);
  return w;
}

namespace {

struct RunSearch {
  const OmegaPda& pda;
  std::string_view word;
  int max_steps;
  std::size_t budget;
  std::size_t used = 0;
  std::vector<AcceptingRun> out;
  std::vector<RunStep> path;

  void finals(State j, size_t pos, const AcceptingRun& proto) {
    for (const auto& [a2, w2] : pda.final_weights[j - 1].terms()) {
      const bool fits = a2 == kEpsilon
                            ? pos == word.size()
                            : pos + 1 == word.size() && word[pos] == a2;
      if (!fits) continue;
      AcceptingRun run = proto;
      run.steps = path;
      run.end_state = j;
      run.final_letter = a2;
      run.final_weight = w2;
      out.push_back(std::move(run));
    }
  }

  void dfs(const Configuration& c, size_t pos, int steps_used,
           const AcceptingRun& proto) {
    if (++used > budget)
      throw std::runtime_error("enumerate_accepting_runs: node budget exceeded");
    if (c.stack.empty()) {
      finals(c.state, pos, proto);
      return;
    }
    const int steps_left = max_steps - steps_used;
    // Emptying the stack needs at least one step per symbol.
    if (static_cast<int>(c.stack.size()) > steps_left) return;
    for (const StepEdge& e : step(pda, c)) {
      size_t npos = pos;
      if (e.letter != kEpsilon) {
        if (pos >= word.size() || word[pos] != e.letter) continue;
        npos = pos + 1;
      }
      path.push_back(RunStep{c, e.letter, c.stack.front(),
                             StackWord(e.to.stack.begin(),
                                       e.to.stack.end() -
                                           (c.stack.size() - 1)),
                             e.to, e.weight});
      dfs(e.to, npos, steps_used + 1, proto);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<AcceptingRun> enumerate_accepting_runs(const OmegaPda& pda,
                                                   std::string_view word,
                                                   int max_steps,
                                                   std::size_t node_budget) {
  if (max_steps < 0) throw std::invalid_argument("max_steps must be >= 0");
  RunSearch search{pda, word, max_steps, node_budget};
  for (State i = 1; i <= pda.n; ++i) {
    for (const auto& [a1, w1] : pda.initial[i - 1].terms()) {
      size_t pos = 0;
      if (a1 != kEpsilon) {
        if (word.empty() || word[0] != a1) continue;
        pos = 1;
      }
      AcceptingRun proto;
      proto.start_state = i;
      proto.initial_letter = a1;
      proto.initial_weight = w1;
      search.dfs(Configuration{i, StackWord{pda.start_symbol}}, pos, 0, proto);
    }
  }
  return std::move(search.out);
}

namespace {

// Stream positions for u v^omega: 0..|u|-1 walk through u, then the cycle
// |u|..|u|+|v|-1 repeats forever.
struct LassoStream {
  std::string_view u, v;
  int size() const { return static_cast<int>(u.size() + v.size()); }
  Letter at(int pos) const {
    return pos < static_cast<int>(u.size())
               ? u[pos]
               : v[pos - static_cast<int>(u.size())];
  }
  int advance(int pos) const {
    return pos + 1 < size() ? pos + 1 : static_cast<int>(u.size());
  }
};

struct OmegaNode {
  State state;
  StackWord stack;
  int pos;
  friend auto operator<=>(const OmegaNode&, const OmegaNode&) = default;
};

}  // namespace

bool enumerate_omega_run_prefixes(const OmegaPda& pda, std::string_view u,
                                  std::string_view v, int stack_cap,
                                  int min_repeats, std::size_t node_budget) {
  if (v.empty())
    throw std::invalid_argument("enumerate_omega_run_prefixes: v must be nonempty");
  if (stack_cap < 1)
    throw std::invalid_argument("enumerate_omega_run_prefixes: stack_cap must be >= 1");
  if (min_repeats < 1) min_repeats = 1;
  if (pda.repeated_bound == 0) return false;

  const LassoStream stream{u, v};
  std::size_t used = 0;

  // Phase 1: all configurations reachable from the initial entries within the
  // stack bound, synchronized with the stream.
  std::set<OmegaNode> reachable;
  std::deque<OmegaNode> queue;
  auto push_reach = [&](OmegaNode n) {
    if (reachable.insert(n).second) queue.push_back(std::move(n));
  };
  for (State i = 1; i <= pda.n; ++i) {
    for (const auto& [a1, w1] : pda.initial[i - 1].terms()) {
      (void)w1;
      if (a1 == kEpsilon) {
        push_reach(OmegaNode{i, StackWord{pda.start_symbol}, 0});
      } else if (stream.at(0) == a1) {
        push_reach(OmegaNode{i, StackWord{pda.start_symbol}, stream.advance(0)});
      }
    }
  }
  while (!queue.empty()) {
    OmegaNode n = std::move(queue.front());
    queue.pop_front();
    if (++used > node_budget) return false;
    for (const StepEdge& e : step(pda, Configuration{n.state, n.stack})) {
      if (static_cast<int>(e.to.stack.size()) > stack_cap) continue;
      int npos = n.pos;
      if (e.letter != kEpsilon) {
        if (stream.at(n.pos) != e.letter) continue;
        npos = stream.advance(n.pos);
      }
      push_reach(OmegaNode{e.to.state, e.to.stack, npos});
    }
  }

  // Phase 2: from each reachable anchor, look for a replayable pump. The
  // search tracks how deep the path has eaten into the anchor stack (mu =
  // length of the untouched bottom); a path back to the anchor's state and
  // position whose regrown top extends the part it read can be iterated
  // forever by shift invariance.
  for (const OmegaNode& anchor : reachable) {
    if (anchor.stack.empty()) continue;
    const int h1 = static_cast<int>(anchor.stack.size());
    struct PumpNode {
      State state;
      StackWord stack;
      int pos;
      int mu;
      bool consumed;
      int repc;
      friend auto operator<=>(const PumpNode&, const PumpNode&) = default;
    };
    std::set<PumpNode> seen;
    std::deque<PumpNode> q2;
    PumpNode start{anchor.state, anchor.stack, anchor.pos, h1, false,
                   std::min(anchor.state <= pda.repeated_bound ? 1 : 0,
                            min_repeats)};
    seen.insert(start);
    q2.push_back(start);
    bool found = false;
    while (!q2.empty() && !found) {
      PumpNode n = std::move(q2.front());
      q2.pop_front();
      if (++used > node_budget) return false;
      if (n.stack.empty()) continue;
      const int nmu =
          static_cast<int>(n.stack.size()) == n.mu ? n.mu - 1 : n.mu;
      for (const StepEdge& e : step(pda, Configuration{n.state, n.stack})) {
        if (static_cast<int>(e.to.stack.size()) > stack_cap) continue;
        int npos = n.pos;
        bool nconsumed = n.consumed;
        if (e.letter != kEpsilon) {
          if (stream.at(n.pos) != e.letter) continue;
          npos = stream.advance(n.pos);
          nconsumed = true;
        }
        int nrepc = std::min(
            n.repc + (e.to.state <= pda.repeated_bound ? 1 : 0), min_repeats);
        PumpNode next{e.to.state, e.to.stack, npos, nmu, nconsumed, nrepc};
        if (next.state == anchor.state && next.pos == anchor.pos &&
            next.consumed && next.repc >= min_repeats) {
          const int alpha = h1 - next.mu;
          const int beta = static_cast<int>(next.stack.size()) - next.mu;
          if (beta >= alpha &&
              std::equal(anchor.stack.begin(), anchor.stack.begin() + alpha,
                         next.stack.begin())) {
            found = true;
            break;
          }
        }
        if (seen.insert(next).second) q2.push_back(std::move(next));
      }
    }
    if (found) return true;
  }
  return false;
}

std::map<std::string, std::vector<Weight>> bounded_run_coefficients(
    const OmegaPda& pda, const StackWord& start_stack, int max_len,
    int step_cap, std::size_t node_budget) {
  const Semiring& sr = pda.semiring;
  const int n = pda.n;
  const int height_cap = static_cast<int>(start_stack.size()) + max_len + 4;
  std::map<std::string, std::vector<Weight>> table;
  auto record = [&](const std::string& w, State i, State j, Weight wt) {
    auto it = table.find(w);
    if (it == table.end()) {
      it = table.emplace(w, std::vector<Weight>(static_cast<size_t>(n) * n,
                                                sr.zero()))
               .first;
    }
    Weight& cell = it->second[static_cast<size_t>(i - 1) * n + (j - 1)];
    cell = sr.add(cell, wt);
  };
  std::size_t used = 0;

  struct Node {
    State state;
    StackWord stack;
    std::string word;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  for (State i = 1; i <= n; ++i) {
    if (sr.kind() == SemiringKind::kBoolean) {
      // Existence only: saturating visited-set search.
      std::set<Node> seen;
      std::deque<Node> queue;
      Node root{i, start_stack, ""};
      seen.insert(root);
      queue.push_back(root);
      while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (++used > node_budget)
          throw std::runtime_error("bounded_run_coefficients: node budget exceeded");
        if (node.stack.empty()) {
          record(node.word, i, node.state, sr.one());
          continue;
        }
        for (const StepEdge& e : step(pda, Configuration{node.state, node.stack})) {
          if (static_cast<int>(e.to.stack.size()) > height_cap) continue;
          std::string w = node.word;
          if (e.letter != kEpsilon) {
            if (static_cast<int>(w.size()) >= max_len) continue;
            w.push_back(e.letter);
          }
          Node next{e.to.state, e.to.stack, std::move(w)};
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
    } else {
      // Path counting via strict step layers; exact when every transition
      // consumes a letter, a bounded approximation otherwise.
      std::map<Node, Weight> frontier;
      frontier[Node{i, start_stack, ""}] = sr.one();
      for (int t = 0; t <= step_cap && !frontier.empty(); ++t) {
        std::map<Node, Weight> next_frontier;
        for (const auto& [node, count] : frontier) {
          if (++used > node_budget)
            throw std::runtime_error(
                "bounded_run_coefficients: node budget exceeded");
          if (node.stack.empty()) {
            record(node.word, i, node.state, count);
            continue;
          }
          for (const StepEdge& e :
               step(pda, Configuration{node.state, node.stack})) {
            if (static_cast<int>(e.to.stack.size()) > height_cap) continue;
            std::string w = node.word;
            if (e.letter != kEpsilon) {
              if (static_cast<int>(w.size()) >= max_len) continue;
              w.push_back(e.letter);
            }
            Node nn{e.to.state, e.to.stack, std::move(w)};
            Weight& slot = next_frontier[nn];
            slot = sr.add(slot, sr.mul(count, e.weight));
          }
        }
        frontier = std::move(next_frontier);
      }
    }
  }
  return table;
}

}  // namespace wopda
