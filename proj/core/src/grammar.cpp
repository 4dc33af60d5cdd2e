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

#include "wopda/grammar.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace wopda {

Letter Production::lead() const {
  if (rhs.empty()) return kEpsilon;
  if (const Letter* c = std::get_if<Letter>(&rhs.front())) return *c;
  return kEpsilon;
}

bool production_less(const Production& a, const Production& b) {
  if (a.lhs != b.lhs) return a.lhs < b.lhs;
  if (a.lead() != b.lead()) return a.lead() < b.lead();
  return a.rhs < b.rhs;
}

std::string MixedGrammar::var_name(const Var& v) const {
  switch (v.kind) {
    case Var::Kind::kStartX:
      return "x0";
    case Var::Kind::kStartZ:
      return "z0";
    case Var::Kind::kTriple:
      return "[" + std::to_string(v.i) + "," + gamma[v.p] + "," +
             std::to_string(v.j) + "]";
    case Var::Kind::kPair:
      return "[" + std::to_string(v.i) + "," + gamma[v.p] + "]";
  }
  return "?";
}

std::string MixedGrammar::rhs_text(const Production& prod) const {
  if (prod.rhs.empty()) return "eps";
  std::string out;
  for (const RhsSym& s : prod.rhs) {
    if (!out.empty()) out.push_back(' ');
    if (const Letter* c = std::get_if<Letter>(&s)) {
      out.push_back(*c);
    } else {
      out += var_name(std::get<Var>(s));
    }
  }
  return out;
}

namespace {

void append_letter(std::vector<RhsSym>& rhs, Letter a) {
  if (a != kEpsilon) rhs.emplace_back(a);
}

// Enumerates every state tuple of the given length, 1..n per coordinate.
void each_tuple(int n, int len, std::vector<State>& tuple,
                const std::function<void(const std::vector<State>&)>& fn) {
  if (len == 0) {
    fn(tuple);
    return;
  }
  for (State s = 1; s <= n; ++s) {
    tuple.push_back(s);
    each_tuple(n, len - 1, tuple, fn);
    tuple.pop_back();
  }
}

void sort_unique(std::vector<Production>& ps) {
  std::sort(ps.begin(), ps.end(), production_less);
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

}  // namespace

MixedGrammar triple_pair_construct(const OmegaPda& pda) {
  {
    std::vector<std::string> violations = validate_pda(pda);
    if (!violations.empty()) {
      throw std::invalid_argument("triple_pair_construct: invalid automaton: " +
                                  violations.front());
    }
  }
  MixedGrammar g;
  g.semiring = pda.semiring.kind();
  g.n = pda.n;
  g.gamma = pda.gamma;
  g.sigma = pda.sigma;
  g.l = pda.repeated_bound;

  // x0 -> a1 [m1, p0, m2] a2 for every nonzero (I_{m1}, a1), (P_{m2}, a2).
  for (State m1 = 1; m1 <= pda.n; ++m1) {
    for (const auto& [a1, w1] : pda.initial[m1 - 1].terms()) {
      (void)w1;
      for (State m2 = 1; m2 <= pda.n; ++m2) {
        for (const auto& [a2, w2] : pda.final_weights[m2 - 1].terms()) {
          (void)w2;
          Production prod;
          prod.lhs = Var::start_x();
          append_letter(prod.rhs, a1);
          prod.rhs.emplace_back(Var::triple(m1, pda.start_symbol, m2));
          append_letter(prod.rhs, a2);
          g.px.push_back(std::move(prod));
        }
      }
    }
  }

  // z0 -> a [m, p0] for every nonzero (I_m, a).
  for (State m = 1; m <= pda.n; ++m) {
    for (const auto& [a, w] : pda.initial[m - 1].terms()) {
      (void)w;
      Production prod;
      prod.lhs = Var::start_z();
      prod.is_omega = true;
      append_letter(prod.rhs, a);
      prod.rhs.emplace_back(Var::pair(m, pda.start_symbol));
      g.pz.push_back(std::move(prod));
    }
  }

  // Per block (p, p1..pk) and nonzero coefficient ((M_{p,p1..pk})_{i,m1}, a):
  //   [i,p,j] -> a [m1,p1,m2] ... [mk,pk,j]        for every m2..mk, j
  //   [i,p]   -> a [m1,p1,m2] ... [m_{s-1},p_{s-1},m_s] [m_s,p_s]
  //                                                 for every 1<=s<=k, m2..ms
  for (const auto& [key, cells] : pda.matrix.blocks()) {
    const auto& [top, repl] = key;
    const int k = static_cast<int>(repl.size());
    for (State i = 1; i <= pda.n; ++i) {
      for (State m1 = 1; m1 <= pda.n; ++m1) {
        const LetterPoly& poly = pda.matrix.cell(cells, i, m1);
        for (const auto& [a, w] : poly.terms()) {
          (void)w;
          if (k == 0) {
            Production prod;
            prod.lhs = Var::triple(i, top, m1);
            append_letter(prod.rhs, a);
            g.px.push_back(std::move(prod));
            continue;
          }
          std::vector<State> tuple;
          // Triples: the free states are m2..mk plus the final j.
          each_tuple(pda.n, k, tuple, [&](const std::vector<State>& ms) {
            Production prod;
            prod.lhs = Var::triple(i, top, ms.back());
            append_letter(prod.rhs, a);
            State from = m1;
            for (int t = 0; t < k; ++t) {
              prod.rhs.emplace_back(Var::triple(from, repl[t], ms[t]));
              from = ms[t];
            }
            g.px.push_back(std::move(prod));
          });
          // Pairs: pick the split position s and the free states m2..ms.
          for (int s = 1; s <= k; ++s) {
            each_tuple(pda.n, s - 1, tuple, [&](const std::vector<State>& ms) {
              Production prod;
              prod.lhs = Var::pair(i, top);
              prod.is_omega = true;
              append_letter(prod.rhs, a);
              State from = m1;
              for (int t = 0; t + 1 < s; ++t) {
                prod.rhs.emplace_back(Var::triple(from, repl[t], ms[t]));
                from = ms[t];
              }
              prod.rhs.emplace_back(Var::pair(from, repl[s - 1]));
              g.pz.push_back(std::move(prod));
            });
          }
        }
      }
    }
  }

  sort_unique(g.px);
  sort_unique(g.pz);

  for (State i = 1; i <= g.l; ++i)
    for (StackSym p = 0; p < static_cast<StackSym>(g.gamma.size()); ++p)
      g.repeated_z.push_back(Var::pair(i, p));
  return g;
}

MixedGrammar trim_grammar(const MixedGrammar& g,
                          std::span<const StatePair> live_pairs) {
  // Productive X variables: fixpoint over P_X.
  std::set<Var> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Production& prod : g.px) {
      if (productive.count(prod.lhs)) continue;
      bool ok = true;
      for (const RhsSym& s : prod.rhs)
        if (const Var* v = std::get_if<Var>(&s))
          if (!productive.count(*v)) {
            ok = false;
            break;
          }
      if (ok) {
        productive.insert(prod.lhs);
        changed = true;
      }
    }
  }
  auto x_usable = [&](const Production& prod) {
    for (const RhsSym& s : prod.rhs)
      if (const Var* v = std::get_if<Var>(&s))
        if (!productive.count(*v)) return false;
    return true;
  };

  // Live pair variables: heads of accepting infinite derivations.
  std::set<Var> live;
  for (const auto& [i, p] : live_pairs) live.insert(Var::pair(i, p));
  auto z_usable = [&](const Production& prod) {
    for (const RhsSym& s : prod.rhs) {
      if (const Var* v = std::get_if<Var>(&s)) {
        if (v->kind == Var::Kind::kTriple && !productive.count(*v)) return false;
        if (v->kind == Var::Kind::kPair && !live.count(*v)) return false;
      }
    }
    return true;
  };

  // Z reachability from z0 over usable productions.
  std::set<Var> zreach{Var::start_z()};
  changed = true;
  while (changed) {
    changed = false;
    for (const Production& prod : g.pz) {
      if (!zreach.count(prod.lhs) || !z_usable(prod)) continue;
      for (const RhsSym& s : prod.rhs)
        if (const Var* v = std::get_if<Var>(&s))
          if (v->kind == Var::Kind::kPair && zreach.insert(*v).second)
            changed = true;
    }
  }

  MixedGrammar out;
  out.semiring = g.semiring;
  out.n = g.n;
  out.gamma = g.gamma;
  out.sigma = g.sigma;
  out.l = g.l;
  for (const Production& prod : g.pz)
    if (zreach.count(prod.lhs) && z_usable(prod)) out.pz.push_back(prod);

  // X reachability: from x0 plus every triple used by a kept Z production.
  std::set<Var> xreach{Var::start_x()};
  for (const Production& prod : out.pz)
    for (const RhsSym& s : prod.rhs)
      if (const Var* v = std::get_if<Var>(&s))
        if (v->kind == Var::Kind::kTriple) xreach.insert(*v);
  changed = true;
  while (changed) {
    changed = false;
    for (const Production& prod : g.px) {
      if (!xreach.count(prod.lhs) || !x_usable(prod)) continue;
      for (const RhsSym& s : prod.rhs)
        if (const Var* v = std::get_if<Var>(&s))
          if (xreach.insert(*v).second) changed = true;
    }
  }
  for (const Production& prod : g.px)
    if (xreach.count(prod.lhs) && x_usable(prod)) out.px.push_back(prod);

  for (const Var& v : g.repeated_z)
    if (live.count(v) && zreach.count(v)) out.repeated_z.push_back(v);
  return out;
}

std::string emit_grammar(const MixedGrammar& g) {
  std::string out;
  out += "#semiring ";
  out += g.semiring == SemiringKind::kBoolean ? "boolean" : "nat-inf";
  out += "\n#l " + std::to_string(g.l) + "\n#repeated-z";
  for (const Var& v : g.repeated_z) out += " " + g.var_name(v);
  out += "\n";
  for (const Production& prod : g.px)
    out += g.var_name(prod.lhs) + " -> " + g.rhs_text(prod) + "\n";
  for (const Production& prod : g.pz)
    out += g.var_name(prod.lhs) + " -> " + g.rhs_text(prod) + "\n";
  return out;
}

namespace {

/// Least-fixpoint chart over strings: value of every X variable on every
/// string of the (substring-closed) working set. Strata are single strings,
/// processed in nondecreasing length order; within a stratum the monotone
/// count system is iterated, and unknowns that keep growing past the
/// stabilization window are set to infinity.
class ChartEngine {
 public:
  ChartEngine(const MixedGrammar& g, SemiringKind mode) : g_(g), sr_(mode) {
    std::set<Var> vars;
    vars.insert(Var::start_x());
    for (const Production& p : g.px) {
      vars.insert(p.lhs);
      for (const RhsSym& s : p.rhs)
        if (const Var* v = std::get_if<Var>(&s)) vars.insert(*v);
    }
    vars_.assign(vars.begin(), vars.end());
    for (size_t k = 0; k < vars_.size(); ++k)
      id_[vars_[k]] = static_cast<int>(k);
    prods_.resize(vars_.size());
    for (const Production& p : g.px) prods_[id_.at(p.lhs)].push_back(&p);
  }

  /// strings must be substring-closed and sorted by length.
  void solve(const std::vector<std::string>& strings) {
    for (const std::string& s : strings)
      if (!chart_.count(s)) solve_one(s);
  }

  Weight value(const std::string& s, const Var& v) const {
    auto it = chart_.find(s);
    if (it == chart_.end()) return sr_.zero();
    return it->second[id_.at(v)];
  }

 private:
  Weight eval(const Production& prod, const std::string& s,
              const std::vector<Weight>& stratum) const {
    const size_t len = s.size();
    std::vector<Weight> w(len + 1, sr_.zero());
    w[0] = sr_.one();
    for (const RhsSym& sym : prod.rhs) {
      std::vector<Weight> nw(len + 1, sr_.zero());
      if (const Letter* c = std::get_if<Letter>(&sym)) {
        for (size_t pos = 0; pos < len; ++pos) {
          if (w[pos].is_zero() || s[pos] != *c) continue;
          nw[pos + 1] = sr_.add(nw[pos + 1], w[pos]);
        }
      } else {
        const int vid = id_.at(std::get<Var>(sym));
        for (size_t a = 0; a <= len; ++a) {
          if (w[a].is_zero()) continue;
          for (size_t b = a; b <= len; ++b) {
            Weight val = (a == 0 && b == len)
                             ? stratum[vid]
                             : chart_.at(s.substr(a, b - a))[vid];
            if (val.is_zero()) continue;
            nw[b] = sr_.add(nw[b], sr_.mul(w[a], val));
          }
        }
      }
      w = std::move(nw);
    }
    return w[len];
  }

  void solve_one(const std::string& s) {
    const int count = static_cast<int>(vars_.size());
    std::vector<Weight> cur(count, sr_.zero());
    auto round = [&]() {
      std::vector<Weight> next(count, sr_.zero());
      for (int vid = 0; vid < count; ++vid)
        for (const Production* p : prods_[vid])
          next[vid] = sr_.add(next[vid], eval(*p, s, cur));
      return next;
    };
    int passes = 0;
    for (;;) {
      bool stable = false;
      for (int r = 0; r < count && !stable; ++r) {
        std::vector<Weight> next = round();
        stable = next == cur;
        cur = std::move(next);
      }
      if (stable) break;
      // Stabilization window: anything still growing feeds a pumping cycle
      // and its least-fixpoint value is infinite.
      std::vector<bool> grew(count, false);
      for (int r = 0; r < count; ++r) {
        std::vector<Weight> next = round();
        for (int k = 0; k < count; ++k)
          if (!(next[k] == cur[k])) grew[k] = true;
        cur = std::move(next);
      }
      bool any = false;
      for (int k = 0; k < count; ++k)
        if (grew[k]) {
          cur[k] = Weight::infinity();
          any = true;
        }
      if (!any) break;
      if (++passes > count + 1) break;  // defensive; propagation is monotone
    }
    chart_.emplace(s, std::move(cur));
  }

  const MixedGrammar& g_;
  Semiring sr_;
  std::vector<Var> vars_;
  std::map<Var, int> id_;
  std::vector<std::vector<const Production*>> prods_;
  std::map<std::string, std::vector<Weight>> chart_;
};

std::vector<std::string> substrings_of(std::string_view w) {
  std::set<std::string> set;
  set.emplace();
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b <= w.size(); ++b)
      set.emplace(w.substr(a, b - a));
  std::vector<std::string> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::vector<std::string> all_strings_up_to(std::span<const Letter> sigma,
                                           int max_len) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const std::string& s : layer)
      for (Letter a : sigma) next.push_back(s + a);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

void check_word_letters(const MixedGrammar& g, std::string_view w) {
  for (char c : w)
    if (std::find(g.sigma.begin(), g.sigma.end(), c) == g.sigma.end())
      throw std::invalid_argument(std::string("word letter '") + c +
                                  "' is not in the input alphabet");
}

}  // namespace

Weight word_weight_as(const MixedGrammar& g, std::string_view w,
                      SemiringKind mode) {
  check_word_letters(g, w);
  ChartEngine engine(g, mode);
  engine.solve(substrings_of(w));
  return engine.value(std::string(w), Var::start_x());
}

Weight word_weight(const MixedGrammar& g, std::string_view w) {
  return word_weight_as(g, w, g.semiring);
}

std::map<std::string, Weight> word_weights_up_to(const MixedGrammar& g,
                                                 int max_len,
                                                 SemiringKind mode) {
  ChartEngine engine(g, mode);
  std::vector<std::string> strings = all_strings_up_to(g.sigma, max_len);
  engine.solve(strings);
  std::map<std::string, Weight> out;
  for (const std::string& s : strings) {
    Weight v = engine.value(s, Var::start_x());
    if (!v.is_zero()) out.emplace(s, v);
  }
  return out;
}

std::map<std::string, std::uint64_t> derive_finite(const MixedGrammar& g,
                                                   int max_len,
                                                   int max_steps) {
  std::map<Var, std::vector<const Production*>> by_lhs;
  for (const Production& p : g.px) by_lhs[p.lhs].push_back(&p);

  struct Form {
    std::string emitted;
    std::vector<RhsSym> rest;
    int steps;
  };
  std::map<std::string, std::uint64_t> out;
  std::vector<Form> stack;
  stack.push_back(Form{"", {RhsSym{Var::start_x()}}, 0});
  std::size_t budget = 1u << 22;
  while (!stack.empty()) {
    if (budget-- == 0)
      throw std::runtime_error("derive_finite: form budget exceeded");
    Form f = std::move(stack.back());
    stack.pop_back();
    // Move the terminal prefix out of the sentential form.
    size_t k = 0;
    bool dead = false;
    while (k < f.rest.size()) {
      if (const Letter* c = std::get_if<Letter>(&f.rest[k])) {
        f.emitted.push_back(*c);
        if (static_cast<int>(f.emitted.size()) > max_len) {
          dead = true;
          break;
        }
        ++k;
      } else {
        break;
      }
    }
    if (dead) continue;
    f.rest.erase(f.rest.begin(), f.rest.begin() + k);
    if (f.rest.empty()) {
      ++out[f.emitted];
      continue;
    }
    if (f.steps >= max_steps) continue;
    const Var& leftmost = std::get<Var>(f.rest.front());
    auto it = by_lhs.find(leftmost);
    if (it == by_lhs.end()) continue;
    for (const Production* p : it->second) {
      Form next;
      next.emitted = f.emitted;
      next.rest = p->rhs;
      next.rest.insert(next.rest.end(), f.rest.begin() + 1, f.rest.end());
      next.steps = f.steps + 1;
      stack.push_back(std::move(next));
    }
  }
  return out;
}

namespace {

/// Looks for two viable bounded prefixes of infinite leftmost derivations of
/// u v^omega at the same pair-production depth. Viability of a boundary form
/// w' [i,p] is decided on the product automaton: the pair must head an
/// accepting run from the reached stream position.
bool omega_ambiguous(const MixedGrammar& g, const OmegaPda& pda,
                     const LassoWord& lasso) {
  const LassoWord norm = lasso_normalize(lasso);
  OmegaPda prod = product_pda(pda, norm);
  std::vector<StatePair> viable_pairs = omega_word_pairs(prod);
  if (viable_pairs.empty()) return false;

  auto viable = [&](State i, StackSym p, int pos) {
    return std::binary_search(
        viable_pairs.begin(), viable_pairs.end(),
        StatePair{product_state(pda, norm, i, pos), p});
  };
  auto stream_at = [&](int pos) {
    return pos < static_cast<int>(norm.u.size())
               ? norm.u[pos]
               : norm.v[pos - static_cast<int>(norm.u.size())];
  };
  auto advance = [&](int pos) {
    return pos + 1 < lasso_positions(norm) ? pos + 1
                                           : static_cast<int>(norm.u.size());
  };

  std::map<Var, std::vector<const Production*>> x_prods, z_prods;
  for (const Production& p : g.px) x_prods[p.lhs].push_back(&p);
  for (const Production& p : g.pz) z_prods[p.lhs].push_back(&p);

  const int depth_cap = lasso_positions(norm) + static_cast<int>(norm.v.size()) + 2;
  const int step_cap = 16 * (depth_cap + 2);

  struct Form {
    int pos;
    int pair_depth;
    int steps;
    std::vector<RhsSym> rest;
  };
  std::deque<Form> queue;
  auto z0 = z_prods.find(Var::start_z());
  if (z0 == z_prods.end()) return false;
  for (const Production* p : z0->second)
    queue.push_back(Form{0, 1, 1, p->rhs});

  std::map<int, int> viable_at_depth;
  std::size_t budget = 1u << 18;
  while (!queue.empty()) {
    if (budget-- == 0) return false;  // inconclusive within the bound
    Form f = std::move(queue.front());
    queue.pop_front();
    // Match the terminal prefix against the stream.
    bool dead = false;
    size_t k = 0;
    while (k < f.rest.size()) {
      if (const Letter* c = std::get_if<Letter>(&f.rest[k])) {
        if (stream_at(f.pos) != *c) {
          dead = true;
          break;
        }
        f.pos = advance(f.pos);
        ++k;
      } else {
        break;
      }
    }
    if (dead || k == f.rest.size()) continue;
    f.rest.erase(f.rest.begin(), f.rest.begin() + k);
    const Var& leftmost = std::get<Var>(f.rest.front());
    if (f.rest.size() == 1 && leftmost.kind == Var::Kind::kPair) {
      if (viable(leftmost.i, leftmost.p, f.pos)) {
        if (++viable_at_depth[f.pair_depth] >= 2) return true;
      }
      if (f.pair_depth >= depth_cap) continue;
      auto it = z_prods.find(leftmost);
      if (it == z_prods.end()) continue;
      for (const Production* p : it->second)
        queue.push_back(Form{f.pos, f.pair_depth + 1, f.steps + 1, p->rhs});
      continue;
    }
    if (f.steps >= step_cap) continue;
    auto it = x_prods.find(leftmost);
    if (it == x_prods.end()) continue;
    for (const Production* p : it->second) {
      Form next;
      next.pos = f.pos;
      next.pair_depth = f.pair_depth;
      next.steps = f.steps + 1;
      next.rest = p->rhs;
      next.rest.insert(next.rest.end(), f.rest.begin() + 1, f.rest.end());
      queue.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace

UnambiguityVerdict unambiguity_check(const MixedGrammar& g, const OmegaPda& pda,
                                     int max_len,
                                     std::span<const LassoWord> lasso_suite) {
  UnambiguityVerdict verdict;
  std::map<std::string, Weight> weights =
      word_weights_up_to(g, max_len, SemiringKind::kNatInf);
  std::vector<const std::string*> words;
  words.reserve(weights.size());
  for (const auto& [w, _] : weights) words.push_back(&w);
  std::sort(words.begin(), words.end(),
            [](const std::string* a, const std::string* b) {
              return a->size() != b->size() ? a->size() < b->size() : *a < *b;
            });
  for (const std::string* w : words) {
    const Weight d = weights.at(*w);
    if (d.is_inf() || d.value() >= 2) {
      verdict.ambiguous = true;
      verdict.witness_word = *w;
      verdict.summary = "ambiguous: word '" + *w + "' has " + d.to_string() +
                        " distinct leftmost derivations";
      return verdict;
    }
  }
  if (pda.repeated_bound > 0) {
    for (const LassoWord& lasso : lasso_suite) {
      if (omega_ambiguous(g, pda, lasso)) {
        verdict.ambiguous = true;
        verdict.omega_witness = true;
        verdict.witness_lasso = lasso;
        verdict.summary = "ambiguous: lasso word has multiple viable "
                          "infinite-derivation prefixes";
        return verdict;
      }
    }
  }
  verdict.summary = "unambiguous up to the tested bounds";
  return verdict;
}

}  // namespace wopda
