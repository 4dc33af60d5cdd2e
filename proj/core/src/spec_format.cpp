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

#include "wopda/spec_format.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace wopda {

namespace {

std::string join(const std::vector<std::string>& messages) {
  std::string out;
  for (const std::string& m : messages) {
    if (!out.empty()) out += "\n";
    out += m;
  }
  return out;
}

bool looks_like_weight(const std::string& tok) {
  if (tok == "inf") return true;
  return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) {
           return c >= '0' && c <= '9';
         });
}

bool valid_symbol_name(const std::string& tok) {
  if (tok.empty() || tok == "eps" || looks_like_weight(tok)) return false;
  return std::all_of(tok.begin(), tok.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '\'';
  });
}

struct RawLine {
  int number = 0;
  std::vector<std::string> tokens;
};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (auto cut = line.find('#'); cut != std::string::npos) line.resize(cut);
      std::istringstream ls(line);
      RawLine raw;
      raw.number = number;
      std::string tok;
      while (ls >> tok) raw.tokens.push_back(tok);
      if (!raw.tokens.empty()) lines_.push_back(std::move(raw));
    }
  }

  OmegaPda run() {
    scan();
    if (errors_.empty()) build();
    if (errors_.empty()) {
      for (const std::string& v : validate_pda(pda_))
        errors_.push_back("invalid automaton: " + v);
    }
    if (!errors_.empty()) throw ParseError(std::move(errors_));
    return std::move(pda_);
  }

 private:
  void fail(int line, const std::string& msg) {
    errors_.push_back("line " + std::to_string(line) + ": " + msg);
  }

  std::optional<long long> parse_int(const RawLine& raw, const std::string& tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      fail(raw.number, "expected a number, got '" + tok + "'");
      return std::nullopt;
    }
    if (tok.size() > 9) {
      fail(raw.number, "number out of range: '" + tok + "'");
      return std::nullopt;
    }
    return std::stoll(tok);
  }

  void expect_args(const RawLine& raw, size_t count, bool* ok) {
    if (raw.tokens.size() != count + 1) {
      fail(raw.number, "'" + raw.tokens[0] + "' expects " +
                           std::to_string(count) + " argument(s)");
      *ok = false;
    } else {
      *ok = true;
    }
  }

  void scan() {
    for (const RawLine& raw : lines_) {
      const std::string& head = raw.tokens[0];
      bool ok = false;
      if (head == "semiring") {
        expect_args(raw, 1, &ok);
        if (ok) set_once(semiring_line_, raw, "semiring");
      } else if (head == "states") {
        expect_args(raw, 1, &ok);
        if (ok) set_once(states_line_, raw, "states");
      } else if (head == "repeated") {
        expect_args(raw, 1, &ok);
        if (ok) set_once(repeated_line_, raw, "repeated");
      } else if (head == "gamma") {
        set_once(gamma_line_, raw, "gamma");
      } else if (head == "sigma") {
        set_once(sigma_line_, raw, "sigma");
      } else if (head == "initial-stack") {
        expect_args(raw, 1, &ok);
        if (ok) set_once(stack_line_, raw, "initial-stack");
      } else if (head == "I" || head == "P") {
        vector_lines_.push_back(raw);
      } else if (head == "trans") {
        trans_lines_.push_back(raw);
      } else {
        fail(raw.number, "unknown directive '" + head + "'");
      }
    }
    if (!semiring_line_) errors_.push_back("missing section: semiring");
    if (!states_line_) errors_.push_back("missing section: states");
    if (!repeated_line_) errors_.push_back("missing section: repeated");
    if (!gamma_line_) errors_.push_back("missing section: gamma");
    if (!sigma_line_) errors_.push_back("missing section: sigma");
    if (!stack_line_) errors_.push_back("missing section: initial-stack");
  }

  void set_once(std::optional<RawLine>& slot, const RawLine& raw,
                const std::string& name) {
    if (slot) {
      fail(raw.number, "duplicate section '" + name + "' (first on line " +
                           std::to_string(slot->number) + ")");
    } else {
      slot = raw;
    }
  }

  Weight parse_weight_tokens(const RawLine& raw,
                             const std::vector<std::string>& tokens,
                             size_t index) {
    if (index >= tokens.size()) return pda_.semiring.one();
    std::optional<Weight> w = pda_.semiring.parse(tokens[index]);
    if (!w) {
      fail(raw.number, "bad weight literal '" + tokens[index] + "' for " +
                           std::string(pda_.semiring.name()));
      return pda_.semiring.one();
    }
    return *w;
  }

  std::optional<Letter> parse_letter(const RawLine& raw, const std::string& tok) {
    if (tok == "eps") return kEpsilon;
    if (tok.size() != 1) {
      fail(raw.number, "input letters must be single characters, got '" + tok + "'");
      return std::nullopt;
    }
    if (!pda_.has_letter(tok[0])) {
      fail(raw.number, "unknown symbol '" + tok + "' (not in sigma)");
      return std::nullopt;
    }
    return tok[0];
  }

  std::optional<State> parse_state(const RawLine& raw, const std::string& tok) {
    auto v = parse_int(raw, tok);
    if (!v) return std::nullopt;
    if (*v < 1 || *v > pda_.n) {
      fail(raw.number, "state index " + tok + " out of range [1," +
                           std::to_string(pda_.n) + "]");
      return std::nullopt;
    }
    return static_cast<State>(*v);
  }

  std::optional<StackSym> parse_gamma(const RawLine& raw, const std::string& tok) {
    auto idx = pda_.gamma_index(tok);
    if (!idx) {
      fail(raw.number, "unknown symbol '" + tok + "' (not in gamma)");
      return std::nullopt;
    }
    return idx;
  }

  void build() {
    {
      auto sr = Semiring::from_name(semiring_line_->tokens[1]);
      if (!sr) {
        fail(semiring_line_->number,
             "unknown semiring '" + semiring_line_->tokens[1] + "'");
        return;
      }
      pda_.semiring = *sr;
    }
    {
      auto n = parse_int(*states_line_, states_line_->tokens[1]);
      if (!n) return;
      if (*n < 1) {
        fail(states_line_->number, "state count must be >= 1");
        return;
      }
      pda_.n = static_cast<int>(*n);
    }
    {
      auto l = parse_int(*repeated_line_, repeated_line_->tokens[1]);
      if (!l) return;
      if (*l < 0 || *l > pda_.n) {
        fail(repeated_line_->number, "repeated bound out of range (repeated " +
                                         repeated_line_->tokens[1] +
                                         ", states " + std::to_string(pda_.n) +
                                         ")");
        return;
      }
      pda_.repeated_bound = static_cast<int>(*l);
    }
    for (size_t k = 1; k < gamma_line_->tokens.size(); ++k) {
      const std::string& name = gamma_line_->tokens[k];
      if (!valid_symbol_name(name)) {
        fail(gamma_line_->number, "bad gamma symbol '" + name + "'");
        continue;
      }
      if (pda_.gamma_index(name)) {
        fail(gamma_line_->number, "duplicate gamma symbol '" + name + "'");
        continue;
      }
      pda_.gamma.push_back(name);
    }
    for (size_t k = 1; k < sigma_line_->tokens.size(); ++k) {
      const std::string& tok = sigma_line_->tokens[k];
      if (tok.size() != 1 || tok == "#") {
        fail(sigma_line_->number,
             "input letters must be single characters, got '" + tok + "'");
        continue;
      }
      if (pda_.has_letter(tok[0])) {
        fail(sigma_line_->number, "duplicate input letter '" + tok + "'");
        continue;
      }
      pda_.sigma.push_back(tok[0]);
    }
    std::sort(pda_.sigma.begin(), pda_.sigma.end());
    pda_.initial.assign(static_cast<size_t>(pda_.n), LetterPoly{});
    pda_.final_weights.assign(static_cast<size_t>(pda_.n), LetterPoly{});
    pda_.matrix = PdMatrix(pda_.n);
    {
      auto p0 = parse_gamma(*stack_line_, stack_line_->tokens[1]);
      if (!p0) return;
      pda_.start_symbol = *p0;
    }

    std::set<std::tuple<char, State, Letter>> vector_seen;
    for (const RawLine& raw : vector_lines_) {
      if (raw.tokens.size() < 3 || raw.tokens.size() > 4) {
        fail(raw.number, "'" + raw.tokens[0] + "' expects: state letter|eps [weight]");
        continue;
      }
      auto state = parse_state(raw, raw.tokens[1]);
      auto letter = parse_letter(raw, raw.tokens[2]);
      if (!state || !letter) continue;
      Weight w = parse_weight_tokens(raw, raw.tokens, 3);
      if (!vector_seen.insert({raw.tokens[0][0], *state, *letter}).second) {
        fail(raw.number, "duplicate entry for " + raw.tokens[0] + " " +
                             raw.tokens[1] + " " + raw.tokens[2]);
        continue;
      }
      auto& vec = raw.tokens[0] == "I" ? pda_.initial : pda_.final_weights;
      vec[static_cast<size_t>(*state) - 1].set(*letter, w);
    }

    std::set<std::tuple<State, StackSym, Letter, State, StackWord>> trans_seen;
    for (const RawLine& raw : trans_lines_) {
      if (raw.tokens.size() < 6) {
        fail(raw.number, "'trans' expects: i p letter|eps j REPL... [weight]");
        continue;
      }
      auto i = parse_state(raw, raw.tokens[1]);
      auto p = parse_gamma(raw, raw.tokens[2]);
      auto letter = parse_letter(raw, raw.tokens[3]);
      auto j = parse_state(raw, raw.tokens[4]);
      if (!i || !p || !letter || !j) continue;

      // Remaining tokens are the replacement, optionally followed by a
      // weight literal. Gamma symbols can never look like weights.
      size_t end = raw.tokens.size();
      bool explicit_weight = end - 5 >= 2 && looks_like_weight(raw.tokens[end - 1]);
      Weight w = pda_.semiring.one();
      if (explicit_weight) {
        w = parse_weight_tokens(raw, raw.tokens, end - 1);
        --end;
      }
      StackWord repl;
      bool ok = true;
      if (end - 5 == 0) {
        fail(raw.number, "'trans' is missing the replacement");
        continue;
      }
      if (raw.tokens[5] == "eps") {
        if (end != 6) {
          fail(raw.number, "'eps' replacement must stand alone");
          continue;
        }
      } else {
        for (size_t k = 5; k < end && ok; ++k) {
          auto sym = parse_gamma(raw, raw.tokens[k]);
          if (!sym) {
            ok = false;
          } else {
            repl.push_back(*sym);
          }
        }
      }
      if (!ok) continue;
      if (!trans_seen.insert({*i, *p, *letter, *j, repl}).second) {
        fail(raw.number, "duplicate trans entry");
        continue;
      }
      if (w.is_zero()) continue;
      pda_.matrix.add_entry(pda_.semiring, *p, repl, *i, *j, *letter, w);
    }
  }

  std::vector<RawLine> lines_;
  std::vector<std::string> errors_;
  std::optional<RawLine> semiring_line_, states_line_, repeated_line_,
      gamma_line_, sigma_line_, stack_line_;
  std::vector<RawLine> vector_lines_, trans_lines_;
  OmegaPda pda_;
};

}  // namespace

ParseError::ParseError(std::vector<std::string> messages)
    : std::runtime_error(join(messages)), messages_(std::move(messages)) {}

OmegaPda parse_spec(std::string_view text) { return Parser(text).run(); }

std::string serialize_spec(const OmegaPda& pda) {
  std::string out;
  out += "semiring " + std::string(pda.semiring.name()) + "\n";
  out += "states " + std::to_string(pda.n) + "\n";
  out += "repeated " + std::to_string(pda.repeated_bound) + "\n";
  out += "gamma";
  for (const std::string& g : pda.gamma) out += " " + g;
  out += "\nsigma";
  for (Letter a : pda.sigma) out += std::string(" ") + a;
  out += "\ninitial-stack " + pda.gamma[pda.start_symbol] + "\n";
  auto emit_vector = [&](const char* name, const std::vector<LetterPoly>& vec) {
    for (size_t s = 0; s < vec.size(); ++s)
      for (const auto& [a, w] : vec[s].terms())
        out += std::string(name) + " " + std::to_string(s + 1) + " " +
               letter_name(a) + " " + w.to_string() + "\n";
  };
  emit_vector("I", pda.initial);
  emit_vector("P", pda.final_weights);
  for (const auto& [key, cells] : pda.matrix.blocks()) {
    const auto& [top, repl] = key;
    for (State i = 1; i <= pda.n; ++i)
      for (State j = 1; j <= pda.n; ++j)
        for (const auto& [a, w] : pda.matrix.cell(cells, i, j).terms()) {
          out += "trans " + std::to_string(i) + " " + pda.gamma[top] + " " +
                 letter_name(a) + " " + std::to_string(j);
          if (repl.empty()) {
            out += " eps";
          } else {
            for (StackSym s : repl) out += " " + pda.gamma[s];
          }
          out += " " + w.to_string() + "\n";
        }
  }
  return out;
}

}  // namespace wopda
