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
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace wopda {

enum class SemiringKind { kBoolean, kNatInf };

/// An element of one of the two supported semirings: the Boolean semiring
/// ({0,1}, or, and) or the completed naturals (N u {inf}, +, *).
///
/// Weight stores the representation only; arithmetic is interpreted by a
/// Semiring, which is fixed once per automaton. Boolean values use 0/1 and
/// never the infinity flag. Natural values are exact up to the 64-bit range;
/// additions and multiplications that would exceed it saturate to infinity
/// instead of wrapping.
class Weight {
 public:
  constexpr Weight() = default;

  static constexpr Weight nat(std::uint64_t v) {
    Weight w;
    w.n_ = v;
    return w;
  }
  static constexpr Weight infinity() {
    Weight w;
    w.inf_ = true;
    return w;
  }

  constexpr bool is_inf() const { return inf_; }
  constexpr bool is_zero() const { return !inf_ && n_ == 0; }
  /// Finite payload; meaningless when is_inf().
  constexpr std::uint64_t value() const { return n_; }

  friend constexpr bool operator==(const Weight& a, const Weight& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.n_ == b.n_);
  }

  std::string to_string() const;

 private:
  std::uint64_t n_ = 0;
  bool inf_ = false;
};

/// Complete star-omega semiring operations for one of the two instances.
/// All operations are pure; Semiring is freely copyable and thread-safe.
class Semiring {
 public:
  explicit constexpr Semiring(SemiringKind kind) : kind_(kind) {}

  /// Accepts the spec-file names "boolean" and "nat-inf" (exact, lowercase).
  static std::optional<Semiring> from_name(std::string_view name);
  std::string_view name() const;

  constexpr SemiringKind kind() const { return kind_; }

  constexpr Weight zero() const { return Weight::nat(0); }
  constexpr Weight one() const { return Weight::nat(1); }

  Weight add(Weight a, Weight b) const;
  Weight mul(Weight a, Weight b) const;

  /// a* = sum of all powers of a. Boolean: always 1. Naturals: 0* = 1 and
  /// a* = inf for a != 0.
  Weight star(Weight a) const;

  /// a^omega = countably infinite product a*a*a*... Boolean: identity.
  /// Naturals: 0 -> 0, 1 -> 1, everything else (including inf) -> inf.
  Weight omega(Weight a) const;

  /// Iterated add; the empty family yields 0.
  Weight sum(std::span<const Weight> xs) const;

  /// Whether the representation is a legal element of this semiring.
  bool valid(Weight a) const;

  /// Parses a weight literal: digits, or "inf" (nat-inf only).
  std::optional<Weight> parse(std::string_view text) const;

  friend constexpr bool operator==(const Semiring& a, const Semiring& b) {
    return a.kind_ == b.kind_;
  }

 private:
  SemiringKind kind_;
};

}  // namespace wopda
