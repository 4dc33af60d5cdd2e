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

#include "wopda/semiring.hpp"

namespace wopda {

std::string Weight::to_string() const {
  return inf_ ? "inf" : std::to_string(n_);
}

std::optional<Semiring> Semiring::from_name(std::string_view name) {
  if (name == "boolean") return Semiring(SemiringKind::kBoolean);
  if (name == "nat-inf") return Semiring(SemiringKind::kNatInf);
  return std::nullopt;
}

std::string_view Semiring::name() const {
  return kind_ == SemiringKind::kBoolean ? "boolean" : "nat-inf";
}

Weight Semiring::add(Weight a, Weight b) const {
  if (kind_ == SemiringKind::kBoolean) {
    return Weight::nat((!a.is_zero() || !b.is_zero()) ? 1 : 0);
  }
  if (a.is_inf() || b.is_inf()) return Weight::infinity();
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a.value(), b.value(), &r)) {
    return Weight::infinity();
  }
  return Weight::nat(r);
}

Weight Semiring::mul(Weight a, Weight b) const {
  if (kind_ == SemiringKind::kBoolean) {
    return Weight::nat((!a.is_zero() && !b.is_zero()) ? 1 : 0);
  }
  // inf * 0 = 0; inf absorbs everything else.
  if (a.is_zero() || b.is_zero()) return Weight::nat(0);
  if (a.is_inf() || b.is_inf()) return Weight::infinity();
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a.value(), b.value(), &r)) {
    return Weight::infinity();
  }
  return Weight::nat(r);
}

Weight Semiring::star(Weight a) const {
  if (kind_ == SemiringKind::kBoolean) return one();
  return a.is_zero() ? one() : Weight::infinity();
}

Weight Semiring::omega(Weight a) const {
  if (kind_ == SemiringKind::kBoolean) {
    return a.is_zero() ? zero() : one();
  }
  if (a.is_zero()) return zero();
  if (!a.is_inf() && a.value() == 1) return one();
  return Weight::infinity();
}

Weight Semiring::sum(std::span<const Weight> xs) const {
  Weight acc = zero();
  for (const Weight& x : xs) acc = add(acc, x);
  return acc;
}

bool Semiring::valid(Weight a) const {
  if (kind_ == SemiringKind::kBoolean) {
    return !a.is_inf() && a.value() <= 1;
  }
  return true;
}

std::optional<Weight> Semiring::parse(std::string_view text) const {
  if (text.empty()) return std::nullopt;
  if (text == "inf") {
    if (kind_ != SemiringKind::kNatInf) return std::nullopt;
    return Weight::infinity();
  }
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (__builtin_mul_overflow(v, std::uint64_t{10}, &v)) return std::nullopt;
    if (__builtin_add_overflow(v, d, &v)) return std::nullopt;
  }
  Weight w = Weight::nat(v);
  if (!valid(w)) return std::nullopt;
  return w;
}

}  // namespace wopda
