// Copyright 2026 The lambek-delta Authors.
//
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

#ifndef LAMBEK_PROOF_HPP_
#define LAMBEK_PROOF_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambek/formula.hpp"

namespace lambek {

/// An arrow `source --> target` of the calculus.
struct Arrow {
  Formula source;
  Formula target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend std::strong_ordering operator<=>(const Arrow&, const Arrow&) = default;
  std::size_t hash() const { return source.hash() * 31 + target.hash(); }
};

std::string print_arrow(const Arrow& a);

/// Inference rules, in the order proof search tries them.
enum class RuleName {
  Axiom,
  ResUnder,     // ◁    A⊗B → C  ⟹  B → A\C
  ResUnderInv,  // ◁⁻¹  B → A\C  ⟹  A⊗B → C
  ResOver,      // ▷    A⊗B → C  ⟹  A → C/B
  ResOverInv,   // ▷⁻¹  A → C/B  ⟹  A⊗B → C
  ResDia,       // ▽    ◇A → B   ⟹  A → □B
  ResDiaInv,    // ▽⁻¹  A → □B   ⟹  ◇A → B
  MonDia,
  MonBox,
  MonTensor,
  MonOver,   // A→B, C→D  ⟹  A/D → B/C
  MonUnder,  // A→B, C→D  ⟹  B\C → A\D
  AlphaL,    // (◇A⊗B)⊗C → D  ⟹  ◇A⊗(B⊗C) → D
  SigmaL,    // B⊗(◇A⊗C) → D  ⟹  ◇A⊗(B⊗C) → D
  AlphaR,    // A⊗(B⊗◇C) → D  ⟹  (A⊗B)⊗◇C → D
  SigmaR,    // (A⊗◇C)⊗B → D  ⟹  (A⊗B)⊗◇C → D
};

inline constexpr RuleName kAllRules[] = {
    RuleName::Axiom,     RuleName::ResUnder,  RuleName::ResUnderInv, RuleName::ResOver,
    RuleName::ResOverInv, RuleName::ResDia,   RuleName::ResDiaInv,   RuleName::MonDia,
    RuleName::MonBox,    RuleName::MonTensor, RuleName::MonOver,     RuleName::MonUnder,
    RuleName::AlphaL,    RuleName::SigmaL,    RuleName::AlphaR,      RuleName::SigmaR,
};

std::string_view rule_name(RuleName r);
std::optional<RuleName> rule_from_name(std::string_view name);
std::size_t rule_arity(RuleName r);
bool is_structural(RuleName r);

/// Derivation tree. Subtrees are shared between copies.
class Proof {
 public:
  Proof(RuleName rule, Arrow conclusion, std::vector<Proof> premises = {});

  RuleName rule() const { return node_->rule; }
  const Arrow& conclusion() const { return node_->conclusion; }
  const std::vector<Proof>& premises() const { return node_->premises; }

  std::size_t height() const { return node_->height; }
  std::size_t node_count() const { return node_->node_count; }

  friend bool operator==(const Proof& a, const Proof& b);

 private:
  struct Node {
    RuleName rule;
    Arrow conclusion;
    std::vector<Proof> premises;
    std::size_t height;
    std::size_t node_count;
  };
  std::shared_ptr<const Node> node_;
};

/// The conclusion a rule licenses from the given premises, or nullopt when
/// the premises do not fit the rule's schema. Axiom takes no premises and
/// needs the candidate conclusion instead, so it is not covered here.
std::optional<Arrow> conclude(RuleName rule, const std::vector<Arrow>& premises);

/// True iff every node instantiates its rule schema exactly. Axioms must be
/// atomic identities.
bool check_proof(const Proof& p);

/// `(Rule A --> B premise*)`, one line, stable across runs.
std::string serialize_proof(const Proof& p);

/// Multi-line rendering with two-space indentation per level.
std::string pretty_proof(const Proof& p);

/// Reads the serialize_proof format back. Does not validate the rules.
Proof parse_proof(std::string_view text);

}  // namespace lambek

template <>
struct std::hash<lambek::Arrow> {
  std::size_t operator()(const lambek::Arrow& a) const noexcept { return a.hash(); }
};

#endif  // LAMBEK_PROOF_HPP_
