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

#include "lambek/search.hpp"

#include <map>
#include <string>
#include <unordered_set>

#include "lambek/errors.hpp"

namespace lambek {

std::set<Postulate> SearchConfig::postulate_set(std::string_view name) {
  if (name == "none") return {};
  if (name == "left") return {Postulate::AlphaL, Postulate::SigmaL};
  if (name == "right") return {Postulate::AlphaR, Postulate::SigmaR};
  if (name == "both")
    return {Postulate::AlphaL, Postulate::SigmaL, Postulate::AlphaR, Postulate::SigmaR};
  throw Error("unknown postulate set '" + std::string(name) + "'");
}

std::optional<std::vector<Arrow>> backward_premises(RuleName rule, const Arrow& goal) {
  using C = Connective;
  const Formula& src = goal.source;
  const Formula& tgt = goal.target;
  switch (rule) {
    case RuleName::Axiom:
      if (src.is_atom() && src == tgt) return std::vector<Arrow>{};
      return std::nullopt;
    case RuleName::ResUnder:  // B → A\C  ⇐  A⊗B → C
      if (!tgt.is(C::Under)) return std::nullopt;
      return std::vector<Arrow>{{Formula::tensor(tgt.left(), src), tgt.right()}};
    case RuleName::ResUnderInv:  // A⊗B → C  ⇐  B → A\C
      if (!src.is(C::Tensor)) return std::nullopt;
      return std::vector<Arrow>{{src.right(), Formula::under(src.left(), tgt)}};
    case RuleName::ResOver:  // A → C/B  ⇐  A⊗B → C
      if (!tgt.is(C::Over)) return std::nullopt;
      return std::vector<Arrow>{{Formula::tensor(src, tgt.right()), tgt.left()}};
    case RuleName::ResOverInv:  // A⊗B → C  ⇐  A → C/B
      if (!src.is(C::Tensor)) return std::nullopt;
      return std::vector<Arrow>{{src.left(), Formula::over(tgt, src.right())}};
    case RuleName::ResDia:  // A → □B  ⇐  ◇A → B
      if (!tgt.is(C::Box)) return std::nullopt;
      return std::vector<Arrow>{{Formula::diamond(src), tgt.body()}};
    case RuleName::ResDiaInv:  // ◇A → B  ⇐  A → □B
      if (!src.is(C::Diamond)) return std::nullopt;
      return std::vector<Arrow>{{src.body(), Formula::box(tgt)}};
    case RuleName::MonDia:
      if (!src.is(C::Diamond) || !tgt.is(C::Diamond)) return std::nullopt;
      return std::vector<Arrow>{{src.body(), tgt.body()}};
    case RuleName::MonBox:
      if (!src.is(C::Box) || !tgt.is(C::Box)) return std::nullopt;
      return std::vector<Arrow>{{src.body(), tgt.body()}};
    case RuleName::MonTensor:
      if (!src.is(C::Tensor) || !tgt.is(C::Tensor)) return std::nullopt;
      return std::vector<Arrow>{{src.left(), tgt.left()}, {src.right(), tgt.right()}};
    case RuleName::MonOver:  // A/D → B/C  ⇐  A → B, C → D
      if (!src.is(C::Over) || !tgt.is(C::Over)) return std::nullopt;
      return std::vector<Arrow>{{src.left(), tgt.left()}, {tgt.right(), src.right()}};
    case RuleName::MonUnder:  // B\C → A\D  ⇐  A → B, C → D
      if (!src.is(C::Under) || !tgt.is(C::Under)) return std::nullopt;
      return std::vector<Arrow>{{tgt.left(), src.left()}, {src.right(), tgt.right()}};
    case RuleName::AlphaL:  // ◇A⊗(B⊗C)  ⇐  (◇A⊗B)⊗C
    case RuleName::SigmaL:  // ◇A⊗(B⊗C)  ⇐  B⊗(◇A⊗C)
      if (!src.is(C::Tensor) || !src.left().is(C::Diamond) || !src.right().is(C::Tensor))
        return std::nullopt;
      if (rule == RuleName::AlphaL)
        return std::vector<Arrow>{
            {Formula::tensor(Formula::tensor(src.left(), src.right().left()), src.right().right()),
             tgt}};
      return std::vector<Arrow>{
          {Formula::tensor(src.right().left(), Formula::tensor(src.left(), src.right().right())),
           tgt}};
    case RuleName::AlphaR:  // (A⊗B)⊗◇C  ⇐  A⊗(B⊗◇C)
    case RuleName::SigmaR:  // (A⊗B)⊗◇C  ⇐  (A⊗◇C)⊗B
      if (!src.is(C::Tensor) || !src.right().is(C::Diamond) || !src.left().is(C::Tensor))
        return std::nullopt;
      if (rule == RuleName::AlphaR)
        return std::vector<Arrow>{
            {Formula::tensor(src.left().left(), Formula::tensor(src.left().right(), src.right())),
             tgt}};
      return std::vector<Arrow>{
          {Formula::tensor(Formula::tensor(src.left().left(), src.right()), src.left().right()),
           tgt}};
  }
  return std::nullopt;
}

namespace {

// Positive occurrences count +1, negative ones -1. Denominators flip.
void polarity_counts(const Formula& f, int sign, std::map<std::string, int>& counts) {
  switch (f.kind()) {
    case Connective::Atom:
      counts[f.name()] += sign;
      return;
    case Connective::Diamond:
    case Connective::Box:
      polarity_counts(f.body(), sign, counts);
      return;
    case Connective::Tensor:
      polarity_counts(f.left(), sign, counts);
      polarity_counts(f.right(), sign, counts);
      return;
    case Connective::Over:
      polarity_counts(f.left(), sign, counts);
      polarity_counts(f.right(), -sign, counts);
      return;
    case Connective::Under:
      polarity_counts(f.left(), -sign, counts);
      polarity_counts(f.right(), sign, counts);
      return;
  }
}

bool rule_enabled(RuleName rule, const SearchConfig& config) {
  switch (rule) {
    case RuleName::AlphaL:
      return config.postulates.contains(Postulate::AlphaL);
    case RuleName::SigmaL:
      return config.postulates.contains(Postulate::SigmaL);
    case RuleName::AlphaR:
      return config.postulates.contains(Postulate::AlphaR);
    case RuleName::SigmaR:
      return config.postulates.contains(Postulate::SigmaR);
    default:
      return true;
  }
}

class Searcher {
 public:
  explicit Searcher(const SearchConfig& config) : config_(config) {}

  std::vector<Proof> prove(const Arrow& goal, std::size_t depth_left) {
    std::vector<Proof> out;
    if (depth_left == 0) {
      bound_hit_ = true;
      return out;
    }
    if (!polarity_balanced(goal)) return out;
    if (!open_.insert(goal).second) return out;

    for (RuleName rule : kAllRules) {
      if (!rule_enabled(rule, config_)) continue;
      auto premises = backward_premises(rule, goal);
      if (!premises) continue;
      if (premises->empty()) {
        out.emplace_back(rule, goal);
        continue;
      }
      std::vector<std::vector<Proof>> options;
      bool dead = false;
      for (const auto& premise : *premises) {
        options.push_back(prove(premise, depth_left - 1));
        if (options.back().empty()) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      if (options.size() == 1) {
        for (auto& p : options[0]) out.emplace_back(rule, goal, std::vector<Proof>{p});
      } else {
        for (const auto& l : options[0])
          for (const auto& r : options[1]) out.emplace_back(rule, goal, std::vector<Proof>{l, r});
      }
    }
    open_.erase(goal);
    return out;
  }

  bool bound_hit() const { return bound_hit_; }

 private:
  const SearchConfig& config_;
  std::unordered_set<Arrow> open_;
  bool bound_hit_ = false;
};

}  // namespace

bool polarity_balanced(const Arrow& goal) {
  std::map<std::string, int> counts;
  polarity_counts(goal.source, 1, counts);
  polarity_counts(goal.target, -1, counts);
  for (const auto& [atom, n] : counts)
    if (n != 0) return false;
  return true;
}

SearchResult derive(const Arrow& goal, const SearchConfig& config) {
  if (config.max_depth == 0) throw Error("max_depth must be at least 1");
  Searcher searcher(config);
  SearchResult result;
  result.proofs = searcher.prove(goal, config.max_depth);
  result.bound_hit = searcher.bound_hit();
  if (config.max_proofs && result.proofs.size() > *config.max_proofs) {
    result.proofs.erase(result.proofs.begin() + static_cast<std::ptrdiff_t>(*config.max_proofs), result.proofs.end());
    result.bound_hit = true;
  }
  return result;
}

}  // namespace lambek
