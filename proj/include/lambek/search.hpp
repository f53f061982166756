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

#ifndef LAMBEK_SEARCH_HPP_
#define LAMBEK_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "lambek/proof.hpp"

namespace lambek {

/// Which extraction postulates proof search may use.
enum class Postulate { AlphaL, SigmaL, AlphaR, SigmaR };

struct SearchConfig {
  std::set<Postulate> postulates;
  /// Maximum proof height (rule applications along any branch).
  std::size_t max_depth = 40;
  std::optional<std::size_t> max_proofs;

  /// Named postulate sets: "none", "left", "right", "both".
  static std::set<Postulate> postulate_set(std::string_view name);
};

struct SearchResult {
  std::vector<Proof> proofs;
  /// Set when the depth bound or max_proofs cut the search short, so
  /// more proofs may exist.
  bool bound_hit = false;
};

/// Backward, cut-free search for every proof of `goal` within the bound.
///
/// Rules are tried in RuleName order and premises left to right, so the
/// result order is deterministic. A goal already open on the current branch
/// is not expanded again. Goals whose atom polarity counts do not balance
/// are discarded up front: no rule can derive them.
SearchResult derive(const Arrow& goal, const SearchConfig& config);

/// Premise goals for applying `rule` backwards to `goal`, or nullopt if
/// the rule does not match. Axiom yields an empty list on a match.
std::optional<std::vector<Arrow>> backward_premises(RuleName rule, const Arrow& goal);

/// Atom polarity balance; a necessary condition for derivability.
bool polarity_balanced(const Arrow& goal);

}  // namespace lambek

#endif  // LAMBEK_SEARCH_HPP_
