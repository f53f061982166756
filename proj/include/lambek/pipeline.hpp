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

#ifndef LAMBEK_PIPELINE_HPP_
#define LAMBEK_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambek/delta.hpp"
#include "lambek/errors.hpp"
#include "lambek/lexicon.hpp"
#include "lambek/proof.hpp"
#include "lambek/search.hpp"
#include "lambek/tensor.hpp"

namespace lambek {

/// How the word types are grouped into an antecedent.
struct Bracketing {
  enum class Kind { Right, Explicit, All };
  Kind kind = Kind::Right;
  /// For Explicit: a parenthesised tree over the input words, e.g.
  /// `(mannen (die (vrouwen haten)))`.
  std::string spec;

  /// Parses `right`, `all` or `explicit:<spec>`.
  static Bracketing parse(std::string_view text);
};

/// Antecedent trees over `types` for the given bracketing. `words` are
/// only used to match an explicit spec.
std::vector<Formula> bracketings(const std::vector<Formula>& types,
                                 const std::vector<std::string>& words, const Bracketing& b);

struct PipelineOptions {
  SearchConfig search{SearchConfig::postulate_set("left"), 40, std::nullopt};
  Bracketing bracketing;
};

struct ReadingReport {
  Arrow goal;
  /// Homonym index chosen for each word.
  std::vector<std::size_t> senses;
  Delta delta;
  Proof proof;
  std::size_t proof_count = 0;
  std::string einstein;
  DenseTensor value;
};

struct RunReport {
  std::vector<std::string> words;
  std::string goal_atom;
  /// Every sequent tried, one per sense choice and bracketing.
  std::vector<Arrow> goals;
  std::size_t proofs_found = 0;
  std::vector<ReadingReport> readings;
  double seconds = 0.0;
  bool bound_hit = false;
};

/// Thrown when no proof of any tried sequent exists within the bound.
class UnderivableError : public Error {
 public:
  using Error::Error;
};

/// Finds every reading of `words` as `goal_atom`, prints each in index
/// notation and evaluates it on the lexicon tensors.
RunReport cmd_derive(const Lexicon& lexicon, const std::vector<std::string>& words,
                     const std::string& goal_atom, const PipelineOptions& options);

struct EquivalenceCheck {
  Arrow goal;
  std::vector<std::size_t> senses;
  std::string proof;
  /// Deviation on the lexicon tensors.
  double lexicon_deviation = 0.0;
  /// Deviation of the full matrices, when basis checking is on.
  std::optional<double> basis_deviation;
};

struct EquivalenceReport {
  std::vector<EquivalenceCheck> checks;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool bound_hit = false;
  double seconds = 0.0;
};

struct EquivalenceOptions {
  double tolerance = 1e-9;
  bool basis = false;
  /// Largest intermediate space the categorical path may build.
  std::size_t cap = 1'000'000;
  /// Test hook: evaluate a deliberately mislabelled delta instead of the
  /// proof's own, so the comparison must fail.
  bool corrupt = false;
};

/// Compares categorical_eval with delta contraction for every proof found.
EquivalenceReport cmd_check_equivalence(const Lexicon& lexicon,
                                        const std::vector<std::string>& words,
                                        const std::string& goal_atom,
                                        const PipelineOptions& options,
                                        const EquivalenceOptions& check);

struct Similarity {
  std::size_t first = 0;
  std::size_t second = 0;
  double cosine = 0.0;
};

struct CompareReport {
  RunReport run;
  std::vector<Similarity> similarities;
};

/// Pairwise cosine similarity of the reading vectors, pairs in
/// lexicographic order. Needs at least two readings.
CompareReport cmd_compare(const Lexicon& lexicon, const std::vector<std::string>& words,
                          const std::string& goal_atom, const PipelineOptions& options);

std::string format_text(const RunReport& r);
std::string format_text(const EquivalenceReport& r);
std::string format_text(const CompareReport& r);

/// JSON documents, two-space indented.
std::string format_json(const RunReport& r);
std::string format_json(const EquivalenceReport& r);
std::string format_json(const CompareReport& r);

/// A delta as JSON: pairs, slots and loops with explicit ids and spaces.
std::string delta_to_json(const Delta& d);
Delta delta_from_json(std::string_view text);

}  // namespace lambek

#endif  // LAMBEK_PIPELINE_HPP_
