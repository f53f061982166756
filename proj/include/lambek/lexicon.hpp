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

#ifndef LAMBEK_LEXICON_HPP_
#define LAMBEK_LEXICON_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lambek/formula.hpp"
#include "lambek/tensor.hpp"

namespace lambek {

/// Row-major literal entries.
struct ExplicitValues {
  std::vector<double> data;
};

/// Uniform [0,1) entries from a splitmix64 stream started at `seed`,
/// filled in row-major order.
struct SeededRandom {
  std::uint64_t seed = 0;
};

/// A named construction; only "relpron" is known.
struct Recipe {
  std::string name;
};

struct AllOnes {};

using TensorSource = std::variant<ExplicitValues, SeededRandom, Recipe, AllOnes>;

struct LexiconEntry {
  std::string word;
  Formula formula;
  TensorSource source;
  DenseTensor tensor;
  std::size_t line = 0;
};

/// Advances `state` and returns the next splitmix64 output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Tensor of the given shape with entries (x >> 11) · 2⁻⁵³ for successive
/// splitmix64 outputs x.
DenseTensor seeded_uniform(const std::vector<std::size_t>& shape, std::uint64_t seed);

/// Words with their types and meanings, plus the atom-to-space map.
/// Immutable once built.
class Lexicon {
 public:
  /// Parses lexicon text. Errors are ParseError (with a 1-based line),
  /// ShapeError for values that do not fit the type, and UnknownAtomError.
  static Lexicon parse(std::string_view text);

  const AtomMap& atom_map() const { return atom_map_; }
  /// Declared spaces and their dimensions, in declaration order.
  const std::vector<BaseSpace>& spaces() const { return spaces_; }
  /// Distinct words in file order.
  std::vector<std::string> words() const;
  bool contains(const std::string& word) const { return index_.count(word) > 0; }
  /// Homonym entries in file order; throws UnknownWordError.
  std::vector<LexiconEntry> entries(const std::string& word) const;

  /// Same lexicon with some space dimensions replaced, all tensors
  /// rebuilt. Throws ShapeError when explicit values no longer fit.
  Lexicon with_dims(const std::map<std::string, std::size_t>& dims) const;
  /// Same lexicon with `offset` added to every seed.
  Lexicon with_seed_offset(std::uint64_t offset) const;

 private:
  void build();

  std::vector<BaseSpace> spaces_;
  std::vector<std::pair<std::string, std::string>> atom_decls_;
  std::vector<LexiconEntry> entries_;
  AtomMap atom_map_;
  std::map<std::string, std::vector<std::size_t>> index_;
};

Lexicon load_lexicon(const std::filesystem::path& path);

/// All readings of a word as (type, tensor), in file order.
std::vector<std::pair<Formula, DenseTensor>> resolve(const Lexicon& lexicon,
                                                     const std::string& word);

}  // namespace lambek

#endif  // LAMBEK_LEXICON_HPP_
