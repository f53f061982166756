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

#ifndef LAMBEK_FORMULA_HPP_
#define LAMBEK_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lambek {

enum class Connective { Atom, Diamond, Box, Tensor, Over, Under };

/// An NL◇ type. Immutable; copies share structure.
///
/// Binary formulas expose their operands in written order: for `A/B`
/// left() is the numerator A and right() the denominator B; for `A\B`
/// left() is the denominator A and right() the numerator B.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula diamond(Formula body);
  static Formula box(Formula body);
  static Formula tensor(Formula left, Formula right);
  /// `num/den`
  static Formula over(Formula num, Formula den);
  /// `den\num`
  static Formula under(Formula den, Formula num);

  Connective kind() const;
  bool is_atom() const { return kind() == Connective::Atom; }
  bool is(Connective c) const { return kind() == c; }

  const std::string& name() const;
  const Formula& body() const;
  const Formula& left() const;
  const Formula& right() const;

  /// Number of nodes in the tree.
  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the ASCII type syntax: `<>` and `[]` prefixes, `*` for the
/// product, `/` and `\` for the slashes. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

/// Atom names occurring in `f`, sorted and deduplicated.
std::vector<std::string> atoms_of(const Formula& f);

struct BaseSpace {
  std::string label;
  std::size_t dim = 0;

  friend bool operator==(const BaseSpace&, const BaseSpace&) = default;
};

/// Ordered list of base spaces; the empty list is the scalar space.
struct SpaceSignature {
  std::vector<BaseSpace> spaces;

  std::size_t size() const { return spaces.size(); }
  bool empty() const { return spaces.empty(); }
  /// Product of component dimensions (1 for the empty signature).
  std::size_t total_dim() const;
  std::vector<std::size_t> dims() const;
  std::string to_string() const;

  friend SpaceSignature operator+(SpaceSignature a, const SpaceSignature& b);
  friend bool operator==(const SpaceSignature&, const SpaceSignature&) = default;
};

using AtomMap = std::map<std::string, BaseSpace>;

/// Type-level interpretation: atoms map through `atom_map`, the modalities
/// are transparent and every binary connective concatenates the operand
/// signatures in written order. Throws UnknownAtomError.
SpaceSignature interpret_type(const Formula& f, const AtomMap& atom_map);

}  // namespace lambek

template <>
struct std::hash<lambek::Formula> {
  std::size_t operator()(const lambek::Formula& f) const noexcept { return f.hash(); }
};

#endif  // LAMBEK_FORMULA_HPP_
