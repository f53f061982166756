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

#include "lambek/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

#include "lambek/errors.hpp"

namespace lambek {

struct Formula::Node {
  Connective kind;
  std::string name;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Atom;
  node->hash = mix(0, std::hash<std::string>{}(name));
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::diamond(Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Diamond;
  node->size = 1 + body.size();
  node->hash = mix(1, body.hash());
  node->left = std::move(body);
  return Formula(std::move(node));
}

Formula Formula::box(Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Box;
  node->size = 1 + body.size();
  node->hash = mix(2, body.hash());
  node->left = std::move(body);
  return Formula(std::move(node));
}

#define LAMBEK_BINARY_CTOR(fn, conn, a, b)                                  \
  Formula Formula::fn(Formula a, Formula b) {                               \
    auto node = std::make_shared<Node>();                                   \
    node->kind = Connective::conn;                                          \
    node->size = 1 + a.size() + b.size();                                   \
    node->hash = mix(mix(static_cast<std::size_t>(Connective::conn), a.hash()), b.hash()); \
    node->left = std::move(a);                                              \
    node->right = std::move(b);                                             \
    return Formula(std::move(node));                                        \
  }

LAMBEK_BINARY_CTOR(tensor, Tensor, left, right)
LAMBEK_BINARY_CTOR(over, Over, num, den)
LAMBEK_BINARY_CTOR(under, Under, den, num)

#undef LAMBEK_BINARY_CTOR

Connective Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
  if (!is_atom()) throw Error("name() on a non-atomic formula");
  return node_->name;
}

const Formula& Formula::body() const {
  if (!is(Connective::Diamond) && !is(Connective::Box)) throw Error("body() on a non-modal formula");
  return *node_->left;
}

const Formula& Formula::left() const {
  if (!node_->right) throw Error("left() on a formula that is not binary");
  return *node_->left;
}

const Formula& Formula::right() const {
  if (!node_->right) throw Error("right() on a formula that is not binary");
  return *node_->right;
}

std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::Atom:
      return a.node_->name.compare(b.node_->name) <=> 0;
    case Connective::Diamond:
    case Connective::Box:
      return *a.node_->left <=> *b.node_->left;
    default:
      if (auto c = *a.node_->left <=> *b.node_->left; c != 0) return c;
      return *a.node_->right <=> *b.node_->right;
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_division();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced ')'");
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  // division := product (("/" | "\") product)*, one slash direction per level
  Formula parse_division() {
    Formula acc = parse_product();
    std::optional<char> direction;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c != '/' && c != '\\') break;
      if (direction && *direction != c) fail("mixed '/' and '\\' need parentheses");
      direction = c;
      ++pos_;
      Formula rhs = parse_product();
      acc = (c == '/') ? Formula::over(std::move(acc), std::move(rhs))
                       : Formula::under(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Formula parse_product() {
    Formula acc = parse_unary();
    while (accept("*")) acc = Formula::tensor(std::move(acc), parse_unary());
    return acc;
  }

  Formula parse_unary() {
    skip_space();
    if (accept("<>")) return Formula::diamond(parse_unary());
    if (accept("[]")) return Formula::box(parse_unary());
    if (accept("(")) {
      Formula inner = parse_division();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= '0' && text_[pos_] <= '9')))
        ++pos_;
      return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == ')') fail("unbalanced ')'");
    fail(std::string("unknown token '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength: unary forms bind tightest, then the product, then slashes.
int level(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::Diamond:
    case Connective::Box:
      return 3;
    case Connective::Tensor:
      return 2;
    default:
      return 1;
  }
}

void print_into(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(f, out);
  if (parens) out += ')';
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::Diamond:
    case Connective::Box:
      out += f.is(Connective::Diamond) ? "<>" : "[]";
      print_wrapped(f.body(), level(f.body()) < 3, out);
      return;
    case Connective::Tensor:
      print_wrapped(f.left(), level(f.left()) < 2, out);
      out += '*';
      print_wrapped(f.right(), level(f.right()) <= 2, out);
      return;
    case Connective::Over:
      print_wrapped(f.left(), f.left().is(Connective::Under), out);
      out += '/';
      print_wrapped(f.right(), level(f.right()) <= 1, out);
      return;
    case Connective::Under:
      print_wrapped(f.left(), f.left().is(Connective::Over), out);
      out += '\\';
      print_wrapped(f.right(), level(f.right()) <= 1, out);
      return;
  }
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out.push_back(f.name());
      return;
    case Connective::Diamond:
    case Connective::Box:
      collect_atoms(f.body(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

void interpret_into(const Formula& f, const AtomMap& atom_map, SpaceSignature& out) {
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = atom_map.find(f.name());
      if (it == atom_map.end()) throw UnknownAtomError("unknown atom '" + f.name() + "'");
      out.spaces.push_back(it->second);
      return;
    }
    case Connective::Diamond:
    case Connective::Box:
      interpret_into(f.body(), atom_map, out);
      return;
    default:
      interpret_into(f.left(), atom_map, out);
      interpret_into(f.right(), atom_map, out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t SpaceSignature::total_dim() const {
  std::size_t total = 1;
  for (const auto& s : spaces) total *= s.dim;
  return total;
}

std::vector<std::size_t> SpaceSignature::dims() const {
  std::vector<std::size_t> out;
  out.reserve(spaces.size());
  for (const auto& s : spaces) out.push_back(s.dim);
  return out;
}

std::string SpaceSignature::to_string() const {
  if (spaces.empty()) return "I";
  std::ostringstream os;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    if (i) os << "⊗";
    os << spaces[i].label;
  }
  return os.str();
}

SpaceSignature operator+(SpaceSignature a, const SpaceSignature& b) {
  a.spaces.insert(a.spaces.end(), b.spaces.begin(), b.spaces.end());
  return a;
}

SpaceSignature interpret_type(const Formula& f, const AtomMap& atom_map) {
  SpaceSignature out;
  interpret_into(f, atom_map, out);
  return out;
}

}  // namespace lambek
