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

#include "lambek/proof.hpp"

#include <array>
#include <cctype>

#include "lambek/errors.hpp"

namespace lambek {

std::string print_arrow(const Arrow& a) {
  return print_formula(a.source) + " --> " + print_formula(a.target);
}

namespace {

constexpr std::array<std::string_view, 16> kRuleNames = {
    "Axiom",  "ResUnder", "ResUnderInv", "ResOver",   "ResOverInv", "ResDia",
    "ResDiaInv", "MonDia", "MonBox",     "MonTensor", "MonOver",    "MonUnder",
    "AlphaL", "SigmaL",   "AlphaR",      "SigmaR",
};

}  // namespace

std::string_view rule_name(RuleName r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleName> rule_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (kRuleNames[i] == name) return static_cast<RuleName>(i);
  return std::nullopt;
}

std::size_t rule_arity(RuleName r) {
  switch (r) {
    case RuleName::Axiom:
      return 0;
    case RuleName::MonTensor:
    case RuleName::MonOver:
    case RuleName::MonUnder:
      return 2;
    default:
      return 1;
  }
}

bool is_structural(RuleName r) {
  return r == RuleName::AlphaL || r == RuleName::SigmaL || r == RuleName::AlphaR ||
         r == RuleName::SigmaR;
}

Proof::Proof(RuleName rule, Arrow conclusion, std::vector<Proof> premises) {
  std::size_t height = 0;
  std::size_t count = 1;
  for (const auto& p : premises) {
    height = std::max(height, p.height());
    count += p.node_count();
  }
  node_ = std::make_shared<const Node>(
      Node{rule, std::move(conclusion), std::move(premises), height + 1, count});
}

bool operator==(const Proof& a, const Proof& b) {
  if (a.node_ == b.node_) return true;
  return a.rule() == b.rule() && a.conclusion() == b.conclusion() && a.premises() == b.premises();
}

std::optional<Arrow> conclude(RuleName rule, const std::vector<Arrow>& premises) {
  if (premises.size() != rule_arity(rule) || rule == RuleName::Axiom) return std::nullopt;
  using C = Connective;
  const Arrow& p = premises[0];
  switch (rule) {
    case RuleName::ResUnder:
      if (!p.source.is(C::Tensor)) return std::nullopt;
      return Arrow{p.source.right(), Formula::under(p.source.left(), p.target)};
    case RuleName::ResUnderInv:
      if (!p.target.is(C::Under)) return std::nullopt;
      return Arrow{Formula::tensor(p.target.left(), p.source), p.target.right()};
    case RuleName::ResOver:
      if (!p.source.is(C::Tensor)) return std::nullopt;
      return Arrow{p.source.left(), Formula::over(p.target, p.source.right())};
    case RuleName::ResOverInv:
      if (!p.target.is(C::Over)) return std::nullopt;
      return Arrow{Formula::tensor(p.source, p.target.right()), p.target.left()};
    case RuleName::ResDia:
      if (!p.source.is(C::Diamond)) return std::nullopt;
      return Arrow{p.source.body(), Formula::box(p.target)};
    case RuleName::ResDiaInv:
      if (!p.target.is(C::Box)) return std::nullopt;
      return Arrow{Formula::diamond(p.source), p.target.body()};
    case RuleName::MonDia:
      return Arrow{Formula::diamond(p.source), Formula::diamond(p.target)};
    case RuleName::MonBox:
      return Arrow{Formula::box(p.source), Formula::box(p.target)};
    case RuleName::MonTensor: {
      const Arrow& q = premises[1];
      return Arrow{Formula::tensor(p.source, q.source), Formula::tensor(p.target, q.target)};
    }
    case RuleName::MonOver: {
      const Arrow& q = premises[1];
      return Arrow{Formula::over(p.source, q.target), Formula::over(p.target, q.source)};
    }
    case RuleName::MonUnder: {
      const Arrow& q = premises[1];
      return Arrow{Formula::under(p.target, q.source), Formula::under(p.source, q.target)};
    }
    case RuleName::AlphaL: {
      // (◇A⊗B)⊗C
      const Formula& s = p.source;
      if (!s.is(C::Tensor) || !s.left().is(C::Tensor) || !s.left().left().is(C::Diamond))
        return std::nullopt;
      return Arrow{Formula::tensor(s.left().left(), Formula::tensor(s.left().right(), s.right())),
                   p.target};
    }
    case RuleName::SigmaL: {
      // B⊗(◇A⊗C)
      const Formula& s = p.source;
      if (!s.is(C::Tensor) || !s.right().is(C::Tensor) || !s.right().left().is(C::Diamond))
        return std::nullopt;
      return Arrow{Formula::tensor(s.right().left(), Formula::tensor(s.left(), s.right().right())),
                   p.target};
    }
    case RuleName::AlphaR: {
      // A⊗(B⊗◇C)
      const Formula& s = p.source;
      if (!s.is(C::Tensor) || !s.right().is(C::Tensor) || !s.right().right().is(C::Diamond))
        return std::nullopt;
      return Arrow{Formula::tensor(Formula::tensor(s.left(), s.right().left()), s.right().right()),
                   p.target};
    }
    case RuleName::SigmaR: {
      // (A⊗◇C)⊗B
      const Formula& s = p.source;
      if (!s.is(C::Tensor) || !s.left().is(C::Tensor) || !s.left().right().is(C::Diamond))
        return std::nullopt;
      return Arrow{Formula::tensor(Formula::tensor(s.left().left(), s.right()), s.left().right()),
                   p.target};
    }
    case RuleName::Axiom:
      break;
  }
  return std::nullopt;
}

bool check_proof(const Proof& p) {
  if (p.premises().size() != rule_arity(p.rule())) return false;
  if (p.rule() == RuleName::Axiom) {
    const Arrow& c = p.conclusion();
    return c.source.is_atom() && c.source == c.target;
  }
  std::vector<Arrow> premises;
  for (const auto& q : p.premises()) {
    if (!check_proof(q)) return false;
    premises.push_back(q.conclusion());
  }
  auto expected = conclude(p.rule(), premises);
  return expected && *expected == p.conclusion();
}

namespace {

void serialize_into(const Proof& p, std::string& out) {
  out += '(';
  out += rule_name(p.rule());
  out += ' ';
  out += print_arrow(p.conclusion());
  for (const auto& q : p.premises()) {
    out += ' ';
    serialize_into(q, out);
  }
  out += ')';
}

void pretty_into(const Proof& p, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += rule_name(p.rule());
  out += "  ";
  out += print_arrow(p.conclusion());
  out += '\n';
  for (const auto& q : p.premises()) pretty_into(q, depth + 1, out);
}

class ProofReader {
 public:
  explicit ProofReader(std::string_view text) : text_(text) {}

  Proof read_all() {
    Proof p = read();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Formula tokens carry no whitespace; a ')' closes the token when it is
  // not balanced by a '(' inside it.
  std::string_view formula_token() {
    skip_space();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    if (start == pos_) fail("expected a formula");
    return text_.substr(start, pos_ - start);
  }

  Proof read() {
    expect('(');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto rule = rule_from_name(text_.substr(start, pos_ - start));
    if (!rule) fail("unknown rule name");
    Formula source = parse_formula(formula_token());
    skip_space();
    if (text_.substr(pos_, 3) != "-->") fail("expected '-->'");
    pos_ += 3;
    Formula target = parse_formula(formula_token());
    std::vector<Proof> premises;
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        premises.push_back(read());
        continue;
      }
      break;
    }
    expect(')');
    return Proof(*rule, Arrow{source, target}, std::move(premises));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_proof(const Proof& p) {
  std::string out;
  serialize_into(p, out);
  return out;
}

std::string pretty_proof(const Proof& p) {
  std::string out;
  pretty_into(p, 0, out);
  return out;
}

Proof parse_proof(std::string_view text) { return ProofReader(text).read_all(); }

}  // namespace lambek
