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

#include "lambek/einstein.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "lambek/errors.hpp"

namespace lambek {

std::vector<std::string> index_letters(std::size_t n) {
  static const std::string kAlphabet = "ijklmnopqrstuvwxyzabcdefgh";
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::string s(1, kAlphabet[k % kAlphabet.size()]);
    if (k >= kAlphabet.size()) s += std::to_string(k / kAlphabet.size() + 1);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::string index_group(const std::vector<std::string>& letters, EinsteinStyle style) {
  if (letters.empty()) return "";
  bool single = true;
  for (const auto& l : letters) single = single && l.size() == 1;
  std::string joined;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k && (style == EinsteinStyle::Ascii || !single)) joined += ',';
    joined += letters[k];
  }
  if (style == EinsteinStyle::Ascii) return "[" + joined + "]";
  if (letters.size() == 1 && single) return "_" + joined;
  return "_{" + joined + "}";
}

std::string loop_suffix(const Delta& d, EinsteinStyle style) {
  std::string out;
  for (const auto& l : d.loops())
    out += (style == EinsteinStyle::Ascii ? " * tr(" : " · tr(") + l.label + ")";
  return out;
}

std::vector<std::string> split_labels(std::string_view text) {
  std::vector<std::string> out;
  if (text.find(',') != std::string_view::npos) {
    std::string cur;
    for (char c : text) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    out.push_back(cur);
  } else {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) out.emplace_back(1, c);
  }
  return out;
}

}  // namespace

std::string print_einstein(const Delta& d, const std::vector<TensorName>& inputs,
                           std::string_view output, EinsteinStyle style) {
  std::size_t total = 0;
  for (const auto& t : inputs) total += t.rank;
  if (total != d.domain().size())
    throw ShapeError("input ranks add up to " + std::to_string(total) + ", delta has " +
                     std::to_string(d.domain().size()) + " domain slots");

  std::map<int, int> partner;
  for (const auto& p : d.pairs()) {
    partner[p.upper.id] = p.lower.id;
    partner[p.lower.id] = p.upper.id;
  }
  std::map<int, std::string> letter;
  std::size_t next = 0;
  auto letters = index_letters(d.pairs().size());
  auto letter_of = [&](int id) {
    auto it = letter.find(id);
    if (it != letter.end()) return it->second;
    letter[id] = letter[partner.at(id)] = letters[next++];
    return letter[id];
  };

  std::vector<std::string> parts;
  std::size_t slot = 0;
  for (const auto& t : inputs) {
    std::vector<std::string> group;
    for (std::size_t k = 0; k < t.rank; ++k) group.push_back(letter_of(d.domain()[slot++].id));
    parts.push_back(t.name + index_group(group, style));
  }
  std::vector<std::string> out_group;
  for (const auto& v : d.codomain()) out_group.push_back(letter_of(v.id));

  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) os << (style == EinsteinStyle::Ascii ? " " : " ⊗ ");
    os << parts[k];
  }
  os << loop_suffix(d, style);
  os << (style == EinsteinStyle::Ascii ? " -> " : " → ") << output << index_group(out_group, style);
  return os.str();
}

std::string print_delta(const Delta& d, EinsteinStyle style) {
  std::map<int, std::string> letter;
  auto letters = index_letters(d.domain().size() + d.codomain().size());
  std::size_t next = 0;
  for (const auto& v : d.domain()) letter[v.id] = letters[next++];
  for (const auto& v : d.codomain()) letter[v.id] = letters[next++];

  std::vector<std::string> up, low;
  for (const auto& p : d.pairs()) {
    up.push_back(letter.at(p.upper.id));
    low.push_back(letter.at(p.lower.id));
  }
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + xs[k];
    return s;
  };
  auto space_list = [&](const std::vector<IndexVar>& slots) {
    if (slots.empty()) return std::string("I");
    std::string s;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (k) s += style == EinsteinStyle::Ascii ? " * " : " ⊗ ";
      s += slots[k].space.label + (style == EinsteinStyle::Ascii ? "[" + letter.at(slots[k].id) + "]"
                                                                 : "_" + letter.at(slots[k].id));
    }
    return s;
  };
  std::ostringstream os;
  if (style == EinsteinStyle::Ascii)
    os << "delta^{" << join(up) << "}_{" << join(low) << "}";
  else
    os << "δ^{" << join(up) << "}_{" << join(low) << "}";
  os << loop_suffix(d, style);
  os << " : " << space_list(d.domain()) << (style == EinsteinStyle::Ascii ? " -> " : " → ")
     << space_list(d.codomain());
  return os.str();
}

namespace {

struct ParsedTensor {
  std::string name;
  std::vector<std::string> indices;
};

class EinsteinReader {
 public:
  explicit EinsteinReader(std::string_view text) : text_(text) {}

  void read(std::vector<ParsedTensor>& inputs, std::vector<ParsedTensor>& outputs, bool& arrow) {
    arrow = false;
    for (;;) {
      skip_separators();
      if (pos_ >= text_.size()) break;
      if (accept("->") || accept("→")) {
        if (arrow) fail("second arrow");
        arrow = true;
        continue;
      }
      (arrow ? outputs : inputs).push_back(tensor());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_separators() {
    for (;;) {
      if (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (accept("⊗") || accept("·") || accept("*")) {
      } else {
        return;
      }
    }
  }

  ParsedTensor tensor() {
    ParsedTensor t;
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-') &&
           text_.substr(pos_, 2) != "->")
      ++pos_;
    if (start == pos_) fail("expected a tensor name");
    t.name = std::string(text_.substr(start, pos_ - start));
    if (accept("_{")) {
      t.indices = split_labels(until('}'));
    } else if (accept("_")) {
      if (pos_ >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("expected an index");
      t.indices.emplace_back(1, text_[pos_++]);
    } else if (accept("[")) {
      t.indices = split_labels(until(']'));
    }
    return t;
  }

  std::string_view until(char close) {
    std::size_t end = text_.find(close, pos_);
    if (end == std::string_view::npos) fail(std::string("missing '") + close + "'");
    auto inner = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return inner;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Delta link_slots(const std::vector<std::string>& dom_labels, const std::vector<std::string>& cod_labels,
                 const SpaceSignature& domain, const SpaceSignature& codomain) {
  if (dom_labels.size() != domain.size() || cod_labels.size() != codomain.size())
    throw ShapeError("index count does not match the signature: " +
                     std::to_string(dom_labels.size()) + "/" + std::to_string(domain.size()) +
                     " domain, " + std::to_string(cod_labels.size()) + "/" +
                     std::to_string(codomain.size()) + " codomain");
  std::vector<IndexVar> dom, cod;
  std::map<std::string, std::vector<IndexVar>> by_letter;
  std::vector<std::string> order;
  int id = 0;
  auto place = [&](const std::string& l, const BaseSpace& space, std::vector<IndexVar>& slots) {
    IndexVar v{id++, space};
    slots.push_back(v);
    auto& group = by_letter[l];
    if (group.empty()) order.push_back(l);
    group.push_back(v);
  };
  for (std::size_t k = 0; k < dom_labels.size(); ++k) place(dom_labels[k], domain.spaces[k], dom);
  for (std::size_t k = 0; k < cod_labels.size(); ++k) place(cod_labels[k], codomain.spaces[k], cod);
  std::vector<IndexPair> pairs;
  for (const auto& l : order) {
    const auto& group = by_letter[l];
    if (group.size() != 2)
      throw ShapeError("index '" + l + "' occurs " + std::to_string(group.size()) +
                       " times, expected twice");
    pairs.push_back({group[0], group[1]});
  }
  return Delta(std::move(pairs), std::move(dom), std::move(cod));
}

}  // namespace

Delta parse_einstein(std::string_view text, const SpaceSignature& domain,
                     const SpaceSignature& codomain) {
  std::vector<ParsedTensor> inputs, outputs;
  bool arrow = false;
  EinsteinReader(text).read(inputs, outputs, arrow);
  std::vector<std::string> dom_labels, cod_labels;
  for (const auto& t : inputs) dom_labels.insert(dom_labels.end(), t.indices.begin(), t.indices.end());
  if (arrow) {
    if (outputs.size() > 1) throw ParseError("more than one output tensor", text.size());
    if (!outputs.empty()) cod_labels = outputs[0].indices;
  } else {
    std::map<std::string, int> count;
    for (const auto& l : dom_labels) ++count[l];
    for (const auto& l : dom_labels)
      if (count[l] == 1) cod_labels.push_back(l);
  }
  return link_slots(dom_labels, cod_labels, domain, codomain);
}

Delta delta_from_labels(std::string_view uppers, std::string_view lowers,
                        std::string_view domain_labels, std::string_view codomain_labels,
                        const SpaceSignature& domain, const SpaceSignature& codomain) {
  auto up = split_labels(uppers);
  auto low = split_labels(lowers);
  auto dom = split_labels(domain_labels);
  auto cod = split_labels(codomain_labels);
  if (up.size() != low.size()) throw ShapeError("upper and lower index lists differ in length");
  if (dom.size() != domain.size() || cod.size() != codomain.size())
    throw ShapeError("slot labels do not match the signatures");
  std::map<std::string, IndexVar> slot;
  int id = 0;
  std::vector<IndexVar> dv, cv;
  for (std::size_t k = 0; k < dom.size(); ++k) {
    IndexVar v{id++, domain.spaces[k]};
    if (!slot.emplace(dom[k], v).second) throw ShapeError("slot label '" + dom[k] + "' repeated");
    dv.push_back(v);
  }
  for (std::size_t k = 0; k < cod.size(); ++k) {
    IndexVar v{id++, codomain.spaces[k]};
    if (!slot.emplace(cod[k], v).second) throw ShapeError("slot label '" + cod[k] + "' repeated");
    cv.push_back(v);
  }
  std::vector<IndexPair> pairs;
  for (std::size_t k = 0; k < up.size(); ++k) {
    auto u = slot.find(up[k]);
    auto l = slot.find(low[k]);
    if (u == slot.end() || l == slot.end()) throw ShapeError("pair refers to an unknown slot label");
    pairs.push_back({u->second, l->second});
  }
  return Delta(std::move(pairs), std::move(dv), std::move(cv));
}

}  // namespace lambek
