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

#include "lambek/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lambek/errors.hpp"

namespace lambek {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

DenseTensor seeded_uniform(const std::vector<std::size_t>& shape, std::uint64_t seed) {
  DenseTensor t(shape);
  std::uint64_t state = seed;
  for (std::size_t k = 0; k < t.size(); ++k)
    t[k] = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
  return t;
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (static_cast<unsigned char>(c) < 0x80 && !std::isalnum(static_cast<unsigned char>(c)) &&
        c != '_' && c != '-' && c != '\'')
      return false;
  return true;
}

std::uint64_t parse_u64(std::string_view s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  return v;
}

std::vector<double> parse_values(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("values must be a bracketed list", line);
  s = trim(s.substr(1, s.size() - 2));
  std::vector<double> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto comma = s.find(',', start);
    std::string item(trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (item.empty() || used != item.size())
      throw ParseError("bad number '" + item + "'", line);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

TensorSource parse_source(std::string_view text, std::size_t line) {
  text = trim(text);
  auto sp = text.find_first_of(" \t");
  std::string_view kind = text.substr(0, sp);
  std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(text.substr(sp));
  if (kind == "seed") return SeededRandom{parse_u64(rest, line, "seed")};
  if (kind == "values") return ExplicitValues{parse_values(rest, line)};
  if (kind == "ones") {
    if (!rest.empty()) throw ParseError("'ones' takes no argument", line);
    return AllOnes{};
  }
  if (kind == "recipe") {
    if (rest != "relpron") throw ParseError("unknown recipe '" + std::string(rest) + "'", line);
    return Recipe{std::string(rest)};
  }
  throw ParseError("unknown tensor source '" + std::string(kind) + "'", line);
}

std::string shape_text(const std::vector<std::size_t>& dims) {
  std::string s = "[";
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
  return s + "]";
}

DenseTensor realize(const LexiconEntry& e, const AtomMap& atom_map) {
  SpaceSignature sig = interpret_type(e.formula, atom_map);
  std::vector<std::size_t> shape = sig.dims();
  auto where = [&] { return "word '" + e.word + "' (line " + std::to_string(e.line) + ")"; };
  return std::visit(
      [&](const auto& src) -> DenseTensor {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ExplicitValues>) {
          if (src.data.size() != sig.total_dim())
            throw ShapeError(where() + ": type needs shape " + shape_text(shape) + " (" +
                             std::to_string(sig.total_dim()) + " values), got " +
                             std::to_string(src.data.size()));
          return DenseTensor(shape, src.data);
        } else if constexpr (std::is_same_v<T, SeededRandom>) {
          return seeded_uniform(shape, src.seed);
        } else if constexpr (std::is_same_v<T, AllOnes>) {
          return DenseTensor(shape, std::vector<double>(sig.total_dim(), 1.0));
        } else {
          const auto& s = sig.spaces;
          if (s.size() != 4 || s[0] != s[1] || s[1] != s[2])
            throw ShapeError(where() + ": relpron needs a type over X⊗X⊗X⊗Y, got " +
                             sig.to_string());
          return relpron_tensor(s[0].dim, s[3].dim);
        }
      },
      e.source);
}

}  // namespace

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::vector<std::size_t> atom_lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    auto hash = raw.find('#');
    std::string_view line = trim(raw.substr(0, hash));
    if (line.empty()) continue;

    auto sp = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

    if (keyword == "space") {
      auto parts = split_ws(rest);
      if (parts.size() != 2 || !valid_name(parts[0]))
        throw ParseError("expected 'space <name> <dim>'", line_no);
      std::size_t dim = parse_u64(parts[1], line_no, "dimension");
      if (dim == 0) throw ParseError("space dimension must be positive", line_no);
      for (const auto& s : lex.spaces_)
        if (s.label == parts[0]) throw ParseError("space '" + parts[0] + "' declared twice", line_no);
      lex.spaces_.push_back({parts[0], dim});
    } else if (keyword == "atom") {
      auto parts = split_ws(rest);
      if (parts.size() != 2 || !valid_name(parts[0]))
        throw ParseError("expected 'atom <name> <space>'", line_no);
      for (const auto& [a, s] : lex.atom_decls_)
        if (a == parts[0]) throw ParseError("atom '" + parts[0] + "' declared twice", line_no);
      lex.atom_decls_.emplace_back(parts[0], parts[1]);
      atom_lines.push_back(line_no);
    } else if (keyword == "word") {
      auto colon = rest.find(':');
      auto eq = rest.find('=');
      if (colon == std::string_view::npos || eq == std::string_view::npos || eq < colon)
        throw ParseError("expected 'word <name> : <formula> = <source>'", line_no);
      std::string word(trim(rest.substr(0, colon)));
      if (!valid_name(word)) throw ParseError("bad word '" + word + "'", line_no);
      std::string_view ftext = trim(rest.substr(colon + 1, eq - colon - 1));
      Formula f = [&] {
        try {
          return parse_formula(ftext);
        } catch (const ParseError& e) {
          throw ParseError("in type of '" + word + "': " + e.what(), line_no);
        }
      }();
      lex.entries_.push_back({word, f, parse_source(rest.substr(eq + 1), line_no), {}, line_no});
    } else {
      throw ParseError("unknown directive '" + std::string(keyword) + "'", line_no);
    }
  }

  for (std::size_t k = 0; k < lex.atom_decls_.size(); ++k) {
    const auto& space = lex.atom_decls_[k].second;
    bool known = false;
    for (const auto& s : lex.spaces_) known = known || s.label == space;
    if (!known) throw ParseError("atom mapped to undeclared space '" + space + "'", atom_lines[k]);
  }
  for (const auto& e : lex.entries_)
    for (const auto& a : atoms_of(e.formula))
      if (std::none_of(lex.atom_decls_.begin(), lex.atom_decls_.end(),
                       [&](const auto& d) { return d.first == a; }))
        throw UnknownAtomError("word '" + e.word + "' (line " + std::to_string(e.line) +
                               ") uses undeclared atom '" + a + "'");
  lex.build();
  return lex;
}

void Lexicon::build() {
  atom_map_.clear();
  for (const auto& [atom, label] : atom_decls_)
    for (const auto& s : spaces_)
      if (s.label == label) atom_map_[atom] = s;
  index_.clear();
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k].tensor = realize(entries_[k], atom_map_);
    index_[entries_[k].word].push_back(k);
  }
}

std::vector<std::string> Lexicon::words() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (std::find(out.begin(), out.end(), e.word) == out.end()) out.push_back(e.word);
  return out;
}

std::vector<LexiconEntry> Lexicon::entries(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) throw UnknownWordError("unknown word '" + word + "'");
  std::vector<LexiconEntry> out;
  for (std::size_t k : it->second) out.push_back(entries_[k]);
  return out;
}

Lexicon Lexicon::with_dims(const std::map<std::string, std::size_t>& dims) const {
  Lexicon out = *this;
  for (const auto& [label, dim] : dims) {
    auto it = std::find_if(out.spaces_.begin(), out.spaces_.end(),
                           [&](const BaseSpace& s) { return s.label == label; });
    if (it == out.spaces_.end()) throw ShapeError("no space named '" + label + "'");
    if (dim == 0) throw ShapeError("space dimension must be positive");
    it->dim = dim;
  }
  out.build();
  return out;
}

Lexicon Lexicon::with_seed_offset(std::uint64_t offset) const {
  Lexicon out = *this;
  for (auto& e : out.entries_)
    if (auto* s = std::get_if<SeededRandom>(&e.source)) s->seed += offset;
  out.build();
  return out;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read lexicon file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Lexicon::parse(buf.str());
}

std::vector<std::pair<Formula, DenseTensor>> resolve(const Lexicon& lexicon,
                                                     const std::string& word) {
  std::vector<std::pair<Formula, DenseTensor>> out;
  for (const auto& e : lexicon.entries(word)) out.emplace_back(e.formula, e.tensor);
  return out;
}

}  // namespace lambek
