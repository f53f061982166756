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

#include "lambek/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "lambek/categorical.hpp"
#include "lambek/einstein.hpp"
#include "lambek/errors.hpp"

namespace lambek {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Bracketing

Bracketing Bracketing::parse(std::string_view text) {
  if (text == "right") return {Kind::Right, {}};
  if (text == "all") return {Kind::All, {}};
  constexpr std::string_view prefix = "explicit:";
  if (text.substr(0, prefix.size()) == prefix)
    return {Kind::Explicit, std::string(text.substr(prefix.size()))};
  throw Error("unknown bracketing '" + std::string(text) + "' (right, all or explicit:<spec>)");
}

namespace {

Formula right_branching(const std::vector<Formula>& types, std::size_t from) {
  if (from + 1 == types.size()) return types[from];
  return Formula::tensor(types[from], right_branching(types, from + 1));
}

std::vector<Formula> all_trees(const std::vector<Formula>& types, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {types[lo]};
  std::vector<Formula> out;
  for (std::size_t mid = lo + 1; mid < hi; ++mid)
    for (const auto& l : all_trees(types, lo, mid))
      for (const auto& r : all_trees(types, mid, hi)) out.push_back(Formula::tensor(l, r));
  return out;
}

class SpecReader {
 public:
  SpecReader(std::string_view spec, const std::vector<Formula>& types,
             const std::vector<std::string>& words)
      : spec_(spec), types_(types), words_(words) {}

  Formula read() {
    Formula f = node();
    skip();
    if (pos_ != spec_.size()) fail("trailing input");
    if (next_word_ != words_.size()) fail("spec covers only " + std::to_string(next_word_) + " of " +
                                          std::to_string(words_.size()) + " words");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bracketing spec: " + why, pos_);
  }

  void skip() {
    while (pos_ < spec_.size() && (spec_[pos_] == ' ' || spec_[pos_] == '\t')) ++pos_;
  }

  Formula node() {
    skip();
    if (pos_ >= spec_.size()) fail("unexpected end");
    if (spec_[pos_] == '(') {
      ++pos_;
      std::vector<Formula> parts;
      for (;;) {
        skip();
        if (pos_ >= spec_.size()) fail("missing ')'");
        if (spec_[pos_] == ')') break;
        parts.push_back(node());
      }
      ++pos_;
      if (parts.size() != 2) fail("each group must have exactly two members");
      return Formula::tensor(parts[0], parts[1]);
    }
    std::size_t start = pos_;
    while (pos_ < spec_.size() && spec_[pos_] != ' ' && spec_[pos_] != '\t' && spec_[pos_] != '(' &&
           spec_[pos_] != ')')
      ++pos_;
    std::string word(spec_.substr(start, pos_ - start));
    if (next_word_ >= words_.size() || words_[next_word_] != word)
      fail("expected word '" + (next_word_ < words_.size() ? words_[next_word_] : "") +
           "', got '" + word + "'");
    return types_[next_word_++];
  }

  std::string_view spec_;
  const std::vector<Formula>& types_;
  const std::vector<std::string>& words_;
  std::size_t pos_ = 0;
  std::size_t next_word_ = 0;
};

}  // namespace

std::vector<Formula> bracketings(const std::vector<Formula>& types,
                                 const std::vector<std::string>& words, const Bracketing& b) {
  if (types.empty()) throw Error("no words given");
  switch (b.kind) {
    case Bracketing::Kind::Right:
      return {right_branching(types, 0)};
    case Bracketing::Kind::All:
      return all_trees(types, 0, types.size());
    case Bracketing::Kind::Explicit:
      return {SpecReader(b.spec, types, words).read()};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Sequents

namespace {

struct Sequent {
  Arrow goal;
  std::vector<std::size_t> senses;
  std::vector<DenseTensor> tensors;
};

Formula goal_formula(const Lexicon& lexicon, const std::string& goal_atom) {
  Formula g = parse_formula(goal_atom);
  for (const auto& a : atoms_of(g))
    if (!lexicon.atom_map().count(a)) throw UnknownAtomError("goal uses undeclared atom '" + a + "'");
  return g;
}

std::vector<Sequent> sequents(const Lexicon& lexicon, const std::vector<std::string>& words,
                              const std::string& goal_atom, const Bracketing& bracketing) {
  if (words.empty()) throw Error("no words given");
  Formula target = goal_formula(lexicon, goal_atom);
  std::vector<std::vector<LexiconEntry>> senses;
  for (const auto& w : words) senses.push_back(lexicon.entries(w));

  std::vector<Sequent> out;
  std::vector<std::size_t> choice(words.size(), 0);
  for (;;) {
    std::vector<Formula> types;
    std::vector<DenseTensor> tensors;
    for (std::size_t k = 0; k < words.size(); ++k) {
      types.push_back(senses[k][choice[k]].formula);
      tensors.push_back(senses[k][choice[k]].tensor);
    }
    for (const auto& source : bracketings(types, words, bracketing))
      out.push_back({Arrow{source, target}, choice, tensors});
    std::size_t k = words.size();
    while (k > 0 && ++choice[k - 1] == senses[k - 1].size()) choice[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<TensorName> tensor_names(const std::vector<std::string>& words,
                                     const std::vector<DenseTensor>& tensors) {
  std::vector<TensorName> out;
  for (std::size_t k = 0; k < words.size(); ++k) out.push_back({words[k], tensors[k].rank()});
  return out;
}

std::string no_proof_message(const std::vector<std::string>& words, const std::string& goal_atom,
                             bool bound_hit) {
  std::string joined;
  for (const auto& w : words) joined += (joined.empty() ? "" : " ") + w;
  return "no derivation of '" + joined + "' as " + goal_atom +
         (bound_hit ? " within the search bound" : "");
}

}  // namespace

RunReport cmd_derive(const Lexicon& lexicon, const std::vector<std::string>& words,
                     const std::string& goal_atom, const PipelineOptions& options) {
  auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.words = words;
  report.goal_atom = goal_atom;
  for (const auto& s : sequents(lexicon, words, goal_atom, options.bracketing)) {
    report.goals.push_back(s.goal);
    SearchResult found = derive(s.goal, options.search);
    report.bound_hit = report.bound_hit || found.bound_hit;
    report.proofs_found += found.proofs.size();
    auto names = tensor_names(words, s.tensors);
    for (auto& r : distinct_readings(found.proofs, lexicon.atom_map())) {
      std::string printed = print_einstein(r.delta, names, "v");
      DenseTensor value = contract(r.delta, s.tensors);
      report.readings.push_back(
          {s.goal, s.senses, r.delta, r.proof, r.proof_count, std::move(printed), std::move(value)});
    }
  }
  if (report.readings.empty())
    throw UnderivableError(no_proof_message(words, goal_atom, report.bound_hit));
  report.seconds = seconds_since(start);
  return report;
}

namespace {

/// Swaps two same-space slots that are not linked to each other, which
/// changes the matching. Adds a closed loop when no such pair exists.
Delta mislabel(const Delta& d) {
  auto linked = [&](const IndexVar& a, const IndexVar& b) {
    for (const auto& p : d.pairs())
      if ((p.upper.id == a.id && p.lower.id == b.id) || (p.upper.id == b.id && p.lower.id == a.id))
        return true;
    return false;
  };
  auto try_swap = [&](std::vector<IndexVar> slots) -> std::optional<std::vector<IndexVar>> {
    for (std::size_t p = 0; p < slots.size(); ++p)
      for (std::size_t q = p + 1; q < slots.size(); ++q)
        if (slots[p].space == slots[q].space && !linked(slots[p], slots[q])) {
          std::swap(slots[p], slots[q]);
          return slots;
        }
    return std::nullopt;
  };
  if (auto dom = try_swap(d.domain())) return d.with_slots(*dom, d.codomain());
  if (auto cod = try_swap(d.codomain())) return d.with_slots(d.domain(), *cod);
  std::vector<BaseSpace> loops = d.loops();
  const auto& slots = d.domain().empty() ? d.codomain() : d.domain();
  loops.push_back(slots.empty() ? BaseSpace{"I", 2} : BaseSpace{slots.front().space.label, 2});
  return Delta(d.pairs(), d.domain(), d.codomain(), loops);
}

DenseTensor flat(const DenseTensor& t) { return t.reshaped({t.size()}); }

}  // namespace

EquivalenceReport cmd_check_equivalence(const Lexicon& lexicon,
                                        const std::vector<std::string>& words,
                                        const std::string& goal_atom,
                                        const PipelineOptions& options,
                                        const EquivalenceOptions& check) {
  auto start = std::chrono::steady_clock::now();
  EquivalenceReport report;
  report.tolerance = check.tolerance;
  for (const auto& s : sequents(lexicon, words, goal_atom, options.bracketing)) {
    SearchResult found = derive(s.goal, options.search);
    report.bound_hit = report.bound_hit || found.bound_hit;
    DenseTensor input = s.tensors.front();
    for (std::size_t k = 1; k < s.tensors.size(); ++k) input = outer(input, s.tensors[k]);
    for (const auto& p : found.proofs) {
      Delta d = delta_of_proof(p, lexicon.atom_map());
      if (check.corrupt) d = mislabel(d);
      LinearMapMatrix m = categorical_eval(p, lexicon.atom_map(), check.cap);
      EquivalenceCheck c{s.goal, s.senses, serialize_proof(p), 0.0, std::nullopt};
      c.lexicon_deviation =
          max_abs_diff(m.apply(flat(input)), flat(contract(d, s.tensors)));
      report.max_deviation = std::max(report.max_deviation, c.lexicon_deviation);
      if (check.basis) {
        c.basis_deviation = max_abs_diff(m.matrix(), delta_matrix(d));
        report.max_deviation = std::max(report.max_deviation, *c.basis_deviation);
      }
      report.checks.push_back(std::move(c));
    }
  }
  if (report.checks.empty())
    throw UnderivableError(no_proof_message(words, goal_atom, report.bound_hit));
  report.passed = report.max_deviation <= check.tolerance;
  report.seconds = seconds_since(start);
  return report;
}

CompareReport cmd_compare(const Lexicon& lexicon, const std::vector<std::string>& words,
                          const std::string& goal_atom, const PipelineOptions& options) {
  CompareReport out{cmd_derive(lexicon, words, goal_atom, options), {}};
  const auto& rs = out.run.readings;
  if (rs.size() < 2)
    throw Error("compare needs at least two readings, found " + std::to_string(rs.size()));
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (rs[i].value.shape() != rs[j].value.shape())
        throw ShapeError("readings " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                         " have different shapes");
      out.similarities.push_back({i, j, cosine(rs[i].value, rs[j].value)});
    }
  return out;
}

// ---------------------------------------------------------------------------
// Output

namespace {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string values_text(const DenseTensor& t) {
  std::string s = "shape [";
  for (std::size_t k = 0; k < t.rank(); ++k) s += (k ? "," : "") + std::to_string(t.shape()[k]);
  s += "] [";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? ", " : "") + number(t[k]);
  return s + "]";
}

std::string senses_text(const std::vector<std::size_t>& senses) {
  std::string s;
  for (std::size_t k = 0; k < senses.size(); ++k) s += (k ? "," : "") + std::to_string(senses[k] + 1);
  return s;
}

bool has_homonyms(const std::vector<std::size_t>& senses) {
  return std::any_of(senses.begin(), senses.end(), [](std::size_t s) { return s > 0; });
}

json tensor_json(const DenseTensor& t) { return {{"shape", t.shape()}, {"data", t.data()}}; }

json var_json(const IndexVar& v) {
  return {{"id", v.id}, {"space", v.space.label}, {"dim", v.space.dim}};
}

IndexVar var_from(const json& j) {
  return {j.at("id").get<int>(), {j.at("space").get<std::string>(), j.at("dim").get<std::size_t>()}};
}

json delta_json(const Delta& d) {
  json pairs = json::array(), dom = json::array(), cod = json::array(), loops = json::array();
  for (const auto& p : d.pairs()) pairs.push_back({{"upper", var_json(p.upper)}, {"lower", var_json(p.lower)}});
  for (const auto& v : d.domain()) dom.push_back(var_json(v));
  for (const auto& v : d.codomain()) cod.push_back(var_json(v));
  for (const auto& l : d.loops()) loops.push_back({{"space", l.label}, {"dim", l.dim}});
  return {{"pairs", pairs}, {"domain", dom}, {"codomain", cod}, {"loops", loops},
          {"printed", print_delta(d)}};
}

json run_json(const RunReport& r) {
  json goals = json::array(), readings = json::array();
  for (const auto& g : r.goals) goals.push_back(print_arrow(g));
  for (const auto& rd : r.readings)
    readings.push_back({{"goal", print_arrow(rd.goal)},
                        {"senses", rd.senses},
                        {"einstein", rd.einstein},
                        {"delta", delta_json(rd.delta)},
                        {"proof", serialize_proof(rd.proof)},
                        {"proof_count", rd.proof_count},
                        {"value", tensor_json(rd.value)}});
  return {{"words", r.words},     {"goal", r.goal_atom},       {"sequents", goals},
          {"proofs", r.proofs_found}, {"bound_hit", r.bound_hit}, {"readings", readings},
          {"seconds", r.seconds}};
}

}  // namespace

std::string format_text(const RunReport& r) {
  std::ostringstream out;
  for (const auto& g : r.goals) out << "sequent: " << print_arrow(g) << "\n";
  out << "proofs: " << r.proofs_found << (r.bound_hit ? " (search bound hit)" : "") << "\n";
  out << "readings: " << r.readings.size() << "\n";
  for (std::size_t k = 0; k < r.readings.size(); ++k) {
    const auto& rd = r.readings[k];
    out << "\nreading " << k + 1 << " (" << rd.proof_count << (rd.proof_count == 1 ? " proof" : " proofs")
        << ")\n";
    if (r.goals.size() > 1) out << "  sequent: " << print_arrow(rd.goal) << "\n";
    if (has_homonyms(rd.senses)) out << "  senses: " << senses_text(rd.senses) << "\n";
    out << "  " << rd.einstein << "\n";
    out << "  " << print_delta(rd.delta) << "\n";
    out << "  value " << values_text(rd.value) << "\n";
  }
  out << "\ntime: " << number(r.seconds * 1e3) << " ms\n";
  return out.str();
}

std::string format_text(const EquivalenceReport& r) {
  std::ostringstream out;
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    const auto& c = r.checks[k];
    out << "proof " << k + 1 << ": " << print_arrow(c.goal) << "\n";
    if (has_homonyms(c.senses)) out << "  senses: " << senses_text(c.senses) << "\n";
    out << "  lexicon deviation " << number(c.lexicon_deviation) << "\n";
    if (c.basis_deviation) out << "  basis deviation " << number(*c.basis_deviation) << "\n";
  }
  out << "max deviation " << number(r.max_deviation) << " (tolerance " << number(r.tolerance)
      << ")" << (r.bound_hit ? ", search bound hit" : "") << "\n";
  out << (r.passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string format_text(const CompareReport& r) {
  std::ostringstream out;
  for (std::size_t k = 0; k < r.run.readings.size(); ++k)
    out << "reading " << k + 1 << ": " << r.run.readings[k].einstein << "\n";
  for (const auto& s : r.similarities)
    out << "cos(" << s.first + 1 << ", " << s.second + 1 << ") = " << number(s.cosine) << "\n";
  return out.str();
}

std::string format_json(const RunReport& r) { return run_json(r).dump(2) + "\n"; }

std::string format_json(const EquivalenceReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"goal", print_arrow(c.goal)},
              {"senses", c.senses},
              {"proof", c.proof},
              {"lexicon_deviation", c.lexicon_deviation}};
    j["basis_deviation"] = c.basis_deviation ? json(*c.basis_deviation) : json(nullptr);
    checks.push_back(j);
  }
  json doc = {{"checks", checks},       {"max_deviation", r.max_deviation},
              {"tolerance", r.tolerance}, {"passed", r.passed},
              {"bound_hit", r.bound_hit}, {"seconds", r.seconds}};
  return doc.dump(2) + "\n";
}

std::string format_json(const CompareReport& r) {
  json sims = json::array();
  for (const auto& s : r.similarities)
    sims.push_back({{"first", s.first + 1}, {"second", s.second + 1}, {"cosine", s.cosine}});
  json doc = {{"run", run_json(r.run)}, {"similarities", sims}};
  return doc.dump(2) + "\n";
}

std::string delta_to_json(const Delta& d) { return delta_json(d).dump(); }

Delta delta_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    std::vector<IndexPair> pairs;
    std::vector<IndexVar> dom, cod;
    std::vector<BaseSpace> loops;
    for (const auto& p : j.at("pairs")) pairs.push_back({var_from(p.at("upper")), var_from(p.at("lower"))});
    for (const auto& v : j.at("domain")) dom.push_back(var_from(v));
    for (const auto& v : j.at("codomain")) cod.push_back(var_from(v));
    if (j.contains("loops"))
      for (const auto& l : j.at("loops"))
        loops.push_back({l.at("space").get<std::string>(), l.at("dim").get<std::size_t>()});
    return Delta(std::move(pairs), std::move(dom), std::move(cod), std::move(loops));
  } catch (const json::exception& e) {
    throw ParseError(std::string("delta json: ") + e.what(), 0);
  }
}

}  // namespace lambek
