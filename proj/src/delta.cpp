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

#include "lambek/delta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "lambek/errors.hpp"

namespace lambek {

namespace {

bool same_space(const BaseSpace& a, const BaseSpace& b) { return a.label == b.label && a.dim == b.dim; }

std::string describe(const IndexVar& v) {
  return "#" + std::to_string(v.id) + ":" + v.space.label;
}

bool loop_less(const BaseSpace& a, const BaseSpace& b) {
  return std::tie(a.label, a.dim) < std::tie(b.label, b.dim);
}

SpaceSignature signature_of(const std::vector<IndexVar>& slots) {
  SpaceSignature sig;
  for (const auto& v : slots) sig.spaces.push_back(v.space);
  return sig;
}

}  // namespace

Delta::Delta(std::vector<IndexPair> pairs, std::vector<IndexVar> domain,
             std::vector<IndexVar> codomain, std::vector<BaseSpace> loops)
    : pairs_(std::move(pairs)),
      domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      loops_(std::move(loops)) {
  std::map<int, BaseSpace> pair_ids;
  for (const auto& p : pairs_) {
    if (!same_space(p.upper.space, p.lower.space))
      throw ShapeError("pair links different spaces: " + describe(p.upper) + " / " +
                       describe(p.lower));
    for (const IndexVar* v : {&p.upper, &p.lower})
      if (!pair_ids.emplace(v->id, v->space).second)
        throw ShapeError("index " + describe(*v) + " occurs more than once among the pairs");
  }
  std::set<int> slot_ids;
  for (const auto* slots : {&domain_, &codomain_}) {
    for (const auto& v : *slots) {
      if (!slot_ids.insert(v.id).second)
        throw ShapeError("slot index " + describe(v) + " is repeated");
      auto it = pair_ids.find(v.id);
      if (it == pair_ids.end()) throw ShapeError("slot index " + describe(v) + " is not linked");
      if (!same_space(it->second, v.space))
        throw ShapeError("slot index " + describe(v) + " disagrees with its pair on the space");
    }
  }
  for (const auto& [id, space] : pair_ids)
    if (!slot_ids.contains(id))
      throw ShapeError("dangling index " + describe(IndexVar{id, space}) + " is not a slot");
}

Delta Delta::identity(const SpaceSignature& sig) {
  std::vector<IndexPair> pairs;
  std::vector<IndexVar> dom, cod;
  int n = static_cast<int>(sig.size());
  for (int k = 0; k < n; ++k) {
    IndexVar u{k, sig.spaces[k]};
    IndexVar l{n + k, sig.spaces[k]};
    pairs.push_back({u, l});
    dom.push_back(u);
    cod.push_back(l);
  }
  return Delta(std::move(pairs), std::move(dom), std::move(cod));
}

Delta Delta::epsilon(const SpaceSignature& sig) {
  Delta id = identity(sig);
  std::vector<IndexVar> dom = id.domain_;
  dom.insert(dom.end(), id.codomain_.begin(), id.codomain_.end());
  return id.with_slots(std::move(dom), {});
}

Delta Delta::eta(const SpaceSignature& sig) {
  Delta id = identity(sig);
  std::vector<IndexVar> cod = id.domain_;
  cod.insert(cod.end(), id.codomain_.begin(), id.codomain_.end());
  return id.with_slots({}, std::move(cod));
}

Delta Delta::symmetry(const SpaceSignature& a, const SpaceSignature& b) {
  Delta id = identity(a + b);
  std::vector<IndexVar> cod(id.codomain_.begin() + static_cast<std::ptrdiff_t>(a.size()),
                            id.codomain_.end());
  cod.insert(cod.end(), id.codomain_.begin(),
             id.codomain_.begin() + static_cast<std::ptrdiff_t>(a.size()));
  return id.with_slots(id.domain_, std::move(cod));
}

SpaceSignature Delta::domain_signature() const { return signature_of(domain_); }
SpaceSignature Delta::codomain_signature() const { return signature_of(codomain_); }

double Delta::loop_factor() const {
  double f = 1.0;
  for (const auto& l : loops_) f *= static_cast<double>(l.dim);
  return f;
}

int Delta::next_fresh_id() const {
  int next = 0;
  for (const auto& p : pairs_) next = std::max({next, p.upper.id + 1, p.lower.id + 1});
  return next;
}

Delta Delta::shifted(int offset) const {
  auto shift = [offset](IndexVar v) {
    v.id += offset;
    return v;
  };
  std::vector<IndexPair> pairs;
  for (const auto& p : pairs_) pairs.push_back({shift(p.upper), shift(p.lower)});
  std::vector<IndexVar> dom, cod;
  for (const auto& v : domain_) dom.push_back(shift(v));
  for (const auto& v : codomain_) cod.push_back(shift(v));
  return Delta(std::move(pairs), std::move(dom), std::move(cod), loops_);
}

Delta Delta::with_slots(std::vector<IndexVar> domain, std::vector<IndexVar> codomain) const {
  return Delta(pairs_, std::move(domain), std::move(codomain), loops_);
}

std::vector<std::pair<std::size_t, std::size_t>> Delta::matching() const {
  std::map<int, std::size_t> position;
  std::size_t pos = 0;
  for (const auto& v : domain_) position[v.id] = pos++;
  for (const auto& v : codomain_) position[v.id] = pos++;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : pairs_) {
    std::size_t a = position.at(p.upper.id);
    std::size_t b = position.at(p.lower.id);
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Delta Delta::canonical() const {
  std::vector<IndexVar> dom, cod;
  int pos = 0;
  for (const auto& v : domain_) dom.push_back({pos++, v.space});
  for (const auto& v : codomain_) cod.push_back({pos++, v.space});
  auto slot = [&](std::size_t p) -> const IndexVar& {
    return p < dom.size() ? dom[p] : cod[p - dom.size()];
  };
  std::vector<IndexPair> pairs;
  for (const auto& [a, b] : matching()) pairs.push_back({slot(a), slot(b)});
  std::vector<BaseSpace> loops = loops_;
  std::sort(loops.begin(), loops.end(), loop_less);
  return Delta(std::move(pairs), std::move(dom), std::move(cod), std::move(loops));
}

Delta normalize(const RawDelta& raw, std::mt19937_64* rng) {
  std::vector<IndexPair> pairs = raw.pairs;
  std::vector<BaseSpace> loops = raw.loops;
  for (const auto& p : pairs)
    if (!same_space(p.upper.space, p.lower.space))
      throw ShapeError("ill-typed pair: " + describe(p.upper) + " / " + describe(p.lower));

  struct Occurrence {
    std::size_t pair;
    bool upper;
  };
  for (;;) {
    std::map<int, std::vector<Occurrence>> occurrences;
    std::vector<int> order;  // ids in order of first appearance
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (bool upper : {true, false}) {
        int id = upper ? pairs[i].upper.id : pairs[i].lower.id;
        auto& occ = occurrences[id];
        if (occ.empty()) order.push_back(id);
        occ.push_back({i, upper});
        if (occ.size() > 2)
          throw ShapeError("index #" + std::to_string(id) + " occurs more than twice");
      }
    }
    std::vector<int> shared;
    for (int id : order)
      if (occurrences[id].size() == 2) shared.push_back(id);
    if (shared.empty()) break;

    int x = shared.front();
    if (rng) x = shared[std::uniform_int_distribution<std::size_t>(0, shared.size() - 1)(*rng)];
    auto occ = occurrences[x];
    if (occ[0].pair == occ[1].pair) {
      // δ^x_x closes into a loop.
      loops.push_back(pairs[occ[0].pair].upper.space);
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(occ[0].pair));
      continue;
    }
    if (rng && (*rng)() % 2 == 1) std::swap(occ[0], occ[1]);
    const IndexPair& dropped = pairs[occ[0].pair];
    IndexVar other = occ[0].upper ? dropped.lower : dropped.upper;
    IndexPair& kept = pairs[occ[1].pair];
    (occ[1].upper ? kept.upper : kept.lower) = other;
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(occ[0].pair));
  }
  return Delta(std::move(pairs), raw.domain, raw.codomain, std::move(loops));
}

Delta compose(const Delta& g, const Delta& f) {
  if (f.codomain_signature() != g.domain_signature())
    throw ShapeError("cannot compose: codomain " + f.codomain_signature().to_string() +
                     " vs domain " + g.domain_signature().to_string());
  Delta g2 = g.shifted(f.next_fresh_id());
  RawDelta raw;
  for (std::size_t k = 0; k < f.codomain().size(); ++k)
    raw.pairs.push_back({f.codomain()[k], g2.domain()[k]});
  raw.pairs.insert(raw.pairs.end(), f.pairs().begin(), f.pairs().end());
  raw.pairs.insert(raw.pairs.end(), g2.pairs().begin(), g2.pairs().end());
  raw.domain = f.domain();
  raw.codomain = g2.codomain();
  raw.loops = f.loops();
  raw.loops.insert(raw.loops.end(), g2.loops().begin(), g2.loops().end());
  return normalize(raw);
}

Delta tensor_delta(const Delta& f, const Delta& g) {
  Delta g2 = g.shifted(f.next_fresh_id());
  std::vector<IndexPair> pairs = f.pairs();
  pairs.insert(pairs.end(), g2.pairs().begin(), g2.pairs().end());
  std::vector<IndexVar> dom = f.domain();
  dom.insert(dom.end(), g2.domain().begin(), g2.domain().end());
  std::vector<IndexVar> cod = f.codomain();
  cod.insert(cod.end(), g2.codomain().begin(), g2.codomain().end());
  std::vector<BaseSpace> loops = f.loops();
  loops.insert(loops.end(), g2.loops().begin(), g2.loops().end());
  return Delta(std::move(pairs), std::move(dom), std::move(cod), std::move(loops));
}

bool alpha_equiv(const Delta& a, const Delta& b) {
  if (a.domain_signature() != b.domain_signature()) return false;
  if (a.codomain_signature() != b.codomain_signature()) return false;
  if (a.matching() != b.matching()) return false;
  auto la = a.loops(), lb = b.loops();
  std::sort(la.begin(), la.end(), loop_less);
  std::sort(lb.begin(), lb.end(), loop_less);
  return la == lb;
}

// ---------------------------------------------------------------------------
// Proof labelling

namespace {

struct Labelled {
  std::vector<IndexPair> pairs;
  std::vector<IndexVar> domain;
  std::vector<IndexVar> codomain;
};

using Slots = std::vector<IndexVar>;

std::pair<Slots, Slots> split(const Slots& s, std::size_t at) {
  auto mid = s.begin() + static_cast<std::ptrdiff_t>(at);
  return {Slots(s.begin(), mid), Slots(mid, s.end())};
}

Slots concat(Slots a, const Slots& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class ProofLabeller {
 public:
  explicit ProofLabeller(const AtomMap& atom_map) : atom_map_(atom_map) {}

  Labelled label(const Proof& p) {
    const Arrow& c = p.conclusion();
    if (p.rule() == RuleName::Axiom) {
      Labelled out;
      for (const auto& space : interpret_type(c.source, atom_map_).spaces) {
        IndexVar u{next_++, space};
        IndexVar l{next_++, space};
        out.pairs.push_back({u, l});
        out.domain.push_back(u);
        out.codomain.push_back(l);
      }
      return out;
    }
    Labelled prem = label(p.premises()[0]);
    switch (p.rule()) {
      case RuleName::ResUnder: {  // A⊗B → C  ⟹  B → A\C
        auto [a, b] = split(prem.domain, width(c.target.left()));
        return {prem.pairs, b, concat(a, prem.codomain)};
      }
      case RuleName::ResUnderInv: {  // B → A\C  ⟹  A⊗B → C
        auto [a, rest] = split(prem.codomain, width(c.source.left()));
        return {prem.pairs, concat(a, prem.domain), rest};
      }
      case RuleName::ResOver: {  // A⊗B → C  ⟹  A → C/B
        auto [a, b] = split(prem.domain, width(c.source));
        return {prem.pairs, a, concat(prem.codomain, b)};
      }
      case RuleName::ResOverInv: {  // A → C/B  ⟹  A⊗B → C
        auto [cc, b] = split(prem.codomain, width(c.target));
        return {prem.pairs, concat(prem.domain, b), cc};
      }
      case RuleName::ResDia:
      case RuleName::ResDiaInv:
      case RuleName::MonDia:
      case RuleName::MonBox:
      case RuleName::AlphaL:
      case RuleName::AlphaR:
        return prem;
      case RuleName::SigmaL: {  // B⊗(◇A⊗C)  ⟹  ◇A⊗(B⊗C)
        std::size_t wb = width(c.source.right().left());
        std::size_t wa = width(c.source.left());
        auto [b, ac] = split(prem.domain, wb);
        auto [a, cc] = split(ac, wa);
        return {prem.pairs, concat(concat(a, b), cc), prem.codomain};
      }
      case RuleName::SigmaR: {  // (A⊗◇C)⊗B  ⟹  (A⊗B)⊗◇C
        std::size_t wa = width(c.source.left().left());
        std::size_t wc = width(c.source.right());
        auto [a, cb] = split(prem.domain, wa);
        auto [cc, b] = split(cb, wc);
        return {prem.pairs, concat(concat(a, b), cc), prem.codomain};
      }
      case RuleName::MonTensor:
      case RuleName::MonOver:
      case RuleName::MonUnder: {
        Labelled g = label(p.premises()[1]);
        Labelled out;
        out.pairs = concat_pairs(prem.pairs, g.pairs);
        if (p.rule() == RuleName::MonTensor) {
          out.domain = concat(prem.domain, g.domain);
          out.codomain = concat(prem.codomain, g.codomain);
        } else if (p.rule() == RuleName::MonOver) {  // A/D → B/C
          out.domain = concat(prem.domain, g.codomain);
          out.codomain = concat(prem.codomain, g.domain);
        } else {  // B\C → A\D
          out.domain = concat(prem.codomain, g.domain);
          out.codomain = concat(prem.domain, g.codomain);
        }
        return out;
      }
      case RuleName::Axiom:
        break;
    }
    throw InvalidProofError("unhandled rule");
  }

 private:
  std::size_t width(const Formula& f) const { return interpret_type(f, atom_map_).size(); }

  static std::vector<IndexPair> concat_pairs(std::vector<IndexPair> a, const std::vector<IndexPair>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  const AtomMap& atom_map_;
  int next_ = 0;
};

}  // namespace

Delta delta_of_proof(const Proof& p, const AtomMap& atom_map) {
  if (!check_proof(p)) throw InvalidProofError("proof does not check: " + serialize_proof(p));
  Labelled l = ProofLabeller(atom_map).label(p);
  return Delta(std::move(l.pairs), std::move(l.domain), std::move(l.codomain));
}

std::vector<Reading> distinct_readings(const std::vector<Proof>& proofs, const AtomMap& atom_map) {
  std::vector<Reading> out;
  std::map<std::vector<std::pair<std::size_t, std::size_t>>, std::size_t> seen;
  for (const auto& p : proofs) {
    if (!out.empty() && p.conclusion() != out.front().proof.conclusion())
      throw Error("distinct_readings: proofs have different conclusions");
    Delta d = delta_of_proof(p, atom_map);
    // Signatures and loops are fixed by the shared conclusion.
    auto [it, inserted] = seen.emplace(d.matching(), out.size());
    if (inserted)
      out.push_back({std::move(d), p, 1});
    else
      ++out[it->second].proof_count;
  }
  return out;
}

}  // namespace lambek
