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

// Shared fixtures for the test binaries: golden sequents, random
// generators and a brute-force contraction oracle.

#ifndef LAMBEK_TESTS_SUPPORT_HPP_
#define LAMBEK_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lambek/delta.hpp"
#include "lambek/formula.hpp"
#include "lambek/proof.hpp"
#include "lambek/search.hpp"
#include "lambek/tensor.hpp"

namespace lambek::testing {

inline AtomMap atoms(std::size_t n_dim, std::size_t s_dim) {
  BaseSpace n{"N", n_dim}, s{"S", s_dim};
  return {{"n", n}, {"np", n}, {"s", s}};
}

inline Arrow arrow(const std::string& source, const std::string& target) {
  return {parse_formula(source), parse_formula(target)};
}

inline SearchConfig config(const std::string& postulates) {
  SearchConfig c;
  c.postulates = SearchConfig::postulate_set(postulates);
  return c;
}

inline const std::string kRel = "(n\\n)/(<>[]np\\s)";
inline const std::string kDutch = "n*((" + kRel + ")*(np*(np\\(np\\s))))";
inline const std::string kEnglishSubject = "n*(((n\\n)/(np\\s))*(((np\\s)/np)*np))";
inline const std::string kEnglishObject = "n*(((n\\n)/(s/<>[]np))*(np*((np\\s)/np)))";

struct GoldenSequent {
  std::string name;
  Arrow goal;
  std::string postulates;
};

/// Axioms, the three small examples, and the relative clauses.
inline std::vector<GoldenSequent> golden_suite() {
  return {
      {"axiom np", arrow("np", "np"), "none"},
      {"axiom s", arrow("s", "s"), "none"},
      {"intransitive identity", arrow("np\\s", "np\\s"), "none"},
      {"poets dream", arrow("np*(np\\s)", "s"), "none"},
      {"lifted poets", arrow("np", "s/(np\\s)"), "none"},
      {"dutch relative", arrow(kDutch, "n"), "left"},
      {"english subject relative", arrow(kEnglishSubject, "n"), "none"},
      {"english object relative", arrow(kEnglishObject, "n"), "right"},
  };
}

/// Sums the product of input entries over every assignment of values to
/// all slots that agrees on both ends of every pair.
inline DenseTensor brute_contract(const Delta& d, const std::vector<DenseTensor>& inputs) {
  std::vector<IndexVar> slots = d.domain();
  slots.insert(slots.end(), d.codomain().begin(), d.codomain().end());
  std::map<int, std::size_t> pos;
  for (std::size_t k = 0; k < slots.size(); ++k) pos[slots[k].id] = k;
  std::vector<std::size_t> cod_shape;
  for (const auto& v : d.codomain()) cod_shape.push_back(v.space.dim);
  DenseTensor out(cod_shape);

  std::vector<std::size_t> val(slots.size(), 0);
  for (;;) {
    bool ok = true;
    for (const auto& p : d.pairs())
      if (val[pos[p.upper.id]] != val[pos[p.lower.id]]) ok = false;
    if (ok) {
      double prod = 1.0;
      std::size_t slot = 0;
      for (const auto& x : inputs) {
        std::size_t flat = 0;
        for (std::size_t a = 0; a < x.rank(); ++a, ++slot) flat = flat * x.shape()[a] + val[slot];
        prod *= x[flat];
      }
      std::size_t flat = 0;
      for (std::size_t c = 0; c < cod_shape.size(); ++c)
        flat = flat * cod_shape[c] + val[d.domain().size() + c];
      out[flat] += prod;
    }
    std::size_t k = slots.size();
    while (k > 0 && ++val[k - 1] == slots[k - 1].space.dim) val[--k] = 0;
    if (k == 0) break;
  }
  DenseTensor scaled(out.shape());
  for (std::size_t k = 0; k < out.size(); ++k) scaled[k] = out[k] * d.loop_factor();
  return scaled;
}

inline DenseTensor random_tensor(std::mt19937_64& rng, const std::vector<std::size_t>& shape) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseTensor t(shape);
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = u(rng);
  return t;
}

inline std::vector<BaseSpace> small_spaces(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  return {{"A", dim(rng)}, {"B", dim(rng)}};
}

/// A normal delta whose slots are paired by a random perfect matching.
/// Every slot is placed in the domain or codomain at random.
inline Delta random_delta(std::mt19937_64& rng, std::size_t max_pairs,
                          const std::vector<BaseSpace>& spaces, bool with_loops = false) {
  std::uniform_int_distribution<std::size_t> npairs(0, max_pairs);
  std::uniform_int_distribution<std::size_t> pick(0, spaces.size() - 1);
  std::size_t k = npairs(rng);
  std::vector<IndexPair> pairs;
  std::vector<IndexVar> ends;
  for (std::size_t p = 0; p < k; ++p) {
    BaseSpace sp = spaces[pick(rng)];
    IndexVar a{static_cast<int>(2 * p), sp}, b{static_cast<int>(2 * p + 1), sp};
    if (rng() % 2) std::swap(a, b);
    pairs.push_back({a, b});
    ends.push_back(a);
    ends.push_back(b);
  }
  std::shuffle(ends.begin(), ends.end(), rng);
  std::size_t split = std::uniform_int_distribution<std::size_t>(0, ends.size())(rng);
  std::vector<IndexVar> dom(ends.begin(), ends.begin() + static_cast<std::ptrdiff_t>(split));
  std::vector<IndexVar> cod(ends.begin() + static_cast<std::ptrdiff_t>(split), ends.end());
  std::vector<BaseSpace> loops;
  if (with_loops && rng() % 3 == 0) loops.push_back(spaces[pick(rng)]);
  return Delta(pairs, dom, cod, loops);
}

/// A normal delta with the given domain signature and a random codomain
/// chosen so that every space can be matched.
inline Delta random_delta_from(std::mt19937_64& rng, const SpaceSignature& domain,
                               const std::vector<BaseSpace>& spaces) {
  int next = 0;
  std::vector<IndexVar> dom, cod;
  for (const auto& s : domain.spaces) dom.push_back({next++, s});
  for (const auto& s : spaces) {
    std::size_t have = static_cast<std::size_t>(
        std::count_if(dom.begin(), dom.end(), [&](const IndexVar& v) { return v.space == s; }));
    std::size_t extra = have % 2 + 2 * (rng() % 2);
    for (std::size_t e = 0; e < extra; ++e) cod.push_back({next++, s});
  }
  std::shuffle(cod.begin(), cod.end(), rng);
  std::vector<IndexPair> pairs;
  for (const auto& s : spaces) {
    std::vector<IndexVar> group;
    for (const auto* list : {&dom, &cod})
      for (const auto& v : *list)
        if (v.space == s) group.push_back(v);
    std::shuffle(group.begin(), group.end(), rng);
    for (std::size_t k = 0; k + 1 < group.size(); k += 2) pairs.push_back({group[k], group[k + 1]});
  }
  return Delta(pairs, dom, cod);
}

/// Spreads every pair of a normal delta into a chain through fresh indices
/// and adds closed cycles (recorded in `extra_loops`), then shuffles the
/// pairs. Rewriting must recover the delta.
inline RawDelta scramble(const Delta& d, std::mt19937_64& rng, const std::vector<BaseSpace>& spaces,
                         std::vector<BaseSpace>& extra_loops) {
  int next = d.next_fresh_id();
  RawDelta raw{{}, d.domain(), d.codomain(), d.loops()};
  auto push = [&](IndexVar u, IndexVar v) {
    if (rng() % 2) std::swap(u, v);
    raw.pairs.push_back({u, v});
  };
  for (const auto& p : d.pairs()) {
    IndexVar prev = p.upper;
    for (std::size_t k = rng() % 4; k > 0; --k) {
      IndexVar mid{next++, p.upper.space};
      push(prev, mid);
      prev = mid;
    }
    push(prev, p.lower);
  }
  for (std::size_t c = rng() % 3; c > 0; --c) {
    BaseSpace sp = spaces[rng() % spaces.size()];
    std::size_t len = 1 + rng() % 3;
    IndexVar first{next++, sp}, prev = first;
    for (std::size_t k = 1; k < len; ++k) {
      IndexVar mid{next++, sp};
      push(prev, mid);
      prev = mid;
    }
    push(prev, first);
    extra_loops.push_back(sp);
  }
  std::shuffle(raw.pairs.begin(), raw.pairs.end(), rng);
  return raw;
}

/// Random formula over {np, n, s} with the given depth bound.
inline Formula random_formula(std::mt19937_64& rng, std::size_t depth) {
  static const char* names[] = {"np", "n", "s", "pp", "a1"};
  if (depth == 0 || rng() % 4 == 0) return Formula::atom(names[rng() % 5]);
  switch (rng() % 5) {
    case 0:
      return Formula::diamond(random_formula(rng, depth - 1));
    case 1:
      return Formula::box(random_formula(rng, depth - 1));
    case 2:
      return Formula::tensor(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3:
      return Formula::over(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default:
      return Formula::under(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace lambek::testing

#endif  // LAMBEK_TESTS_SUPPORT_HPP_
