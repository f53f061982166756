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

#ifndef LAMBEK_DELTA_HPP_
#define LAMBEK_DELTA_HPP_

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "lambek/formula.hpp"
#include "lambek/proof.hpp"

namespace lambek {

struct IndexVar {
  int id = 0;
  BaseSpace space;
};

/// One linked pair of a generalized Kronecker delta, δ^upper_lower.
struct IndexPair {
  IndexVar upper;
  IndexVar lower;
};

/// Pairs, slots and closed loops before rewriting. Indices may repeat.
struct RawDelta {
  std::vector<IndexPair> pairs;
  std::vector<IndexVar> domain;
  std::vector<IndexVar> codomain;
  std::vector<BaseSpace> loops;
};

/// A generalized Kronecker delta δ^I_J : A_M → B_N in normal form.
///
/// Invariants, checked on construction:
///  - both ends of every pair live in the same base space;
///  - every index id occurs exactly once among the pairs;
///  - the pair indices are exactly the slot indices M + N.
///
/// `loops` records pairs that closed on themselves during composition
/// (a trace); each contributes a scalar factor equal to its dimension.
class Delta {
 public:
  Delta(std::vector<IndexPair> pairs, std::vector<IndexVar> domain, std::vector<IndexVar> codomain,
        std::vector<BaseSpace> loops = {});

  /// 1_A: one pair per base space, domain index upper.
  static Delta identity(const SpaceSignature& sig);
  /// ε_A : A ⊗ A → I.
  static Delta epsilon(const SpaceSignature& sig);
  /// η_A : I → A ⊗ A.
  static Delta eta(const SpaceSignature& sig);
  /// σ_{A,B} : A ⊗ B → B ⊗ A.
  static Delta symmetry(const SpaceSignature& a, const SpaceSignature& b);

  const std::vector<IndexPair>& pairs() const { return pairs_; }
  const std::vector<IndexVar>& domain() const { return domain_; }
  const std::vector<IndexVar>& codomain() const { return codomain_; }
  const std::vector<BaseSpace>& loops() const { return loops_; }

  SpaceSignature domain_signature() const;
  SpaceSignature codomain_signature() const;

  /// Product of the dimensions of the closed loops.
  double loop_factor() const;

  /// Smallest id not used by this delta.
  int next_fresh_id() const;

  /// All ids shifted by `offset`.
  Delta shifted(int offset) const;

  /// Same pairs, slot lists replaced (must be a permutation of M + N).
  Delta with_slots(std::vector<IndexVar> domain, std::vector<IndexVar> codomain) const;

  /// Linked slot positions, domain slots first (0..|M|-1) then codomain
  /// slots. Each entry is (smaller, larger); sorted.
  std::vector<std::pair<std::size_t, std::size_t>> matching() const;

  /// Ids renumbered by slot position, pairs oriented low→high and sorted,
  /// loops sorted. Two deltas are α-equivalent iff their canonical forms
  /// are identical.
  Delta canonical() const;

 private:
  std::vector<IndexPair> pairs_;
  std::vector<IndexVar> domain_;
  std::vector<IndexVar> codomain_;
  std::vector<BaseSpace> loops_;
};

/// Rewrites shared indices away: for pairs (a,b),(c,d) with a = c, drop
/// (a,b) and replace (c,d) by (b,d); symmetrically for shared lower or
/// mixed positions. A pair closing on itself becomes a loop. Repeats until
/// every index is unique. With `rng`, the shared index and the pair to drop
/// are chosen at random at each step.
///
/// Throws ShapeError for pairs across different base spaces, indices
/// occurring more than twice, or slots left unlinked after rewriting.
Delta normalize(const RawDelta& raw, std::mt19937_64* rng = nullptr);

/// g ∘ f. Requires f.codomain_signature() == g.domain_signature().
Delta compose(const Delta& g, const Delta& f);

/// f ⊗ g: pair lists and signatures concatenated, g renamed apart.
Delta tensor_delta(const Delta& f, const Delta& g);

bool alpha_equiv(const Delta& a, const Delta& b);

/// The delta labelling a proof: axioms introduce fresh pairs; residuation,
/// modal and structural rules only re-partition or permute the slots; the
/// binary monotonicity rules concatenate their premises' deltas.
/// Throws InvalidProofError when check_proof fails.
Delta delta_of_proof(const Proof& p, const AtomMap& atom_map);

struct Reading {
  Delta delta;
  Proof proof;
  /// How many proofs collapsed into this reading.
  std::size_t proof_count = 1;
};

/// One entry per α-equivalence class of delta_of_proof, in order of first
/// occurrence, keeping the first proof as representative.
std::vector<Reading> distinct_readings(const std::vector<Proof>& proofs, const AtomMap& atom_map);

}  // namespace lambek

#endif  // LAMBEK_DELTA_HPP_
