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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "lambek/delta.hpp"
#include "lambek/einstein.hpp"
#include "lambek/errors.hpp"
#include "lambek/search.hpp"
#include "lambek/tensor.hpp"
#include "support.hpp"

namespace lambek {
namespace {

using testing::arrow;
using testing::atoms;
using testing::brute_contract;
using testing::config;
using testing::random_delta;
using testing::random_delta_from;
using testing::random_tensor;

const BaseSpace N{"N", 3}, S{"S", 2};

SpaceSignature sig(std::initializer_list<BaseSpace> s) { return SpaceSignature{std::vector<BaseSpace>(s)}; }

Delta only_delta(const char* source, const char* target, const std::string& post = "none") {
  auto r = derive(arrow(source, target), config(post));
  EXPECT_FALSE(r.proofs.empty());
  return delta_of_proof(r.proofs.front(), atoms(3, 2));
}

std::vector<std::pair<int, int>> pair_ids(const Delta& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : d.pairs()) out.emplace_back(p.upper.id, p.lower.id);
  std::sort(out.begin(), out.end());
  return out;
}

// Naive [r, c] matrix product.
DenseTensor matmul(const DenseTensor& a, const DenseTensor& b) {
  std::size_t r = a.shape()[0], k = a.shape()[1], c = b.shape()[1];
  DenseTensor out({r, c});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t m = 0; m < k; ++m) out[i * c + j] += a[i * k + m] * b[m * c + j];
  return out;
}

TEST(Delta, InvariantsEnforced) {
  IndexVar a{0, N}, b{1, N}, c{2, S};
  EXPECT_NO_THROW(Delta({{a, b}}, {a}, {b}));
  EXPECT_THROW(Delta({{a, c}}, {a}, {c}), ShapeError);        // cross-space pair
  EXPECT_THROW(Delta({{a, b}}, {a}, {}), ShapeError);         // unlinked pair end
  EXPECT_THROW(Delta({{a, b}, {a, b}}, {a, a}, {b, b}), ShapeError);  // repeated id
  EXPECT_THROW(Delta({}, {a}, {}), ShapeError);               // slot without pair
}

TEST(Delta, Builders) {
  Delta id = Delta::identity(sig({N, S}));
  EXPECT_EQ(print_delta(id), "δ^{i,j}_{k,l} : N_i ⊗ S_j → N_k ⊗ S_l");
  EXPECT_EQ(Delta::epsilon(sig({N})).codomain().size(), 0u);
  EXPECT_EQ(Delta::eta(sig({N})).domain().size(), 0u);
  Delta sw = Delta::symmetry(sig({N}), sig({S}));
  EXPECT_EQ(sw.codomain_signature(), sig({S, N}));
  std::mt19937_64 rng(1);
  DenseTensor x = random_tensor(rng, {3, 2});
  DenseTensor y = contract(sw, {x});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(y.at({j, i}), x.at({i, j}));
}

TEST(Normalize, NothingShared) {
  IndexVar i{0, N}, j{1, N};
  Delta d = normalize({{{i, j}}, {i}, {j}, {}});
  ASSERT_EQ(d.pairs().size(), 1u);
  EXPECT_EQ(d.pairs()[0].upper.id, 0);
  EXPECT_EQ(d.pairs()[0].lower.id, 1);
}

TEST(Normalize, ChainedRenamingIsOrderFree) {
  // δ^j_k δ^l_m over A_{ij} B_{kl} C_{mn}: the free ends i, n survive and the
  // pattern is A_{ij} B_{jl} C_{ln}, i.e. the matrix product A·B·C.
  std::mt19937_64 rng(3);
  BaseSpace sp{"N", 3};
  IndexVar i{0, sp}, j{1, sp}, k{2, sp}, l{3, sp}, m{4, sp}, n{5, sp}, out_i{6, sp}, out_n{7, sp};
  RawDelta raw{{{j, k}, {l, m}, {i, out_i}, {n, out_n}}, {i, j, k, l, m, n}, {out_i, out_n}, {}};
  DenseTensor a = random_tensor(rng, {3, 3}), b = random_tensor(rng, {3, 3}), c = random_tensor(rng, {3, 3});
  DenseTensor expected = matmul(matmul(a, b), c);
  for (int seed = 0; seed < 20; ++seed) {
    std::mt19937_64 order(static_cast<std::uint64_t>(seed));
    Delta d = normalize(raw, &order);
    EXPECT_LE(max_abs_diff(contract(d, {a, b, c}), expected), 1e-12);
  }
}

TEST(Normalize, SubstitutesThroughSharedIndex) {
  // δ^{a,i}_{b,j} with a = j: drop (a,b) and link i to b.
  IndexVar a{0, N}, b{1, N}, i{2, N};
  RawDelta raw{{{a, b}, {i, a}}, {i}, {b}, {}};
  Delta d = normalize(raw);
  ASSERT_EQ(d.pairs().size(), 1u);
  EXPECT_EQ(pair_ids(d), (std::vector<std::pair<int, int>>{{2, 1}}));
}

TEST(Normalize, SelfLinkBecomesLoop) {
  IndexVar x{0, S};
  Delta d = normalize({{{x, x}}, {}, {}, {}});
  EXPECT_TRUE(d.pairs().empty());
  EXPECT_EQ(d.loop_factor(), 2.0);
}

TEST(Normalize, Errors) {
  IndexVar a{0, N}, b{1, S}, c{2, N}, d{3, N};
  EXPECT_THROW(normalize({{{a, b}}, {a}, {b}, {}}), ShapeError);
  EXPECT_THROW(normalize({{{a, c}, {a, d}, {a, c}}, {}, {}, {}}), ShapeError);
}

TEST(Normalize, ConfluentUnderRandomOrder) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    Delta d = random_delta(rng, 4, {N, S}, true);
    std::vector<BaseSpace> loops;
    RawDelta raw = testing::scramble(d, rng, {N, S}, loops);
    std::vector<BaseSpace> all_loops = d.loops();
    all_loops.insert(all_loops.end(), loops.begin(), loops.end());
    Delta expected(d.pairs(), d.domain(), d.codomain(), all_loops);
    Delta fixed = normalize(raw);
    ASSERT_TRUE(alpha_equiv(fixed, expected));
    for (int k = 0; k < 3; ++k) {
      std::mt19937_64 order(rng());
      ASSERT_TRUE(alpha_equiv(normalize(raw, &order), fixed)) << "trial " << trial;
    }
  }
}

TEST(Compose, UnitLaws) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    Delta d = random_delta(rng, 4, {N, S});
    EXPECT_TRUE(alpha_equiv(compose(Delta::identity(d.codomain_signature()), d), d));
    EXPECT_TRUE(alpha_equiv(compose(d, Delta::identity(d.domain_signature())), d));
  }
}

TEST(Compose, MatchesMatrixProduct) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 200; ++k) {
    auto spaces = testing::small_spaces(rng, 4);
    Delta f = random_delta(rng, 3, spaces);
    Delta g = random_delta_from(rng, f.codomain_signature(), spaces);
    DenseTensor expected = matmul(delta_matrix(g), delta_matrix(f));
    EXPECT_EQ(max_abs_diff(delta_matrix(compose(g, f)), expected), 0.0);
  }
}

TEST(Compose, Associative) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 300; ++k) {
    auto spaces = testing::small_spaces(rng, 3);
    Delta f = random_delta(rng, 3, spaces);
    Delta g = random_delta_from(rng, f.codomain_signature(), spaces);
    Delta h = random_delta_from(rng, g.codomain_signature(), spaces);
    EXPECT_TRUE(alpha_equiv(compose(h, compose(g, f)), compose(compose(h, g), f)));
  }
}

TEST(Compose, AgreesWithSequentialContraction) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    auto spaces = testing::small_spaces(rng, 3);
    Delta f = random_delta(rng, 3, spaces);
    Delta g = random_delta_from(rng, f.codomain_signature(), spaces);
    DenseTensor x = random_tensor(rng, f.domain_signature().dims());
    DenseTensor step = contract(f, {x});
    DenseTensor direct = contract(compose(g, f), {x});
    EXPECT_LE(max_abs_diff(direct, contract(g, {step})), 1e-12);
  }
}

TEST(Compose, TraceOfIdentity) {
  Delta loop = compose(Delta::epsilon(sig({N})), Delta::eta(sig({N})));
  EXPECT_TRUE(loop.pairs().empty());
  EXPECT_EQ(contract(loop, {})[0], 3.0);
  EXPECT_THROW(compose(Delta::identity(sig({N})), Delta::identity(sig({S}))), ShapeError);
}

TEST(TensorDelta, IdentitiesCombine) {
  Delta both = tensor_delta(Delta::identity(sig({N})), Delta::identity(sig({S, N})));
  EXPECT_TRUE(alpha_equiv(both, Delta::identity(sig({N, S, N}))));
}

TEST(TensorDelta, OuterProduct) {
  std::mt19937_64 rng(10);
  DenseTensor a = random_tensor(rng, {3}), b = random_tensor(rng, {2});
  Delta d = tensor_delta(Delta::identity(sig({N})), Delta::identity(sig({S})));
  DenseTensor got = contract(d, {a, b});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(got.at({i, j}), a[i] * b[j]);
}

TEST(TensorDelta, NormalInputsNeedNoRewrites) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    Delta f = random_delta(rng, 3, {N, S}), g = random_delta(rng, 3, {N, S});
    Delta t = tensor_delta(f, g);
    EXPECT_EQ(t.pairs().size(), f.pairs().size() + g.pairs().size());
    EXPECT_EQ(t.domain().size(), f.domain().size() + g.domain().size());
  }
}

TEST(AlphaEquiv, Basics) {
  std::mt19937_64 rng(13);
  Delta d = random_delta(rng, 4, {N, S});
  EXPECT_TRUE(alpha_equiv(d, d));
  EXPECT_TRUE(alpha_equiv(d, d.shifted(100)));
  EXPECT_FALSE(alpha_equiv(Delta::identity(sig({N, N})), Delta::symmetry(sig({N}), sig({N}))));
}

TEST(DeltaOfProof, Axiom) {
  EXPECT_EQ(print_delta(only_delta("np", "np")), "δ^{i}_{j} : N_i → N_j");
}

TEST(DeltaOfProof, SmallExamples) {
  EXPECT_EQ(print_delta(only_delta("np\\s", "np\\s")), "δ^{k,j}_{i,l} : N_i ⊗ S_j → N_k ⊗ S_l");
  EXPECT_EQ(print_delta(only_delta("np*(np\\s)", "s")), "δ^{i,k}_{j,l} : N_i ⊗ N_j ⊗ S_k → S_l");
  EXPECT_EQ(print_delta(only_delta("np", "s/(np\\s)")), "δ^{i,l}_{k,j} : N_i → S_j ⊗ N_k ⊗ S_l");
}

TEST(DeltaOfProof, DutchReadings) {
  AtomMap m = atoms(3, 2);
  auto r = derive(arrow(testing::kDutch, "n"), config("left"));
  auto readings = distinct_readings(r.proofs, m);
  ASSERT_EQ(readings.size(), 2u);
  SpaceSignature dom = interpret_type(parse_formula(testing::kDutch), m);
  SpaceSignature cod = interpret_type(parse_formula("n"), m);

  // The labelled form of the subject reading, and its relabelled form.
  Delta subject = delta_from_labels("iklmn", "jrpqo", "ijklmnopq", "r", dom, cod);
  Delta object = parse_einstein("mannen_i ⊗ die_{ijkl} ⊗ vrouwen_m ⊗ haten_{kml} → v_j", dom, cod);
  Delta subject_printed =
      parse_einstein("mannen_i ⊗ die_{ijkl} ⊗ vrouwen_m ⊗ haten_{mkl} → v_j", dom, cod);
  EXPECT_TRUE(alpha_equiv(subject, subject_printed));
  EXPECT_FALSE(alpha_equiv(subject, object));

  int subject_hits = 0, object_hits = 0;
  for (const auto& rd : readings) {
    subject_hits += alpha_equiv(rd.delta, subject);
    object_hits += alpha_equiv(rd.delta, object);
  }
  EXPECT_EQ(subject_hits, 1);
  EXPECT_EQ(object_hits, 1);
}

TEST(DeltaOfProof, UnaryRulesKeepPairs) {
  AtomMap m = atoms(2, 3);
  std::function<void(const Proof&)> visit = [&](const Proof& p) {
    for (const auto& q : p.premises()) visit(q);
    if (p.premises().size() != 1) return;
    Delta here = delta_of_proof(p, m), below = delta_of_proof(p.premises()[0], m);
    EXPECT_EQ(pair_ids(here), pair_ids(below)) << rule_name(p.rule());
  };
  for (const auto& g : testing::golden_suite())
    for (const auto& p : derive(g.goal, config(g.postulates)).proofs) visit(p);
}

TEST(DeltaOfProof, RejectsInvalidProof) {
  Proof bad(RuleName::Axiom, arrow("np", "s"));
  EXPECT_THROW(delta_of_proof(bad, atoms(2, 2)), InvalidProofError);
}

TEST(DistinctReadings, Examples) {
  AtomMap m = atoms(2, 2);
  EXPECT_EQ(distinct_readings(derive(arrow(testing::kEnglishSubject, "n"), config("none")).proofs, m).size(), 1u);
  EXPECT_EQ(distinct_readings(derive(arrow("np", "np"), config("none")).proofs, m).size(), 1u);
  auto dutch = distinct_readings(derive(arrow(testing::kDutch, "n"), config("left")).proofs, m);
  std::size_t total = 0;
  for (const auto& r : dutch) total += r.proof_count;
  EXPECT_EQ(total, derive(arrow(testing::kDutch, "n"), config("left")).proofs.size());
  std::vector<Proof> mixed = {derive(arrow("np", "np"), config("none")).proofs[0],
                              derive(arrow("s", "s"), config("none")).proofs[0]};
  EXPECT_THROW(distinct_readings(mixed, m), Error);
}

TEST(Einstein, PrintedForms) {
  AtomMap m = atoms(3, 2);
  auto r = derive(arrow("np*(np\\s)", "s"), config("none"));
  Delta d = delta_of_proof(r.proofs[0], m);
  EXPECT_EQ(print_einstein(d, {{"poets", 1}, {"dream", 2}}, "V"), "poets_i ⊗ dream_{ij} → V_j");
  EXPECT_EQ(print_einstein(d, {{"poets", 1}, {"dream", 2}}, "V", EinsteinStyle::Ascii),
            "poets[i] dream[i,j] -> V[j]");
  EXPECT_THROW(print_einstein(d, {{"poets", 1}}, "V"), ShapeError);
}

TEST(Einstein, ParseRoundTrip) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 300; ++k) {
    Delta d = random_delta(rng, 5, {N, S});
    std::vector<TensorName> names;
    for (std::size_t s = 0; s < d.domain().size(); ++s) names.push_back({"t" + std::to_string(s), 1});
    for (auto style : {EinsteinStyle::Unicode, EinsteinStyle::Ascii}) {
      std::string text = print_einstein(d, names, "out", style);
      Delta back = parse_einstein(text, d.domain_signature(), d.codomain_signature());
      EXPECT_TRUE(alpha_equiv(back, d)) << text;
    }
  }
}

TEST(Einstein, LetterSequence) {
  auto letters = index_letters(30);
  EXPECT_EQ(letters[0], "i");
  EXPECT_EQ(letters[17], "z");
  EXPECT_EQ(letters[18], "a");
  EXPECT_EQ(letters[25], "h");
  EXPECT_EQ(letters[26], "i2");
}

TEST(Einstein, ParseErrors) {
  SpaceSignature n1 = sig({N});
  EXPECT_THROW(parse_einstein("a_i → b_i_i", n1, n1), Error);
  EXPECT_THROW(parse_einstein("a_i → b_j", n1, n1), Error);
  EXPECT_THROW(parse_einstein("a_{ij} → b_j", n1, n1), Error);
}

}  // namespace
}  // namespace lambek
