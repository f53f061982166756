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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lambek/categorical.hpp"
#include "lambek/delta.hpp"
#include "lambek/einstein.hpp"
#include "lambek/lexicon.hpp"
#include "lambek/pipeline.hpp"
#include "lambek/search.hpp"
#include "lambek/tensor.hpp"
#include "support.hpp"

namespace {

using namespace lambek;
using namespace lambek::testing;
using Clock = std::chrono::steady_clock;

const std::string kData = LAMBEK_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Outcome ambiguity() {
  Outcome o;
  auto start = Clock::now();
  Arrow goal = arrow(kDutch, "n");
  AtomMap m = atoms(4, 3);
  auto left = derive(goal, config("left"));
  auto readings = distinct_readings(left.proofs, m);
  auto none = distinct_readings(derive(goal, config("none")).proofs, m);
  double elapsed = seconds_since(start);

  SpaceSignature dom = interpret_type(goal.source, m), cod = interpret_type(goal.target, m);
  Delta subject = parse_einstein("mannen_i die_{ijkl} vrouwen_m haten_{mkl}", dom, cod);
  Delta object = parse_einstein("mannen_i die_{ijkl} vrouwen_m haten_{kml}", dom, cod);

  o.require(readings.size() == 2, "left postulates gave " + std::to_string(readings.size()) + " readings");
  if (readings.size() == 2) {
    bool direct = alpha_equiv(readings[0].delta, subject) && alpha_equiv(readings[1].delta, object);
    bool swapped = alpha_equiv(readings[0].delta, object) && alpha_equiv(readings[1].delta, subject);
    o.require(direct || swapped, "readings do not match the subject/object forms");
  }
  o.require(none.size() == 1, "no postulates gave " + std::to_string(none.size()) + " readings");
  if (none.size() == 1) o.require(alpha_equiv(none[0].delta, subject), "postulate-free reading is not the subject one");
  o.require(!left.bound_hit, "search bound hit");
  o.require(elapsed < 2.0, "took " + fmt("%.3f", elapsed) + " s");
  if (o.pass)
    o.detail = std::to_string(left.proofs.size()) + " proofs, 2 readings with left postulates, 1 without, " +
               fmt("%.2f", elapsed * 1e3) + " ms";
  return o;
}

Outcome theorem() {
  Outcome o;
  auto start = Clock::now();
  double worst = 0.0;
  std::size_t checked = 0;
  for (const auto& g : golden_suite()) {
    auto proofs = derive(g.goal, config(g.postulates)).proofs;
    o.require(!proofs.empty(), g.name + " has no proof");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      std::mt19937_64 rng(seed * 7919 + g.name.size());
      std::uniform_int_distribution<std::size_t> dim(1, 3);
      AtomMap m = atoms(dim(rng), dim(rng));
      for (const auto& p : proofs) {
        Delta d = delta_of_proof(p, m);
        LinearMapMatrix cat = categorical_eval(p, m);
        // All basis inputs at once: the full matrices.
        worst = std::max(worst, max_abs_diff(cat.matrix(), delta_matrix(d)));
        // One random input per word, through the contraction engine.
        std::vector<DenseTensor> inputs;
        DenseTensor joint = DenseTensor::scalar(1.0);
        std::function<void(const Formula&)> leaves = [&](const Formula& f) {
          if (f.is(Connective::Tensor)) {
            leaves(f.left());
            leaves(f.right());
            return;
          }
          inputs.push_back(random_tensor(rng, interpret_type(f, m).dims()));
          joint = outer(joint, inputs.back());
        };
        leaves(p.conclusion().source);
        DenseTensor via_delta = contract(d, inputs);
        DenseTensor via_cat = cat.apply(joint);
        worst = std::max(worst, max_abs_diff(via_cat, via_delta.reshaped({via_delta.size()})));
        ++checked;
      }
    }
  }
  double elapsed = seconds_since(start);
  o.require(worst <= 1e-9, "max deviation " + fmt("%.3g", worst));
  o.require(elapsed < 30.0, "took " + fmt("%.2f", elapsed) + " s");
  if (o.pass)
    o.detail = std::to_string(checked) + " proof/dimension cases, max deviation " + fmt("%.3g", worst) +
               ", " + fmt("%.2f", elapsed) + " s";
  return o;
}

const ReadingReport* reading(const RunReport& r, const std::string& einstein) {
  for (const auto& rd : r.readings)
    if (rd.einstein == einstein) return &rd;
  return nullptr;
}

Outcome frobenius() {
  Outcome o;
  Lexicon lex = load_lexicon(kData + "/dutch.lex");
  o.require(lex.atom_map().at("n").dim == 4 && lex.atom_map().at("s").dim == 3, "demo lexicon is not N=4, S=3");
  RunReport r = cmd_derive(lex, {"mannen", "die", "vrouwen", "haten"}, "n", PipelineOptions{});
  DenseTensor mannen = lex.entries("mannen")[0].tensor;
  DenseTensor vrouwen = lex.entries("vrouwen")[0].tensor;
  DenseTensor h = sum_axis(lex.entries("haten")[0].tensor, 2);
  auto subj = reading(r, "mannen_i ⊗ die_{ijkl} ⊗ vrouwen_m ⊗ haten_{mkl} → v_j");
  auto obj = reading(r, "mannen_i ⊗ die_{ijkl} ⊗ vrouwen_m ⊗ haten_{kml} → v_j");
  o.require(subj && obj, "subject or object reading missing");
  if (!o.pass) return o;
  double ds = max_abs_diff(subj->value, ew_mul(mannen, mat_apply_T(h, vrouwen)));
  double dobj = max_abs_diff(obj->value, ew_mul(mannen, mat_apply(h, vrouwen)));
  o.require(ds <= 1e-9, "subject deviation " + fmt("%.3g", ds));
  o.require(dobj <= 1e-9, "object deviation " + fmt("%.3g", dobj));
  if (o.pass) o.detail = "subject dev " + fmt("%.3g", ds) + ", object dev " + fmt("%.3g", dobj);
  return o;
}

Outcome identity_map() {
  Outcome o;
  Lexicon lex = load_lexicon(kData + "/english.lex");
  RunReport r = cmd_derive(lex, {"dream"}, "np\\s", PipelineOptions{});
  DenseTensor dream = lex.entries("dream")[0].tensor;
  o.require(r.readings.size() == 1, std::to_string(r.readings.size()) + " readings");
  if (o.pass) o.require(r.readings[0].value == dream, "result differs from dream");
  if (o.pass) o.detail = "bitwise equal over " + std::to_string(dream.size()) + " entries";
  return o;
}

Outcome lifted() {
  Outcome o;
  Lexicon lex = load_lexicon(kData + "/english.lex");
  RunReport r = cmd_derive(lex, {"poets"}, "s/(np\\s)", PipelineOptions{});
  DenseTensor poets = lex.entries("poets")[0].tensor;
  o.require(r.readings.size() == 1, std::to_string(r.readings.size()) + " readings");
  if (!o.pass) return o;
  const DenseTensor& R = r.readings[0].value;
  std::size_t n = poets.size(), s = lex.atom_map().at("s").dim;
  o.require(R.shape() == std::vector<std::size_t>{s, n, s}, "wrong shape");
  if (!o.pass) return o;
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < s; ++l)
        if (R.at({j, k, l}) != (j == l ? poets[k] : 0.0)) o.require(false, "entry mismatch");
  if (o.pass) o.detail = "exact over " + std::to_string(R.size()) + " entries";
  return o;
}

Outcome relpron() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t s = 1; s <= 4; ++s) {
      DenseTensor t = relpron_tensor(n, s);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < s; ++l)
              if (t.at({i, j, k, l}) != (i == j && j == k ? 1.0 : 0.0))
                o.require(false, "mismatch at n=" + std::to_string(n) + " s=" + std::to_string(s));
    }
  if (o.pass) o.detail = "exact for all n <= 5, s <= 4";
  return o;
}

std::size_t derive_fingerprint() {
  std::string all;
  for (const auto& g : golden_suite())
    for (const auto& p : derive(g.goal, config(g.postulates)).proofs)
      all += serialize_proof(p) + "|" + print_delta(delta_of_proof(p, atoms(2, 3))) + "\n";
  return std::hash<std::string>{}(all);
}

Outcome properties() {
  Outcome o;
  const BaseSpace N{"N", 3}, S{"S", 2};

  // Normalize confluence.
  std::mt19937_64 rng(12345);
  int confluent = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Delta d = random_delta(rng, 4, {N, S}, true);
    std::vector<BaseSpace> loops;
    RawDelta raw = scramble(d, rng, {N, S}, loops);
    std::vector<BaseSpace> all_loops = d.loops();
    all_loops.insert(all_loops.end(), loops.begin(), loops.end());
    Delta expected(d.pairs(), d.domain(), d.codomain(), all_loops);
    bool ok = true;
    for (int k = 0; k < 3; ++k) {
      std::mt19937_64 order(rng());
      ok = ok && alpha_equiv(normalize(raw, &order), expected);
    }
    confluent += ok;
  }
  o.require(confluent == 1000, "normalize confluence failed on " + std::to_string(1000 - confluent) + " cases");

  // Contraction against the slot-enumeration oracle.
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    Delta d = random_delta(rng, 3, small_spaces(rng, 4), true);
    std::vector<DenseTensor> inputs;
    for (std::size_t slot = 0; slot < d.domain().size();) {
      std::size_t rank = 1 + rng() % std::min<std::size_t>(3, d.domain().size() - slot);
      std::vector<std::size_t> shape;
      for (std::size_t k = 0; k < rank; ++k) shape.push_back(d.domain()[slot + k].space.dim);
      inputs.push_back(random_tensor(rng, shape));
      slot += rank;
    }
    worst = std::max(worst, max_abs_diff(contract(d, inputs), brute_contract(d, inputs)));
  }
  o.require(worst <= 1e-12, "contract oracle deviation " + fmt("%.3g", worst));

  // Snake identities.
  double snake = 0.0;
  for (std::size_t n = 1; n <= 5; ++n) {
    SpaceSignature a{{{"N", n}}};
    Delta id = Delta::identity(a);
    Delta left = compose(tensor_delta(Delta::epsilon(a), id), tensor_delta(id, Delta::eta(a)));
    Delta right = compose(tensor_delta(id, Delta::epsilon(a)), tensor_delta(Delta::eta(a), id));
    DenseTensor v = random_tensor(rng, {n});
    snake = std::max({snake, max_abs_diff(contract(left, {v}), v), max_abs_diff(contract(right, {v}), v)});
    using M = LinearMapMatrix;
    M l = M::epsilon(n).tensor(M::identity(n)).after(M::identity(n).tensor(M::eta(n)));
    snake = std::max(snake, max_abs_diff(l.matrix(), M::identity(n).matrix()));
  }
  o.require(snake <= 1e-12, "snake deviation " + fmt("%.3g", snake));

  // Determinism.
  std::size_t h1 = derive_fingerprint(), h2 = derive_fingerprint(), h3 = derive_fingerprint();
  o.require(h1 == h2 && h2 == h3, "derive output not stable across runs");

  // Soundness.
  std::size_t total = 0, sound = 0;
  for (const auto& g : golden_suite())
    for (const auto& p : derive(g.goal, config(g.postulates)).proofs) {
      ++total;
      sound += check_proof(p) && p.conclusion() == g.goal;
    }
  o.require(sound == total, std::to_string(total - sound) + " unsound proofs");

  if (o.pass)
    o.detail = "1000 confluent, contract dev " + fmt("%.3g", worst) + ", snake dev " + fmt("%.3g", snake) +
               ", 3 identical runs, " + std::to_string(total) + " proofs checked";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"ambiguity reproduction", ambiguity},
      {"categorical and delta semantics agree", theorem},
      {"frobenius end-to-end meanings", frobenius},
      {"intransitive identity map", identity_map},
      {"lifted subject interpretation", lifted},
      {"relative pronoun tensor", relpron},
      {"property suites", properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
