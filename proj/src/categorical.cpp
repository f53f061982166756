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

#include "lambek/categorical.hpp"

#include <Eigen/SparseCore>
#include <unsupported/Eigen/KroneckerProduct>
#include <string>
#include <vector>

#include "lambek/errors.hpp"

namespace lambek {

namespace {

using Sparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;

constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 26;

class Evaluator {
 public:
  Evaluator(const AtomMap& atom_map, std::size_t cap) : atom_map_(atom_map), cap_(cap) {}

  Sparse eval(const Proof& p) {
    const Arrow& c = p.conclusion();
    switch (p.rule()) {
      case RuleName::Axiom:
        return id(dim(c.source));
      case RuleName::ResUnder: {  // f: A⊗B → C  ⟹  (1_A ⊗ f) ∘ (η_A ⊗ 1_B)
        std::size_t a = dim(c.target.left()), b = dim(c.source);
        Sparse f = eval(p.premises()[0]);
        return compose(kron(id(a), f), kron(eta(a), id(b)));
      }
      case RuleName::ResUnderInv: {  // h: B → A⊗C  ⟹  (ε_A ⊗ 1_C) ∘ (1_A ⊗ h)
        std::size_t a = dim(c.source.left()), cc = dim(c.target);
        Sparse h = eval(p.premises()[0]);
        return compose(kron(epsilon(a), id(cc)), kron(id(a), h));
      }
      case RuleName::ResOver: {  // f: A⊗B → C  ⟹  (f ⊗ 1_B) ∘ (1_A ⊗ η_B)
        std::size_t a = dim(c.source), b = dim(c.target.right());
        Sparse f = eval(p.premises()[0]);
        return compose(kron(f, id(b)), kron(id(a), eta(b)));
      }
      case RuleName::ResOverInv: {  // g: A → C⊗B  ⟹  (1_C ⊗ ε_B) ∘ (g ⊗ 1_B)
        std::size_t b = dim(c.source.right()), cc = dim(c.target);
        Sparse g = eval(p.premises()[0]);
        return compose(kron(id(cc), epsilon(b)), kron(g, id(b)));
      }
      case RuleName::ResDia:
      case RuleName::ResDiaInv:
      case RuleName::MonDia:
      case RuleName::MonBox:
        return eval(p.premises()[0]);
      case RuleName::AlphaL: {  // ◇A⊗(B⊗C) → (◇A⊗B)⊗C
        const Formula& s = c.source;
        Sparse f = eval(p.premises()[0]);
        return compose(f, associator(dim(s.left()), dim(s.right().left()), dim(s.right().right())));
      }
      case RuleName::AlphaR: {  // (A⊗B)⊗◇C → A⊗(B⊗◇C)
        const Formula& s = c.source;
        Sparse f = eval(p.premises()[0]);
        return compose(f, associator(dim(s.left().left()), dim(s.left().right()), dim(s.right())));
      }
      case RuleName::SigmaL: {  // f ∘ α⁻¹ ∘ (σ ⊗ 1) ∘ α
        const Formula& s = c.source;
        std::size_t a = dim(s.left()), b = dim(s.right().left()), cc = dim(s.right().right());
        Sparse f = eval(p.premises()[0]);
        Sparse swap = kron(symmetry(a, b), id(cc));
        return compose(f, compose(associator(b, a, cc),
                                  compose(swap, associator(a, b, cc))));
      }
      case RuleName::SigmaR: {  // f ∘ α ∘ (1 ⊗ σ) ∘ α⁻¹
        const Formula& s = c.source;
        std::size_t a = dim(s.left().left()), b = dim(s.left().right()), cc = dim(s.right());
        Sparse f = eval(p.premises()[0]);
        Sparse swap = kron(id(a), symmetry(b, cc));
        return compose(f, compose(associator(a, cc, b),
                                  compose(swap, associator(a, b, cc))));
      }
      case RuleName::MonTensor: {
        Sparse f = eval(p.premises()[0]);
        Sparse g = eval(p.premises()[1]);
        return kron(f, g);
      }
      case RuleName::MonOver: {
        // f: A → B, g: C → D  ⟹  A⊗D → B⊗C:
        // (1_{B⊗C} ⊗ ε_D) ∘ (1_{B⊗C} ⊗ g ⊗ 1_D) ∘ (f ⊗ η_C ⊗ 1_D)
        const Arrow& fa = p.premises()[0].conclusion();
        const Arrow& ga = p.premises()[1].conclusion();
        std::size_t b = dim(fa.target), cc = dim(ga.source), d = dim(ga.target);
        Sparse f = eval(p.premises()[0]);
        Sparse g = eval(p.premises()[1]);
        Sparse first = kron(kron(f, eta(cc)), id(d));
        Sparse middle = kron(kron(id(b * cc), g), id(d));
        Sparse last = kron(id(b * cc), epsilon(d));
        return compose(last, compose(middle, first));
      }
      case RuleName::MonUnder: {
        // f: A → B, g: C → D  ⟹  B⊗C → A⊗D:
        // (ε_B ⊗ 1_{A⊗D}) ∘ (1_B ⊗ f ⊗ 1_{A⊗D}) ∘ (1_B ⊗ η_A ⊗ g)
        const Arrow& fa = p.premises()[0].conclusion();
        const Arrow& ga = p.premises()[1].conclusion();
        std::size_t a = dim(fa.source), b = dim(fa.target), d = dim(ga.target);
        Sparse f = eval(p.premises()[0]);
        Sparse g = eval(p.premises()[1]);
        Sparse first = kron(kron(id(b), eta(a)), g);
        Sparse middle = kron(kron(id(b), f), id(a * d));
        Sparse last = kron(epsilon(b), id(a * d));
        return compose(last, compose(middle, first));
      }
    }
    throw InvalidProofError("unhandled rule");
  }

 private:
  std::size_t dim(const Formula& f) const {
    return interpret_type(f, atom_map_).total_dim();
  }

  void guard(std::size_t n) const {
    if (n > cap_)
      throw CapacityError("intermediate space of dimension " + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(cap_));
  }

  Sparse id(std::size_t n) const {
    guard(n);
    Sparse m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    m.setIdentity();
    return m;
  }

  // Column vector Σ_i e_i ⊗ e_i.
  Sparse eta(std::size_t n) const {
    guard(n * n);
    Sparse m(static_cast<Eigen::Index>(n * n), 1);
    std::vector<Eigen::Triplet<double>> t;
    for (std::size_t i = 0; i < n; ++i) t.emplace_back(static_cast<int>(i * n + i), 0, 1.0);
    m.setFromTriplets(t.begin(), t.end());
    return m;
  }

  Sparse epsilon(std::size_t n) const {
    Sparse e = eta(n).transpose();
    return e;
  }

  // A⊗B → B⊗A.
  Sparse symmetry(std::size_t a, std::size_t b) const {
    guard(a * b);
    Sparse m(static_cast<Eigen::Index>(a * b), static_cast<Eigen::Index>(a * b));
    std::vector<Eigen::Triplet<double>> t;
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        t.emplace_back(static_cast<int>(j * a + i), static_cast<int>(i * b + j), 1.0);
    m.setFromTriplets(t.begin(), t.end());
    return m;
  }

  // (A⊗B)⊗C ≅ A⊗(B⊗C). Both sides flatten in the same order, so this is
  // the identity permutation, built explicitly.
  Sparse associator(std::size_t a, std::size_t b, std::size_t c) const {
    std::size_t n = a * b * c;
    guard(n);
    Sparse m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::vector<Eigen::Triplet<double>> t;
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t k = 0; k < c; ++k) {
          int left = static_cast<int>((i * b + j) * c + k);
          int right = static_cast<int>(i * (b * c) + (j * c + k));
          t.emplace_back(right, left, 1.0);
        }
    m.setFromTriplets(t.begin(), t.end());
    return m;
  }

  Sparse kron(const Sparse& x, const Sparse& y) const {
    guard(static_cast<std::size_t>(x.rows()) * static_cast<std::size_t>(y.rows()));
    guard(static_cast<std::size_t>(x.cols()) * static_cast<std::size_t>(y.cols()));
    Sparse out = Eigen::kroneckerProduct(x, y);
    return out;
  }

  Sparse compose(const Sparse& g, const Sparse& f) const {
    if (g.cols() != f.rows())
      throw InvalidProofError("internal composition mismatch: " + std::to_string(g.cols()) +
                              " vs " + std::to_string(f.rows()));
    Sparse out = g * f;
    out.prune(0.0);
    return out;
  }

  const AtomMap& atom_map_;
  std::size_t cap_;
};

}  // namespace

LinearMapMatrix categorical_eval(const Proof& p, const AtomMap& atom_map, std::size_t cap) {
  if (!check_proof(p)) throw InvalidProofError("proof does not check: " + serialize_proof(p));
  Evaluator ev(atom_map, cap);
  std::size_t rows = interpret_type(p.conclusion().target, atom_map).total_dim();
  std::size_t cols = interpret_type(p.conclusion().source, atom_map).total_dim();
  if (rows > cap || cols > cap || rows * cols > kMaxDenseEntries)
    throw CapacityError("dense result of " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " is too large");
  Sparse m = ev.eval(p);
  DenseTensor dense({rows, cols});
  for (Eigen::Index r = 0; r < m.outerSize(); ++r)
    for (Sparse::InnerIterator it(m, r); it; ++it)
      dense[static_cast<std::size_t>(it.row()) * cols + static_cast<std::size_t>(it.col())] =
          it.value();
  return LinearMapMatrix(std::move(dense));
}

}  // namespace lambek
