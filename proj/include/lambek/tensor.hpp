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

#ifndef LAMBEK_TENSOR_HPP_
#define LAMBEK_TENSOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lambek/delta.hpp"
#include "lambek/formula.hpp"

namespace lambek {

/// Dense real tensor, row-major (last index fastest). Rank 0 is a scalar
/// holding one entry.
class DenseTensor {
 public:
  DenseTensor() : data_(1, 0.0) {}
  /// Zero tensor of the given shape.
  explicit DenseTensor(std::vector<std::size_t> shape);
  /// Throws ShapeError on a length mismatch, zero dimensions or
  /// non-finite entries.
  DenseTensor(std::vector<std::size_t> shape, std::vector<double> data);

  static DenseTensor scalar(double x) { return DenseTensor({}, {x}); }
  static DenseTensor vector(std::vector<double> v);
  static DenseTensor matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<double>& data() const { return data_; }

  double operator[](std::size_t flat) const { return data_[flat]; }
  double& operator[](std::size_t flat) { return data_[flat]; }

  std::size_t flat_index(std::span<const std::size_t> index) const;
  double at(std::initializer_list<std::size_t> index) const;
  double at(std::span<const std::size_t> index) const { return data_[flat_index(index)]; }

  /// Same data, new shape of equal total size.
  DenseTensor reshaped(std::vector<std::size_t> shape) const;

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

/// Largest absolute entrywise difference; throws ShapeError on shape mismatch.
double max_abs_diff(const DenseTensor& a, const DenseTensor& b);

/// Outer product, a's indices first.
DenseTensor outer(const DenseTensor& a, const DenseTensor& b);

/// Evaluates a delta on concrete tensors by Einstein summation.
///
/// The inputs occupy consecutive domain slots (input k covers as many slots
/// as its rank, with matching dimensions). Each linked pair becomes one
/// summation index: pairs inside the domain contract, domain-codomain pairs
/// rename, and codomain-codomain pairs emit identity structure. Inputs are
/// folded in left to right, contracting a pair as soon as both ends are
/// present. The result has the codomain's shape.
DenseTensor contract(const Delta& d, const std::vector<DenseTensor>& inputs);

/// The full matrix of a delta, shape [dim(codomain), dim(domain)].
DenseTensor delta_matrix(const Delta& d);

/// Identity tensor over `space` ⊗ `space`.
DenseTensor eta(const SpaceSignature& space);

/// Inner product of equally shaped tensors.
double epsilon_apply(const DenseTensor& u, const DenseTensor& v);

/// Δ: vector → diagonal matrix.
DenseTensor frob_delta_map(const DenseTensor& v);
/// μ: square matrix → its diagonal.
DenseTensor frob_mu(const DenseTensor& m);
/// ι: sum of coefficients.
double frob_iota(const DenseTensor& v);
/// ζ: constant vector with value `lambda`.
DenseTensor frob_zeta(std::size_t dim, double lambda = 1.0);

/// Elementwise product of equally shaped tensors.
DenseTensor ew_mul(const DenseTensor& a, const DenseTensor& b);
/// m · v for m of shape [r, c] and v of length c.
DenseTensor mat_apply(const DenseTensor& m, const DenseTensor& v);
/// mᵀ · v for m of shape [r, c] and v of length r.
DenseTensor mat_apply_T(const DenseTensor& m, const DenseTensor& v);
/// Sums out one axis.
DenseTensor sum_axis(const DenseTensor& t, std::size_t axis);

/// Cosine similarity of two equally shaped tensors (0 when either is zero).
double cosine(const DenseTensor& a, const DenseTensor& b);

/// A linear map between flattened spaces as a dense [codomain, domain] matrix.
class LinearMapMatrix {
 public:
  explicit LinearMapMatrix(DenseTensor matrix);

  std::size_t rows() const { return matrix_.shape()[0]; }
  std::size_t cols() const { return matrix_.shape()[1]; }
  const DenseTensor& matrix() const { return matrix_; }
  double operator()(std::size_t r, std::size_t c) const { return matrix_[r * cols() + c]; }

  static LinearMapMatrix identity(std::size_t dim);
  /// η as a map ℝ → V ⊗ V.
  static LinearMapMatrix eta(std::size_t dim);
  /// ε as a map V ⊗ V → ℝ.
  static LinearMapMatrix epsilon(std::size_t dim);
  static LinearMapMatrix frob_delta(std::size_t dim);
  static LinearMapMatrix frob_mu(std::size_t dim);
  static LinearMapMatrix frob_iota(std::size_t dim);
  static LinearMapMatrix frob_zeta(std::size_t dim, double lambda = 1.0);

  /// Applies the map to a flattened tensor.
  DenseTensor apply(const DenseTensor& x) const;

  /// this ∘ f
  LinearMapMatrix after(const LinearMapMatrix& f) const;
  /// this ⊗ g (Kronecker product)
  LinearMapMatrix tensor(const LinearMapMatrix& g) const;

 private:
  DenseTensor matrix_;
};

/// The relative pronoun's meaning in N⊗N⊗N⊗S, built as
/// (1_N ⊗ μ_N ⊗ 1_N ⊗ ζ_S) ∘ (η_N ⊗ η_N).
DenseTensor relpron_tensor(std::size_t n_dim, std::size_t s_dim);

}  // namespace lambek

#endif  // LAMBEK_TENSOR_HPP_
