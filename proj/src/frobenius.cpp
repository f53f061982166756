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

#include <string>

#include "lambek/errors.hpp"
#include "lambek/tensor.hpp"

namespace lambek {

namespace {

void require_vector(const DenseTensor& v, const char* what) {
  if (v.rank() != 1) throw ShapeError(std::string(what) + " expects a vector");
}

}  // namespace

DenseTensor frob_delta_map(const DenseTensor& v) {
  require_vector(v, "Δ");
  std::size_t n = v.shape()[0];
  DenseTensor out({n, n});
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] = v[i];
  return out;
}

DenseTensor frob_mu(const DenseTensor& m) {
  if (m.rank() != 2 || m.shape()[0] != m.shape()[1]) throw ShapeError("μ expects a square matrix");
  std::size_t n = m.shape()[0];
  DenseTensor out({n});
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i * n + i];
  return out;
}

double frob_iota(const DenseTensor& v) {
  require_vector(v, "ι");
  double s = 0.0;
  for (double x : v.data()) s += x;
  return s;
}

DenseTensor frob_zeta(std::size_t dim, double lambda) {
  return DenseTensor({dim}, std::vector<double>(dim, lambda));
}

LinearMapMatrix::LinearMapMatrix(DenseTensor matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rank() != 2) throw ShapeError("a linear map needs a rank-2 matrix");
}

LinearMapMatrix LinearMapMatrix::identity(std::size_t dim) {
  DenseTensor m({dim, dim});
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return LinearMapMatrix(std::move(m));
}

LinearMapMatrix LinearMapMatrix::eta(std::size_t dim) {
  DenseTensor m({dim * dim, 1});
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return LinearMapMatrix(std::move(m));
}

LinearMapMatrix LinearMapMatrix::epsilon(std::size_t dim) {
  DenseTensor m({1, dim * dim});
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return LinearMapMatrix(std::move(m));
}

LinearMapMatrix LinearMapMatrix::frob_delta(std::size_t dim) {
  DenseTensor m({dim * dim, dim});
  for (std::size_t i = 0; i < dim; ++i) m[(i * dim + i) * dim + i] = 1.0;
  return LinearMapMatrix(std::move(m));
}

LinearMapMatrix LinearMapMatrix::frob_mu(std::size_t dim) {
  DenseTensor m({dim, dim * dim});
  for (std::size_t i = 0; i < dim; ++i) m[i * dim * dim + i * dim + i] = 1.0;
  return LinearMapMatrix(std::move(m));
}

LinearMapMatrix LinearMapMatrix::frob_iota(std::size_t dim) {
  return LinearMapMatrix(DenseTensor({1, dim}, std::vector<double>(dim, 1.0)));
}

LinearMapMatrix LinearMapMatrix::frob_zeta(std::size_t dim, double lambda) {
  return LinearMapMatrix(DenseTensor({dim, 1}, std::vector<double>(dim, lambda)));
}

DenseTensor LinearMapMatrix::apply(const DenseTensor& x) const {
  if (x.size() != cols())
    throw ShapeError("map with " + std::to_string(cols()) + " columns applied to " +
                     std::to_string(x.size()) + " entries");
  return mat_apply(matrix_, x.reshaped({x.size()}));
}

LinearMapMatrix LinearMapMatrix::after(const LinearMapMatrix& f) const {
  if (cols() != f.rows())
    throw ShapeError("cannot compose: " + std::to_string(cols()) + " vs " +
                     std::to_string(f.rows()));
  std::size_t r = rows(), k = cols(), c = f.cols();
  DenseTensor out({r, c});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t m = 0; m < k; ++m) {
      double a = matrix_[i * k + m];
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i * c + j] += a * f.matrix_[m * c + j];
    }
  return LinearMapMatrix(std::move(out));
}

LinearMapMatrix LinearMapMatrix::tensor(const LinearMapMatrix& g) const {
  std::size_t r1 = rows(), c1 = cols(), r2 = g.rows(), c2 = g.cols();
  DenseTensor out({r1 * r2, c1 * c2});
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < c1; ++j) {
      double a = matrix_[i * c1 + j];
      if (a == 0.0) continue;
      for (std::size_t k = 0; k < r2; ++k)
        for (std::size_t l = 0; l < c2; ++l)
          out[(i * r2 + k) * (c1 * c2) + j * c2 + l] = a * g.matrix_[k * c2 + l];
    }
  return LinearMapMatrix(std::move(out));
}

DenseTensor relpron_tensor(std::size_t n_dim, std::size_t s_dim) {
  using M = LinearMapMatrix;
  M unit = M::eta(n_dim).tensor(M::eta(n_dim));
  M merge = M::identity(n_dim)
                .tensor(M::frob_mu(n_dim))
                .tensor(M::identity(n_dim))
                .tensor(M::frob_zeta(s_dim));
  M word = merge.after(unit);
  return word.matrix().reshaped({n_dim, n_dim, n_dim, s_dim});
}

}  // namespace lambek
