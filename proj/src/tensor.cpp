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

#include "lambek/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "lambek/errors.hpp"

namespace lambek {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::string shape_string(const std::vector<std::size_t>& shape) {
  std::string s = "[";
  for (std::size_t k = 0; k < shape.size(); ++k) s += (k ? "," : "") + std::to_string(shape[k]);
  return s + "]";
}

void check_dims(const std::vector<std::size_t>& shape) {
  for (auto d : shape)
    if (d == 0) throw ShapeError("tensor dimensions must be positive, got " + shape_string(shape));
}

}  // namespace

DenseTensor::DenseTensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
  check_dims(shape_);
  data_.assign(product(shape_), 0.0);
}

DenseTensor::DenseTensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  check_dims(shape_);
  if (data_.size() != product(shape_))
    throw ShapeError("shape " + shape_string(shape_) + " needs " + std::to_string(product(shape_)) +
                     " entries, got " + std::to_string(data_.size()));
  for (double x : data_)
    if (!std::isfinite(x)) throw ShapeError("tensor entries must be finite");
}

DenseTensor DenseTensor::vector(std::vector<double> v) {
  std::size_t n = v.size();
  return DenseTensor({n}, std::move(v));
}

DenseTensor DenseTensor::matrix(std::size_t rows, std::size_t cols, std::vector<double> data) {
  return DenseTensor({rows, cols}, std::move(data));
}

std::size_t DenseTensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw ShapeError("index rank does not match tensor rank");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= shape_[k]) throw ShapeError("index out of range");
    flat = flat * shape_[k] + index[k];
  }
  return flat;
}

double DenseTensor::at(std::initializer_list<std::size_t> index) const {
  return data_[flat_index(std::span<const std::size_t>(index.begin(), index.size()))];
}

DenseTensor DenseTensor::reshaped(std::vector<std::size_t> shape) const {
  if (product(shape) != data_.size())
    throw ShapeError("cannot reshape " + shape_string(shape_) + " to " + shape_string(shape));
  return DenseTensor(std::move(shape), data_);
}

double max_abs_diff(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape())
    throw ShapeError("shape mismatch " + shape_string(a.shape()) + " vs " + shape_string(b.shape()));
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

DenseTensor outer(const DenseTensor& a, const DenseTensor& b) {
  std::vector<std::size_t> shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  DenseTensor out(shape);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

// ---------------------------------------------------------------------------
// Contraction

namespace {

/// A tensor whose axes carry summation labels.
struct LabelledTensor {
  std::vector<int> labels;
  std::vector<std::size_t> dims;
  std::vector<double> data;
};

std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

/// Multiplies a and b, summing every label that occurs twice among their
/// axes. Labels occurring once survive in order (a's first).
LabelledTensor einsum_pair(const LabelledTensor& a, const LabelledTensor& b) {
  std::map<int, int> count;
  std::map<int, std::size_t> dim_of;
  for (const auto* t : {&a, &b})
    for (std::size_t k = 0; k < t->labels.size(); ++k) {
      ++count[t->labels[k]];
      dim_of[t->labels[k]] = t->dims[k];
    }

  LabelledTensor out;
  std::vector<int> vars;
  for (const auto* t : {&a, &b})
    for (int l : t->labels)
      if (count[l] == 1) {
        out.labels.push_back(l);
        out.dims.push_back(dim_of[l]);
        vars.push_back(l);
      }
  for (const auto& [l, c] : count)
    if (c == 2) vars.push_back(l);
  out.data.assign(product(out.dims), 0.0);

  std::map<int, std::size_t> var_pos;
  for (std::size_t v = 0; v < vars.size(); ++v) var_pos[vars[v]] = v;
  auto stride_per_var = [&](const std::vector<int>& labels, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> per(vars.size(), 0);
    auto s = strides_of(dims);
    for (std::size_t k = 0; k < labels.size(); ++k) per[var_pos[labels[k]]] += s[k];
    return per;
  };
  auto sa = stride_per_var(a.labels, a.dims);
  auto sb = stride_per_var(b.labels, b.dims);
  auto so = stride_per_var(out.labels, out.dims);

  std::vector<std::size_t> vdims;
  for (int l : vars) vdims.push_back(dim_of[l]);
  std::vector<std::size_t> idx(vars.size(), 0);
  std::size_t oa = 0, ob = 0, oo = 0;
  for (;;) {
    out.data[oo] += a.data[oa] * b.data[ob];
    std::size_t k = vars.size();
    while (k > 0) {
      --k;
      if (++idx[k] < vdims[k]) {
        oa += sa[k];
        ob += sb[k];
        oo += so[k];
        break;
      }
      oa -= sa[k] * (vdims[k] - 1);
      ob -= sb[k] * (vdims[k] - 1);
      oo -= so[k] * (vdims[k] - 1);
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (vars.empty()) return out;
  }
}

}  // namespace

DenseTensor contract(const Delta& d, const std::vector<DenseTensor>& inputs) {
  std::map<int, int> label;
  for (std::size_t k = 0; k < d.pairs().size(); ++k) {
    label[d.pairs()[k].upper.id] = static_cast<int>(k);
    label[d.pairs()[k].lower.id] = static_cast<int>(k);
  }

  LabelledTensor work{{}, {}, {1.0}};
  std::size_t slot = 0;
  for (std::size_t n = 0; n < inputs.size(); ++n) {
    const DenseTensor& x = inputs[n];
    LabelledTensor in{{}, x.shape(), x.data()};
    for (std::size_t k = 0; k < x.rank(); ++k, ++slot) {
      if (slot >= d.domain().size())
        throw ShapeError("inputs have more axes than the delta has domain slots (" +
                         std::to_string(d.domain().size()) + ")");
      const IndexVar& v = d.domain()[slot];
      if (v.space.dim != x.shape()[k])
        throw ShapeError("input " + std::to_string(n) + " axis " + std::to_string(k) +
                         " has dimension " + std::to_string(x.shape()[k]) + ", slot space " +
                         v.space.label + " has " + std::to_string(v.space.dim));
      in.labels.push_back(label.at(v.id));
    }
    work = einsum_pair(work, in);
  }
  if (slot != d.domain().size())
    throw ShapeError("inputs cover " + std::to_string(slot) + " of " +
                     std::to_string(d.domain().size()) + " domain slots");

  // Remaining labels are domain-codomain pairs; codomain-codomain pairs
  // contribute identity structure.
  std::vector<std::size_t> out_shape;
  std::vector<int> out_labels;
  for (const auto& v : d.codomain()) {
    out_shape.push_back(v.space.dim);
    out_labels.push_back(label.at(v.id));
  }
  DenseTensor out(out_shape);
  std::vector<int> vars;
  std::vector<std::size_t> vdims;
  for (std::size_t k = 0; k < out_labels.size(); ++k)
    if (std::find(vars.begin(), vars.end(), out_labels[k]) == vars.end()) {
      vars.push_back(out_labels[k]);
      vdims.push_back(out_shape[k]);
    }
  auto var_index = [&](int l) {
    return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), l) - vars.begin());
  };
  std::vector<std::size_t> so(vars.size(), 0), sw(vars.size(), 0);
  auto os = strides_of(out_shape);
  for (std::size_t k = 0; k < out_labels.size(); ++k) so[var_index(out_labels[k])] += os[k];
  auto ws = strides_of(work.dims);
  for (std::size_t k = 0; k < work.labels.size(); ++k) sw[var_index(work.labels[k])] += ws[k];

  const double factor = d.loop_factor();
  std::vector<std::size_t> idx(vars.size(), 0);
  std::size_t oo = 0, ow = 0;
  for (;;) {
    out[oo] = work.data[ow] * factor;
    std::size_t k = vars.size();
    bool done = vars.empty();
    while (!done) {
      --k;
      if (++idx[k] < vdims[k]) {
        oo += so[k];
        ow += sw[k];
        break;
      }
      oo -= so[k] * (vdims[k] - 1);
      ow -= sw[k] * (vdims[k] - 1);
      idx[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

DenseTensor delta_matrix(const Delta& d) {
  std::vector<IndexVar> cod = d.codomain();
  cod.insert(cod.end(), d.domain().begin(), d.domain().end());
  Delta lifted(d.pairs(), {}, cod, d.loops());
  DenseTensor t = contract(lifted, {});
  return t.reshaped({d.codomain_signature().total_dim(), d.domain_signature().total_dim()});
}

DenseTensor eta(const SpaceSignature& space) {
  std::vector<std::size_t> shape = space.dims();
  shape.insert(shape.end(), shape.begin(), shape.end());
  DenseTensor out(shape);
  std::size_t n = space.total_dim();
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1.0;
  return out;
}

double epsilon_apply(const DenseTensor& u, const DenseTensor& v) {
  if (u.shape() != v.shape())
    throw ShapeError("inner product of shapes " + shape_string(u.shape()) + " and " +
                     shape_string(v.shape()));
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
  return s;
}

DenseTensor ew_mul(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape())
    throw ShapeError("elementwise product of shapes " + shape_string(a.shape()) + " and " +
                     shape_string(b.shape()));
  DenseTensor out(a.shape());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return out;
}

DenseTensor mat_apply(const DenseTensor& m, const DenseTensor& v) {
  if (m.rank() != 2 || v.rank() != 1 || m.shape()[1] != v.shape()[0])
    throw ShapeError("mat_apply: " + shape_string(m.shape()) + " · " + shape_string(v.shape()));
  std::size_t rows = m.shape()[0], cols = m.shape()[1];
  DenseTensor out({rows});
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r] += m[r * cols + c] * v[c];
  return out;
}

DenseTensor mat_apply_T(const DenseTensor& m, const DenseTensor& v) {
  if (m.rank() != 2 || v.rank() != 1 || m.shape()[0] != v.shape()[0])
    throw ShapeError("mat_apply_T: " + shape_string(m.shape()) + "ᵀ · " + shape_string(v.shape()));
  std::size_t rows = m.shape()[0], cols = m.shape()[1];
  DenseTensor out({cols});
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[c] += m[r * cols + c] * v[r];
  return out;
}

DenseTensor sum_axis(const DenseTensor& t, std::size_t axis) {
  if (axis >= t.rank()) throw ShapeError("sum_axis: axis out of range");
  std::vector<std::size_t> shape = t.shape();
  std::size_t inner = 1;
  for (std::size_t k = axis + 1; k < shape.size(); ++k) inner *= shape[k];
  std::size_t n = shape[axis];
  std::size_t outer_n = t.size() / (inner * n);
  shape.erase(shape.begin() + static_cast<std::ptrdiff_t>(axis));
  DenseTensor out(shape);
  for (std::size_t o = 0; o < outer_n; ++o)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t i = 0; i < inner; ++i) out[o * inner + i] += t[(o * n + a) * inner + i];
  return out;
}

double cosine(const DenseTensor& a, const DenseTensor& b) {
  double ab = epsilon_apply(a, b);
  double na = std::sqrt(epsilon_apply(a, a));
  double nb = std::sqrt(epsilon_apply(b, b));
  if (na == 0.0 || nb == 0.0) return 0.0;
  return ab / (na * nb);
}

}  // namespace lambek
