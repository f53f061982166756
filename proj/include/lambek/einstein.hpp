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

#ifndef LAMBEK_EINSTEIN_HPP_
#define LAMBEK_EINSTEIN_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lambek/delta.hpp"

namespace lambek {

enum class EinsteinStyle { Unicode, Ascii };

/// A named tensor occupying `rank` consecutive domain slots.
struct TensorName {
  std::string name;
  std::size_t rank = 0;
};

/// Index letters in alphabetic order starting at i: i..z, a..h, then i2, j2, ...
std::vector<std::string> index_letters(std::size_t n);

/// Contracted form with one letter per linked pair, assigned by first
/// occurrence over the domain slots and then the codomain slots:
///   Unicode  `mannen_i ⊗ die_{ijkl} ⊗ vrouwen_m ⊗ haten_{mkl} → v_j`
///   Ascii    `mannen[i] die[i,j,k,l] vrouwen[m] haten[m,k,l] -> v[j]`
/// Input ranks must add up to the domain slot count.
std::string print_einstein(const Delta& d, const std::vector<TensorName>& inputs,
                           std::string_view output, EinsteinStyle style = EinsteinStyle::Unicode);

/// Delta with every slot labelled in alphabetic order, domain first:
///   `δ^{i,k}_{j,l} : N_i ⊗ N_j ⊗ S_k → S_l`
std::string print_delta(const Delta& d, EinsteinStyle style = EinsteinStyle::Unicode);

/// Reads the contracted form back (either style). Letters must occur
/// exactly twice across inputs and output. Without an arrow, the letters
/// occurring once in the inputs form the output, in order of appearance.
Delta parse_einstein(std::string_view text, const SpaceSignature& domain,
                     const SpaceSignature& codomain);

/// δ^{uppers}_{lowers} over explicitly labelled slots. Each label list is
/// either comma separated or one character per label.
Delta delta_from_labels(std::string_view uppers, std::string_view lowers,
                        std::string_view domain_labels, std::string_view codomain_labels,
                        const SpaceSignature& domain, const SpaceSignature& codomain);

}  // namespace lambek

#endif  // LAMBEK_EINSTEIN_HPP_
