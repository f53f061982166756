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

#ifndef LAMBEK_CATEGORICAL_HPP_
#define LAMBEK_CATEGORICAL_HPP_

#include <cstddef>

#include "lambek/formula.hpp"
#include "lambek/proof.hpp"
#include "lambek/tensor.hpp"

namespace lambek {

/// Interprets a proof directly as a linear map, rule by rule, from
/// identities, η/ε insertions, permutations, composition and tensor
/// products. Independent of the delta path; the two must agree.
///
/// Throws InvalidProofError when the proof does not check, and
/// CapacityError when any intermediate space exceeds `cap` dimensions.
LinearMapMatrix categorical_eval(const Proof& p, const AtomMap& atom_map,
                                 std::size_t cap = 1'000'000);

}  // namespace lambek

#endif  // LAMBEK_CATEGORICAL_HPP_
