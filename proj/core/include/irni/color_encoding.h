// Copyright 2026 The IRNI Authors
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

#ifndef IRNI_COLOR_ENCODING_H_
#define IRNI_COLOR_ENCODING_H_

#include <span>
#include <vector>

#include "irni/coloring.h"
#include "irni/graph.h"

namespace irni {

// Per-vertex feature vectors of a uniform dimension.
using NodeFeatures = std::vector<std::vector<double>>;

inline constexpr RawColor kColorModulus = 12345;

// Reads one feature vector as a binary number, first entry most significant,
// reduced modulo kColorModulus. The leading entry may be any natural number
// and then acts as the most significant mixed-radix digit; all later entries
// must be 0 or 1. Throws InvalidInputError otherwise.
RawColor EncodeFeatureVector(std::span<const double> features);

// Encodes every vertex with EncodeFeatureVector() and compacts the results
// in increasing order of encoded value.
Coloring EncodeColors(const NodeFeatures& features);

// The raw encoded values, before compaction. Useful as Graph base colors.
std::vector<RawColor> EncodeRawColors(const NodeFeatures& features);

}  // namespace irni

#endif  // IRNI_COLOR_ENCODING_H_
