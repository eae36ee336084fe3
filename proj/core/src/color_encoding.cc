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

#include "irni/color_encoding.h"

#include <cmath>
#include <string>

#include "irni/errors.h"

namespace irni {

RawColor EncodeFeatureVector(std::span<const double> features) {
  RawColor value = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    const double x = features[i];
    if (!(x >= 0.0)) {
      throw InvalidInputError("feature entry " + std::to_string(i) +
                              " is negative or NaN");
    }
    if (x != std::floor(x) || !std::isfinite(x)) {
      throw InvalidInputError("feature entry " + std::to_string(i) +
                              " is not a natural number");
    }
    if (i == 0) {
      value = static_cast<RawColor>(std::fmod(x, static_cast<double>(kColorModulus)));
      continue;
    }
    if (x > 1.0) {
      throw InvalidInputError("feature entry " + std::to_string(i) +
                              " is not binary; only the leading entry may "
                              "exceed 1");
    }
    value = (2 * value + static_cast<RawColor>(x)) % kColorModulus;
  }
  return value;
}

std::vector<RawColor> EncodeRawColors(const NodeFeatures& features) {
  std::vector<RawColor> raw;
  raw.reserve(features.size());
  for (const auto& row : features) {
    if (row.size() != features.front().size()) {
      throw InvalidInputError("node features have non-uniform dimension");
    }
    raw.push_back(EncodeFeatureVector(row));
  }
  return raw;
}

Coloring EncodeColors(const NodeFeatures& features) {
  return Coloring::FromValues(EncodeRawColors(features));
}

}  // namespace irni
