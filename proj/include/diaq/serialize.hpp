// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON form of a DiaqMatrix: {"n": N, "diags": {"<d>": [[re, im], ...]}}.
 */
#pragma once

#include <json.hpp>

#include "matrix.hpp"

namespace diaq {

template <class T> [[nodiscard]] nlohmann::json to_json(const DiaqMatrix<T> &a);

/// Throws ShapeError when a diagonal has the wrong length.
template <class T>
[[nodiscard]] DiaqMatrix<T> matrix_from_json(const nlohmann::json &j);

} // namespace diaq
