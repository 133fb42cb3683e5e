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
 * Process-wide knobs: buffer alignment and kernel worker count.
 */
#pragma once

#include <cstddef>

namespace diaq {

enum class Precision { single_, double_ };

/// Byte alignment used for newly allocated value arrays. Defaults to 64.
[[nodiscard]] std::size_t default_alignment() noexcept;

/// Must be a power of two no smaller than alignof(double).
void set_default_alignment(std::size_t bytes);

/// Worker count for kernel-internal parallelism. Initialised from
/// DIAQ_THREADS when set, otherwise all available cores.
[[nodiscard]] int num_threads() noexcept;
void set_num_threads(int n);

/// Workers actually available (1 when built without OpenMP).
[[nodiscard]] int hardware_threads() noexcept;

} // namespace diaq
