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

#include "diaq/config.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace diaq {
namespace {

std::atomic<std::size_t> g_alignment{64};

int initial_threads() noexcept {
    if (const char *env = std::getenv("DIAQ_THREADS"); env != nullptr) {
        char *end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && n > 0) {
            return static_cast<int>(n);
        }
    }
    return hardware_threads();
}

std::atomic<int> &threads() noexcept {
    static std::atomic<int> n{initial_threads()};
    return n;
}

} // namespace

std::size_t default_alignment() noexcept { return g_alignment.load(); }

void set_default_alignment(std::size_t bytes) {
    if (bytes < alignof(double) || (bytes & (bytes - 1)) != 0) {
        throw std::invalid_argument("alignment must be a power of two >= " +
                                    std::to_string(alignof(double)));
    }
    g_alignment.store(bytes);
}

int num_threads() noexcept { return threads().load(); }

void set_num_threads(int n) {
    if (n < 1) {
        throw std::invalid_argument("thread count must be positive");
    }
    threads().store(n);
}

int hardware_threads() noexcept {
#if defined(_OPENMP)
    return omp_get_num_procs();
#else
    return 1;
#endif
}

} // namespace diaq
