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

#include "diaq/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace diaq::simd {
namespace {

bool cpu_supports(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(DIAQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Isa::neon:
#if defined(DIAQ_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Isa detect() noexcept {
    if (const char *env = std::getenv("DIAQ_ISA"); env != nullptr) {
        try {
            const Isa requested = parse_isa(env);
            if (cpu_supports(requested)) {
                return requested;
            }
        } catch (const std::invalid_argument &) {
            // fall through to auto-detection
        }
    }
    if (cpu_supports(Isa::avx2)) {
        return Isa::avx2;
    }
    if (cpu_supports(Isa::neon)) {
        return Isa::neon;
    }
    return Isa::scalar;
}

std::atomic<Isa> &active() noexcept {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    case Isa::neon:
        return "neon";
    }
    return "unknown";
}

Isa parse_isa(std::string_view name) {
    if (name == "scalar") {
        return Isa::scalar;
    }
    if (name == "avx2") {
        return Isa::avx2;
    }
    if (name == "neon") {
        return Isa::neon;
    }
    throw std::invalid_argument("unknown instruction set '" +
                                std::string(name) + "'");
}

bool isa_available(Isa isa) noexcept { return cpu_supports(isa); }

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (cpu_supports(isa)) {
            out.push_back(isa);
        }
    }
    return out;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::invalid_argument("instruction set '" +
                                    std::string(isa_name(isa)) +
                                    "' is not available on this machine");
    }
    active().store(isa, std::memory_order_relaxed);
}

template <class T> const KernelTable<T> &kernels_for(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::invalid_argument("instruction set '" +
                                    std::string(isa_name(isa)) +
                                    "' is not available on this machine");
    }
    switch (isa) {
#if defined(DIAQ_HAVE_AVX2)
    case Isa::avx2:
        return detail::avx2_table<T>();
#endif
#if defined(DIAQ_HAVE_NEON)
    case Isa::neon:
        return detail::neon_table<T>();
#endif
    default:
        return detail::scalar_table<T>();
    }
}

template <class T> const KernelTable<T> &kernels() {
    return kernels_for<T>(active_isa());
}

template const KernelTable<float> &kernels_for<float>(Isa);
template const KernelTable<double> &kernels_for<double>(Isa);
template const KernelTable<float> &kernels<float>();
template const KernelTable<double> &kernels<double>();

} // namespace diaq::simd
