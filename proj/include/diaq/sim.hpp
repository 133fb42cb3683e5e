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
 * State-vector simulation with a dense reference backend and the DiaQ
 * fused-Kronecker backend, plus seeded measurement sampling.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circuit.hpp"
#include "gates.hpp"
#include "matrix.hpp"

namespace diaq {

inline constexpr int kDefaultMaxQubits = 30;

template <class T> struct StateVector {
    int n_qubits = 0;
    PlanarVector<T> amps;

    [[nodiscard]] std::size_t size() const noexcept { return amps.size(); }
    friend bool operator==(const StateVector &, const StateVector &) = default;
};

/// |0...0>. Throws ResourceError above max_qubits, RangeError below 1.
template <class T>
[[nodiscard]] StateVector<T> init_state(int n_qubits,
                                        int max_qubits = kDefaultMaxQubits);

/// Euclidean norm, accumulated in double.
template <class T> [[nodiscard]] double norm(const StateVector<T> &x);

/**
 * y = (I_dim_a (x) p.m (x) I_dim_b) x without materializing the product.
 * y is overwritten. Results do not depend on the worker count.
 */
template <class T>
void apply_placed(const Placement<T> &p, const StateVector<T> &x,
                  StateVector<T> &y);

template <class T>
[[nodiscard]] StateVector<T> apply_placed(const Placement<T> &p,
                                          const StateVector<T> &x);

/// Dense baseline: gathers the 2^k amplitudes of every basis group of
/// p.targets and multiplies by the dense gate matrix.
template <class T>
void apply_dense(const Placement<T> &p, const StateVector<T> &x,
                 StateVector<T> &y);

template <class T>
[[nodiscard]] StateVector<T> apply_dense(const Placement<T> &p,
                                         const StateVector<T> &x);

using Counts = std::map<std::string, std::uint64_t>;

/// Probabilities are rounded to this resolution before sampling so that
/// backends agreeing to ~1e-13 draw identical counts.
inline constexpr double kProbabilityResolution = 1e-12;

/**
 * Draws `shots` basis states from |amp|^2.
 *
 * Sampler contract: probabilities become integer weights
 * llround(p / 1e-12); std::mt19937_64 seeded with `seed` draws each shot
 * as an integer in [0, total weight) by rejection; draws are sorted and
 * resolved against the cumulative weights in one sweep. Throws
 * NormalizationError when |sum p - 1| > 1e-6.
 */
template <class T>
[[nodiscard]] Counts measure_all_sample(const StateVector<T> &x,
                                        std::uint64_t shots, std::uint64_t seed);

[[nodiscard]] std::string bitstring(std::uint64_t index, int n_qubits);

enum class Backend { dense, diaq };

[[nodiscard]] std::string_view backend_name(Backend b) noexcept;
[[nodiscard]] Backend parse_backend(std::string_view name);

struct RunOptions {
    Backend backend = Backend::diaq;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    bool fusion = false;
    int span_limit = kDefaultSpanLimit;
    bool keep_state = false;
    int max_qubits = kDefaultMaxQubits;
    /// Check the norm after every gate and throw NormalizationError when
    /// it drifts by more than 1e-10.
    bool check_norm = false;
};

template <class T> struct RunResult {
    Counts counts;
    std::optional<StateVector<T>> state;
    /// Phases "compile", "apply_total" and "sample", in nanoseconds.
    std::map<std::string, std::int64_t> timings_ns;
    std::vector<std::int64_t> per_gate_ns;
    Backend backend = Backend::diaq;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::size_t placements = 0;
};

/// Compile, optionally fuse, apply in order, sample.
template <class T>
[[nodiscard]] RunResult<T> run(const Circuit &circuit, const RunOptions &opts);

} // namespace diaq
