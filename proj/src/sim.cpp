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

#include "diaq/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "diaq/config.hpp"
#include "diaq/error.hpp"
#include "diaq/linalg.hpp"
#include "diaq/simd/kernels.hpp"

namespace diaq {
namespace {

using std::size_t;
using Clock = std::chrono::steady_clock;

// Below this many amplitudes the OpenMP fork costs more than the work.
constexpr size_t kParallelThreshold = size_t{1} << 12;

[[nodiscard]] std::int64_t elapsed_ns(Clock::time_point since) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                                since)
        .count();
}

template <class T> void prepare_output(const StateVector<T> &x, StateVector<T> &y) {
    y.n_qubits = x.n_qubits;
    if (y.amps.size() != x.size()) {
        y.amps = PlanarVector<T>(x.size());
    } else {
        std::fill(y.amps.re.begin(), y.amps.re.end(), T{0});
        std::fill(y.amps.im.begin(), y.amps.im.end(), T{0});
    }
}

template <class T>
[[nodiscard]] std::uint64_t weight(const StateVector<T> &x, size_t i) {
    const double re = x.amps.re[i];
    const double im = x.amps.im[i];
    return static_cast<std::uint64_t>(
        std::llround((re * re + im * im) / kProbabilityResolution));
}

} // namespace

template <class T> StateVector<T> init_state(int n_qubits, int max_qubits) {
    if (n_qubits < 1) {
        throw RangeError("a state needs at least one qubit");
    }
    if (n_qubits > max_qubits) {
        throw ResourceError(std::to_string(n_qubits) +
                            " qubits exceeds the cap of " +
                            std::to_string(max_qubits));
    }
    StateVector<T> s;
    s.n_qubits = n_qubits;
    s.amps = PlanarVector<T>(size_t{1} << static_cast<size_t>(n_qubits));
    s.amps.re[0] = T{1};
    return s;
}

template <class T> double norm(const StateVector<T> &x) {
    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double re = x.amps.re[i];
        const double im = x.amps.im[i];
        acc += re * re + im * im;
    }
    return std::sqrt(acc);
}

template <class T>
void apply_placed(const Placement<T> &p, const StateVector<T> &x,
                  StateVector<T> &y) {
    const size_t n = x.size();
    const size_t nm = p.m.n_dim();
    if (p.dim_a * nm * p.dim_b != n) {
        throw ShapeError("placement of size " +
                         std::to_string(p.dim_a * nm * p.dim_b) +
                         " does not match a state of size " +
                         std::to_string(n));
    }
    prepare_output(x, y);
    const auto &k = simd::kernels<T>();
    const size_t dim_a = p.dim_a;
    const size_t dim_b = p.dim_b;
    const size_t block = nm * dim_b;
    const bool parallel = n >= kParallelThreshold;
    const T *x_re = x.amps.re.data();
    const T *x_im = x.amps.im.data();
    T *y_re = y.amps.re.data();
    T *y_im = y.amps.im.data();

    // Diagonals are processed one after another in ascending order; inside a
    // diagonal every (rep, i, j) writes a distinct y element.
    for (const auto &[d, diag] : p.m.diagonals()) {
        const size_t len = diag.size();
        const size_t shift = dim_b * (d < 0 ? static_cast<size_t>(-d)
                                            : static_cast<size_t>(d));
        const size_t x_off = d >= 0 ? shift : 0;
        const size_t y_off = d < 0 ? shift : 0;
        const T *v_re = diag.values.re.data();
        const T *v_im = diag.values.im.data();
        if (dim_b == 1) {
            // Contiguous along i: one complex multiply-accumulate per block.
            const auto reps = static_cast<std::int64_t>(dim_a);
#pragma omp parallel for schedule(static) num_threads(num_threads()) if (parallel)
            for (std::int64_t rep = 0; rep < reps; ++rep) {
                const size_t base = static_cast<size_t>(rep) * block;
                k.cmac(v_re, v_im, x_re + base + x_off, x_im + base + x_off,
                       y_re + base + y_off, y_im + base + y_off, len);
            }
        } else {
            const auto tasks = static_cast<std::int64_t>(dim_a * len);
#pragma omp parallel for schedule(static) num_threads(num_threads()) if (parallel)
            for (std::int64_t t = 0; t < tasks; ++t) {
                const size_t rep = static_cast<size_t>(t) / len;
                const size_t i = static_cast<size_t>(t) % len;
                const size_t base = rep * block + i * dim_b;
                k.axpy(v_re[i], v_im[i], x_re + base + x_off,
                       x_im + base + x_off, y_re + base + y_off,
                       y_im + base + y_off, dim_b);
            }
        }
    }
}

template <class T>
StateVector<T> apply_placed(const Placement<T> &p, const StateVector<T> &x) {
    StateVector<T> y;
    apply_placed(p, x, y);
    return y;
}

template <class T>
void apply_dense(const Placement<T> &p, const StateVector<T> &x,
                 StateVector<T> &y) {
    const size_t n = x.size();
    const auto nq = static_cast<size_t>(x.n_qubits);
    const size_t k = p.targets.size();
    if (k == 0 || p.gate.n_dim() != (size_t{1} << k)) {
        throw ShapeError("placement has no gate matrix for its targets");
    }
    if (p.dim_a * p.m.n_dim() * p.dim_b != n || (size_t{1} << nq) != n) {
        throw ShapeError("placement does not match the state size");
    }
    for (int q : p.targets) {
        if (q < 0 || static_cast<size_t>(q) >= nq) {
            throw RangeError("target qubit outside the state");
        }
    }
    prepare_output(x, y);

    const size_t gn = size_t{1} << k;
    const DenseMatrix<T> g = to_dense(p.gate);
    std::vector<T> g_re(gn * gn);
    std::vector<T> g_im(gn * gn);
    for (size_t i = 0; i < gn * gn; ++i) {
        g_re[i] = g.data[i].real();
        g_im[i] = g.data[i].imag();
    }

    // Offset of gate-local basis state r inside a group.
    std::vector<size_t> offsets(gn, 0);
    std::vector<size_t> masks;
    for (size_t t = 0; t < k; ++t) {
        const size_t mask = size_t{1}
                            << (nq - 1 - static_cast<size_t>(p.targets[t]));
        masks.push_back(mask);
        for (size_t r = 0; r < gn; ++r) {
            if ((r >> (k - 1 - t)) & 1U) {
                offsets[r] |= mask;
            }
        }
    }
    std::sort(masks.begin(), masks.end());

    const T *x_re = x.amps.re.data();
    const T *x_im = x.amps.im.data();
    T *y_re = y.amps.re.data();
    T *y_im = y.amps.im.data();
    const auto groups = static_cast<std::int64_t>(n >> k);
    const bool parallel = n >= kParallelThreshold;
#pragma omp parallel num_threads(num_threads()) if (parallel)
    {
        std::vector<T> in_re(gn);
        std::vector<T> in_im(gn);
#pragma omp for schedule(static)
        for (std::int64_t grp = 0; grp < groups; ++grp) {
            // Spread the group index around the target bits.
            size_t base = static_cast<size_t>(grp);
            for (size_t mask : masks) {
                base = ((base & ~(mask - 1)) << 1) | (base & (mask - 1));
            }
            for (size_t c = 0; c < gn; ++c) {
                in_re[c] = x_re[base | offsets[c]];
                in_im[c] = x_im[base | offsets[c]];
            }
            for (size_t r = 0; r < gn; ++r) {
                T acc_re{0};
                T acc_im{0};
                for (size_t c = 0; c < gn; ++c) {
                    const T gr = g_re[r * gn + c];
                    const T gi = g_im[r * gn + c];
                    acc_re += gr * in_re[c] - gi * in_im[c];
                    acc_im += gr * in_im[c] + gi * in_re[c];
                }
                y_re[base | offsets[r]] = acc_re;
                y_im[base | offsets[r]] = acc_im;
            }
        }
    }
}

template <class T>
StateVector<T> apply_dense(const Placement<T> &p, const StateVector<T> &x) {
    StateVector<T> y;
    apply_dense(p, x, y);
    return y;
}

std::string bitstring(std::uint64_t index, int n_qubits) {
    std::string s(static_cast<size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if ((index >> (n_qubits - 1 - q)) & 1U) {
            s[static_cast<size_t>(q)] = '1';
        }
    }
    return s;
}

template <class T>
Counts measure_all_sample(const StateVector<T> &x, std::uint64_t shots,
                          std::uint64_t seed) {
    const size_t n = x.size();
    double total_p = 0.0;
    std::uint64_t total_w = 0;
    for (size_t i = 0; i < n; ++i) {
        const double re = x.amps.re[i];
        const double im = x.amps.im[i];
        total_p += re * re + im * im;
        total_w += weight(x, i);
    }
    // Single precision drifts by ~1e-7 per gate, so it gets a wider band.
    const double tolerance = sizeof(T) == sizeof(float) ? 1e-4 : 1e-6;
    if (!(std::abs(total_p - 1.0) <= tolerance)) {
        throw NormalizationError("state norm^2 is " + std::to_string(total_p) +
                                 ", expected 1");
    }
    Counts counts;
    if (shots == 0) {
        return counts;
    }
    if (total_w == 0) {
        throw NormalizationError("state has no resolvable probability mass");
    }

    std::mt19937_64 gen(seed);
    // 2^64 mod total_w; draws below it are rejected so x % total_w is unbiased.
    const std::uint64_t threshold = (0 - total_w) % total_w;
    std::vector<std::uint64_t> draws(shots);
    for (auto &draw : draws) {
        std::uint64_t v = gen();
        while (v < threshold) {
            v = gen();
        }
        draw = v % total_w;
    }
    std::sort(draws.begin(), draws.end());

    std::uint64_t cumulative = 0;
    size_t j = 0;
    for (size_t i = 0; i < n && j < draws.size(); ++i) {
        cumulative += weight(x, i);
        std::uint64_t hits = 0;
        while (j < draws.size() && draws[j] < cumulative) {
            ++hits;
            ++j;
        }
        if (hits > 0) {
            counts.emplace(bitstring(i, x.n_qubits), hits);
        }
    }
    return counts;
}

std::string_view backend_name(Backend b) noexcept {
    return b == Backend::dense ? "dense" : "diaq";
}

Backend parse_backend(std::string_view name) {
    if (name == "dense") {
        return Backend::dense;
    }
    if (name == "diaq") {
        return Backend::diaq;
    }
    throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

template <class T>
RunResult<T> run(const Circuit &circuit, const RunOptions &opts) {
    validate(circuit);
    RunResult<T> result;
    result.backend = opts.backend;
    result.seed = opts.seed;
    result.shots = opts.shots;

    // Check the cap before compiling anything.
    StateVector<T> state = init_state<T>(circuit.n_qubits, opts.max_qubits);
    StateVector<T> scratch;

    const auto t_compile = Clock::now();
    auto placements =
        fuse_pass(compile<T>(circuit, opts.span_limit), opts.fusion);
    result.timings_ns["compile"] = elapsed_ns(t_compile);
    result.placements = placements.size();

    result.per_gate_ns.reserve(placements.size());
    const auto t_apply = Clock::now();
    for (const auto &p : placements) {
        const auto t_gate = Clock::now();
        if (opts.backend == Backend::diaq) {
            apply_placed(p, state, scratch);
        } else {
            apply_dense(p, state, scratch);
        }
        std::swap(state, scratch);
        result.per_gate_ns.push_back(elapsed_ns(t_gate));
        if (opts.check_norm) {
            const double nrm = norm(state);
            if (std::abs(nrm - 1.0) > 1e-10) {
                throw NormalizationError("norm drifted to " +
                                         std::to_string(nrm) + " after '" +
                                         p.label + "'");
            }
        }
    }
    result.timings_ns["apply_total"] = elapsed_ns(t_apply);

    const auto t_sample = Clock::now();
    result.counts = measure_all_sample(state, opts.shots, opts.seed);
    result.timings_ns["sample"] = elapsed_ns(t_sample);

    if (opts.keep_state) {
        result.state = std::move(state);
    }
    return result;
}

#define DIAQ_INSTANTIATE(T)                                                    \
    template StateVector<T> init_state<T>(int, int);                           \
    template double norm(const StateVector<T> &);                              \
    template void apply_placed(const Placement<T> &, const StateVector<T> &,   \
                               StateVector<T> &);                              \
    template StateVector<T> apply_placed(const Placement<T> &,                 \
                                         const StateVector<T> &);              \
    template void apply_dense(const Placement<T> &, const StateVector<T> &,    \
                              StateVector<T> &);                               \
    template StateVector<T> apply_dense(const Placement<T> &,                  \
                                        const StateVector<T> &);               \
    template Counts measure_all_sample(const StateVector<T> &, std::uint64_t,  \
                                       std::uint64_t);                         \
    template RunResult<T> run<T>(const Circuit &, const RunOptions &);

DIAQ_INSTANTIATE(float)
DIAQ_INSTANTIATE(double)

#undef DIAQ_INSTANTIATE

} // namespace diaq
