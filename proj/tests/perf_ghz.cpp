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

// Indicative speedup of the diagonal backend over the dense-matrix backend on
// GHZ circuits. Not gated in CI; timings depend on the host.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <vector>

#include "diaq/config.hpp"
#include "diaq/sim.hpp"

using namespace diaq;

namespace {

constexpr int kReps = 5;

double mean_ns(const Circuit &c, Backend b) {
    RunOptions opts;
    opts.backend = b;
    opts.shots = 1024;
    opts.seed = 1;
    std::vector<double> t;
    for (int r = 0; r < kReps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        (void)run<double>(c, opts);
        t.push_back(std::chrono::duration<double, std::nano>(
                        std::chrono::steady_clock::now() - t0).count());
    }
    return std::accumulate(t.begin(), t.end(), 0.0) / double(t.size());
}

} // namespace

int main() {
    std::printf("threads=%d reps=%d\n", num_threads(), kReps);
    std::printf("n,mean_dense_ns,mean_diaq_ns,speedup\n");
    int slower = 0;
    for (int n = 18; n <= 22; ++n) {
        const auto c = ghz_circuit(n);
        const double d = mean_ns(c, Backend::dense);
        const double q = mean_ns(c, Backend::diaq);
        std::printf("%d,%.0f,%.0f,%.3f\n", n, d, q, d / q);
        std::fflush(stdout);
        slower += d / q <= 1.0;
    }
    std::printf("%s  mean_dense/mean_diaq > 1 for GHZ 18-22 (%d of 5 sizes)\n",
                slower == 0 ? "PASS" : "FAIL", 5 - slower);
    return slower == 0 ? 0 : 1;
}
